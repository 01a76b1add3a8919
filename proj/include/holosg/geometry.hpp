#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace holosg {

using cplx = std::complex<double>;

enum class HalfPlaneKind { Right, Upper };

struct Disc {
    cplx center;
    double radius;

    bool operator==(const Disc&) const = default;
};

struct HalfPlane {
    HalfPlaneKind kind;

    bool operator==(const HalfPlane&) const = default;
};

// Open planar region. The unit disc is stored as Disc{0, 1}; there is no
// separate representation for it.
class Domain {
public:
    static Domain unit_disc() { return Domain(Disc{0.0, 1.0}); }
    static Domain disc(cplx center, double radius);
    static Domain half_plane(HalfPlaneKind kind) { return Domain(HalfPlane{kind}); }

    bool is_disc() const { return std::holds_alternative<Disc>(shape_); }
    bool is_half_plane() const { return std::holds_alternative<HalfPlane>(shape_); }
    bool is_bounded() const { return is_disc(); }
    const Disc& as_disc() const { return std::get<Disc>(shape_); }
    const HalfPlane& as_half_plane() const { return std::get<HalfPlane>(shape_); }

    bool operator==(const Domain&) const = default;

    /// Compact text form: "unitdisc", "disc:cx,cy,r", "halfplane:right", "halfplane:upper".
    std::string to_string() const;
    static Domain parse(std::string_view text);

private:
    explicit Domain(std::variant<Disc, HalfPlane> shape) : shape_(shape) {}

    std::variant<Disc, HalfPlane> shape_;
};

bool contains(const Domain& d, cplx z);

/// Euclidean distance to the boundary. Throws DomainError when z is not in d.
double boundary_distance(const Domain& d, cplx z);

/// Deterministic interior sample points.
///
/// Discs: the center followed by 4*density concentric rings at radii
/// (1 - 2^-j) * radius, j = 1..4*density, each carrying 8*density points
/// starting at angle 0. Half-planes: a rectangular lattice of
/// (4*density+1) x (4*density) points inside a box of side kHalfPlaneBox*density.
std::vector<cplx> sample_grid(const Domain& d, int density);

/// Half-width of the half-plane sampling box per unit of density.
inline constexpr double kHalfPlaneBox = 2.0;

} // namespace holosg
