#include "holosg/geometry.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "holosg/errors.hpp"
#include "holosg/io.hpp"

namespace holosg {

Domain Domain::disc(cplx center, double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw BadParameter("disc radius must be positive, got " + format_double(radius));
    }
    return Domain(Disc{center, radius});
}

std::string Domain::to_string() const
{
    if (is_disc()) {
        const auto& d = as_disc();
        if (d.center == cplx(0.0) && d.radius == 1.0) {
            return "unitdisc";
        }
        return "disc:" + format_double(d.center.real()) + "," + format_double(d.center.imag()) + ","
            + format_double(d.radius);
    }
    return as_half_plane().kind == HalfPlaneKind::Right ? "halfplane:right" : "halfplane:upper";
}

Domain Domain::parse(std::string_view text)
{
    if (text == "unitdisc") {
        return unit_disc();
    }
    if (text == "halfplane:right") {
        return half_plane(HalfPlaneKind::Right);
    }
    if (text == "halfplane:upper") {
        return half_plane(HalfPlaneKind::Upper);
    }
    constexpr std::string_view prefix = "disc:";
    if (text.substr(0, prefix.size()) == prefix) {
        const auto values = parse_number_list(text.substr(prefix.size()), prefix.size());
        if (values.size() != 3) {
            throw ParseError("disc needs three numbers cx,cy,r", prefix.size());
        }
        if (!(values[2] > 0.0)) {
            throw ParseError("disc radius must be positive", prefix.size());
        }
        return disc({values[0], values[1]}, values[2]);
    }
    throw ParseError("unknown domain '" + std::string(text) + "'", 0);
}

bool contains(const Domain& d, cplx z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        return false;
    }
    if (d.is_disc()) {
        const auto& disc = d.as_disc();
        return std::abs(z - disc.center) < disc.radius;
    }
    return d.as_half_plane().kind == HalfPlaneKind::Right ? z.real() > 0.0 : z.imag() > 0.0;
}

double boundary_distance(const Domain& d, cplx z)
{
    if (!contains(d, z)) {
        throw DomainError("point " + format_complex(z) + " is not in " + d.to_string());
    }
    if (d.is_disc()) {
        const auto& disc = d.as_disc();
        return disc.radius - std::abs(z - disc.center);
    }
    return d.as_half_plane().kind == HalfPlaneKind::Right ? z.real() : z.imag();
}

std::vector<cplx> sample_grid(const Domain& d, int density)
{
    if (density < 1) {
        throw BadParameter("sample_grid density must be >= 1");
    }
    std::vector<cplx> points;
    if (d.is_disc()) {
        const auto& disc = d.as_disc();
        const int rings = 4 * density;
        const int per_ring = 8 * density;
        points.reserve(1 + static_cast<std::size_t>(rings * per_ring));
        points.push_back(disc.center);
        for (int j = 1; j <= rings; ++j) {
            const double r = (1.0 - std::ldexp(1.0, -j)) * disc.radius;
            for (int k = 0; k < per_ring; ++k) {
                const double angle = 2.0 * std::numbers::pi * k / per_ring;
                points.push_back(disc.center + std::polar(r, angle));
            }
        }
        return points;
    }

    // Lattice across the boundary line (columns) and into the half-plane (rows).
    const double box = kHalfPlaneBox * density;
    const int columns = 4 * density + 1;
    const int rows = 4 * density;
    const bool right = d.as_half_plane().kind == HalfPlaneKind::Right;
    points.reserve(static_cast<std::size_t>(columns * rows));
    for (int j = 1; j <= rows; ++j) {
        const double depth = box * j / rows;
        for (int i = 0; i < columns; ++i) {
            const double along = -box + 2.0 * box * i / (columns - 1);
            points.push_back(right ? cplx(depth, along) : cplx(along, depth));
        }
    }
    return points;
}

} // namespace holosg
