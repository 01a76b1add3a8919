#pragma once

#include <complex>
#include <ostream>
#include <utility>
#include <vector>

#include "holosg/expr.hpp"
#include "holosg/geometry.hpp"
#include "holosg/semiflow.hpp"
#include "holosg/series.hpp"
#include "holosg/spaces.hpp"

namespace holosg {

/// T(t)f = f∘phi(t, ·) at series level: series_compose(f, flow_series(G, t, N)).
SeriesFn apply(const HoloExpr& G, double t, const SeriesFn& f, double tol,
               const Domain& d = Domain::unit_disc());

// Matrix of T(t) on the monomial basis: column k holds the coefficients of
// phi(t, ·)^k truncated to degree N.
class OperatorMatrix {
public:
    static OperatorMatrix from_flow(const FlowSeries& flow);

    double t() const { return t_; }
    std::size_t degree() const { return n_; }
    cplx operator()(std::size_t row, std::size_t col) const { return entries_[row * (n_ + 1) + col]; }

    SeriesFn column(std::size_t k) const;
    SeriesFn operator*(const SeriesFn& f) const;
    /// Product of two matrices of the same degree; t adds.
    OperatorMatrix operator*(const OperatorMatrix& rhs) const;

    /// Largest |diagonal entry|; the spectral radius when the matrix is triangular.
    double spectral_radius_estimate() const;

    double max_abs_diff(const OperatorMatrix& other) const;

private:
    OperatorMatrix(double t, std::size_t n) : t_(t), n_(n), entries_((n + 1) * (n + 1), 0.0) {}

    double t_;
    std::size_t n_;
    std::vector<cplx> entries_;  // row-major
};

OperatorMatrix operator_matrix(const HoloExpr& G, double t, std::size_t degree, double tol,
                               const Domain& d = Domain::unit_disc());

/// Row-major "re,im" pairs, one matrix row per line.
void write_csv(std::ostream& out, const OperatorMatrix& m);

/// G f' as a degree-N series: expansion of G times the coefficient derivative of f.
SeriesFn generator_image(const HoloExpr& G, const SeriesFn& f);

/// norm((T(h)f - f)/h - G f'); O(h) for smooth data.
double generator_residual(const HoloExpr& G, const SeriesFn& f, const CoefSpace& space, double h, double tol);

/// norm((1/t) ∫_0^t T(s)(G f') ds - (T(t)f - f)/t) with composite Simpson on
/// quad_points + 1 nodes (quad_points even).
double maximality_residual(const HoloExpr& G, const SeriesFn& f, const CoefSpace& space, double t, int quad_points,
                           double tol);

/// |D_t u - G(z) D_z u| at (t, z) for u(t, z) = (T(t)f)(z), central differences in both variables.
double transport_pde_residual(const HoloExpr& G, const SeriesFn& f, cplx z, double t, double h_t, double h_z,
                              double tol = 1e-12);

/// (t, norm(T(t)f - f)) for each t.
std::vector<std::pair<double, double>> strong_continuity_report(const HoloExpr& G, const SeriesFn& f,
                                                                const CoefSpace& space,
                                                                const std::vector<double>& t_list, double tol);

} // namespace holosg
