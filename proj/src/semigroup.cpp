#include "holosg/semigroup.hpp"

#include <algorithm>
#include <cmath>

#include "holosg/errors.hpp"
#include "holosg/io.hpp"

namespace holosg {

SeriesFn apply(const HoloExpr& G, double t, const SeriesFn& f, double tol, const Domain& d)
{
    return series_compose(f, flow_series(G, t, f.degree(), tol, d).coeffs);
}

OperatorMatrix OperatorMatrix::from_flow(const FlowSeries& flow)
{
    const std::size_t n = flow.coeffs.degree();
    OperatorMatrix m(flow.t, n);
    SeriesFn power = SeriesFn::constant(1.0, n);
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t row = 0; row <= n; ++row) {
            m.entries_[row * (n + 1) + k] = power[row];
        }
        power = power * flow.coeffs;
    }
    return m;
}

SeriesFn OperatorMatrix::column(std::size_t k) const
{
    SeriesFn c(n_);
    for (std::size_t row = 0; row <= n_; ++row) {
        c[row] = (*this)(row, k);
    }
    return c;
}

SeriesFn OperatorMatrix::operator*(const SeriesFn& f) const
{
    if (f.degree() != n_) {
        throw DegreeMismatch("operator matrix and series degrees differ");
    }
    SeriesFn out(n_);
    for (std::size_t row = 0; row <= n_; ++row) {
        cplx acc = 0.0;
        for (std::size_t col = 0; col <= n_; ++col) {
            acc += (*this)(row, col) * f[col];
        }
        out[row] = acc;
    }
    return out;
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const
{
    if (rhs.n_ != n_) {
        throw DegreeMismatch("operator matrix degrees differ");
    }
    OperatorMatrix out(t_ + rhs.t_, n_);
    for (std::size_t i = 0; i <= n_; ++i) {
        for (std::size_t k = 0; k <= n_; ++k) {
            const cplx a = (*this)(i, k);
            if (a == cplx(0.0)) {
                continue;
            }
            for (std::size_t j = 0; j <= n_; ++j) {
                out.entries_[i * (n_ + 1) + j] += a * rhs(k, j);
            }
        }
    }
    return out;
}

double OperatorMatrix::spectral_radius_estimate() const
{
    double r = 0.0;
    for (std::size_t k = 0; k <= n_; ++k) {
        r = std::max(r, std::abs((*this)(k, k)));
    }
    return r;
}

double OperatorMatrix::max_abs_diff(const OperatorMatrix& other) const
{
    if (other.n_ != n_) {
        throw DegreeMismatch("operator matrix degrees differ");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
    }
    return m;
}

OperatorMatrix operator_matrix(const HoloExpr& G, double t, std::size_t degree, double tol, const Domain& d)
{
    return OperatorMatrix::from_flow(flow_series(G, t, degree, tol, d));
}

void write_csv(std::ostream& out, const OperatorMatrix& m)
{
    for (std::size_t row = 0; row <= m.degree(); ++row) {
        for (std::size_t col = 0; col <= m.degree(); ++col) {
            if (col > 0) {
                out << ',';
            }
            out << format_double(m(row, col).real()) << ',' << format_double(m(row, col).imag());
        }
        out << '\n';
    }
}

SeriesFn generator_image(const HoloExpr& G, const SeriesFn& f)
{
    return expand(G, f.degree()) * f.derivative();
}

double generator_residual(const HoloExpr& G, const SeriesFn& f, const CoefSpace& space, double h, double tol)
{
    if (!(h >= 1e-6 && h <= 0.1)) {
        throw BadParameter("generator step h must lie in [1e-6, 0.1]");
    }
    const SeriesFn quotient = (apply(G, h, f, tol) - f) * (1.0 / h);
    return norm(space, quotient - generator_image(G, f));
}

double maximality_residual(const HoloExpr& G, const SeriesFn& f, const CoefSpace& space, double t, int quad_points,
                           double tol)
{
    if (!(t > 0.0)) {
        throw BadParameter("maximality check needs t > 0");
    }
    if (quad_points < 2 || quad_points % 2 != 0) {
        throw BadParameter("Simpson rule needs an even, positive number of intervals");
    }
    const SeriesFn g = generator_image(G, f);
    std::vector<double> nodes(static_cast<std::size_t>(quad_points) + 1);
    for (int j = 0; j <= quad_points; ++j) {
        nodes[static_cast<std::size_t>(j)] = t * j / quad_points;
    }
    const auto flows = flow_series_path(G, nodes, f.degree(), tol);

    const double step = t / quad_points;
    SeriesFn integral(f.degree());
    for (int j = 0; j <= quad_points; ++j) {
        const double w = (j == 0 || j == quad_points) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        integral += series_compose(g, flows[static_cast<std::size_t>(j)].coeffs) * (w * step / 3.0);
    }
    const SeriesFn increment = series_compose(f, flows.back().coeffs) - f;
    return norm(space, (integral - increment) * (1.0 / t));
}

double transport_pde_residual(const HoloExpr& G, const SeriesFn& f, cplx z, double t, double h_t, double h_z,
                              double tol)
{
    if (!(h_t > 0.0 && h_z > 0.0)) {
        throw BadParameter("difference steps must be positive");
    }
    if (t < h_t) {
        throw BadParameter("central time difference needs t >= h_t");
    }
    if (!(std::abs(z) + h_z < 1.0)) {
        throw BadParameter("transport probe needs |z| + h_z < 1");
    }
    const auto flows = flow_series_path(G, {t - h_t, t, t + h_t}, f.degree(), tol);
    const SeriesFn before = series_compose(f, flows[0].coeffs);
    const SeriesFn now = series_compose(f, flows[1].coeffs);
    const SeriesFn after = series_compose(f, flows[2].coeffs);
    const cplx u_t = (after.evaluate(z) - before.evaluate(z)) / (2.0 * h_t);
    const cplx u_z = (now.evaluate(z + h_z) - now.evaluate(z - h_z)) / (2.0 * h_z);
    return std::abs(u_t - eval(G, z) * u_z);
}

std::vector<std::pair<double, double>> strong_continuity_report(const HoloExpr& G, const SeriesFn& f,
                                                                const CoefSpace& space,
                                                                const std::vector<double>& t_list, double tol)
{
    std::vector<double> sorted = t_list;
    std::sort(sorted.begin(), sorted.end());
    const auto flows = flow_series_path(G, sorted, f.degree(), tol);
    std::vector<std::pair<double, double>> out;
    for (double t : t_list) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), t);
        const auto& flow = flows[static_cast<std::size_t>(it - sorted.begin())];
        out.emplace_back(t, norm(space, series_compose(f, flow.coeffs) - f));
    }
    return out;
}

} // namespace holosg
