#include "holosg/series.hpp"

#include <algorithm>
#include <string>

#include "holosg/errors.hpp"
#include "holosg/expr.hpp"

namespace holosg {

namespace {

void require_same_degree(const SeriesFn& a, const SeriesFn& b, const char* op)
{
    if (a.degree() != b.degree()) {
        throw DegreeMismatch(std::string(op) + ": degrees " + std::to_string(a.degree()) + " and "
                             + std::to_string(b.degree()) + " differ");
    }
}

} // namespace

SeriesFn::SeriesFn(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw BadParameter("a series needs at least one coefficient");
    }
}

SeriesFn SeriesFn::constant(cplx c, std::size_t degree)
{
    SeriesFn s(degree);
    s.coeffs_[0] = c;
    return s;
}

SeriesFn SeriesFn::identity(std::size_t degree, cplx center)
{
    SeriesFn s(degree);
    s.coeffs_[0] = center;
    if (degree >= 1) {
        s.coeffs_[1] = 1.0;
    }
    return s;
}

SeriesFn SeriesFn::monomial(std::size_t k, std::size_t degree)
{
    SeriesFn s(degree);
    if (k <= degree) {
        s.coeffs_[k] = 1.0;
    }
    return s;
}

SeriesFn SeriesFn::resized(std::size_t degree) const
{
    SeriesFn s(degree);
    std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), degree + 1), s.coeffs_.begin());
    return s;
}

cplx SeriesFn::evaluate(cplx z) const
{
    cplx acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

SeriesFn SeriesFn::derivative() const
{
    SeriesFn d(degree());
    for (std::size_t k = 0; k < degree(); ++k) {
        d.coeffs_[k] = static_cast<double>(k + 1) * coeffs_[k + 1];
    }
    return d;
}

SeriesFn& SeriesFn::operator+=(const SeriesFn& rhs)
{
    require_same_degree(*this, rhs, "add");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
}

SeriesFn& SeriesFn::operator-=(const SeriesFn& rhs)
{
    require_same_degree(*this, rhs, "subtract");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    return *this;
}

SeriesFn& SeriesFn::operator*=(cplx s)
{
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

SeriesFn operator*(const SeriesFn& a, const SeriesFn& b)
{
    require_same_degree(a, b, "multiply");
    const std::size_t n = a.degree();
    SeriesFn out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == cplx(0.0)) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

SeriesFn operator/(const SeriesFn& a, const SeriesFn& b)
{
    require_same_degree(a, b, "divide");
    if (std::abs(b.coeffs_[0]) < kPoleEps) {
        throw PoleError("series division by a series vanishing at the expansion point");
    }
    const std::size_t n = a.degree();
    SeriesFn q(n);
    for (std::size_t k = 0; k <= n; ++k) {
        cplx acc = a.coeffs_[k];
        for (std::size_t j = 1; j <= k; ++j) {
            acc -= b.coeffs_[j] * q.coeffs_[k - j];
        }
        q.coeffs_[k] = acc / b.coeffs_[0];
    }
    return q;
}

SeriesFn exp(const SeriesFn& s)
{
    const std::size_t n = s.degree();
    SeriesFn e(n);
    e[0] = std::exp(s[0]);
    for (std::size_t m = 1; m <= n; ++m) {
        cplx acc = 0.0;
        for (std::size_t k = 1; k <= m; ++k) {
            acc += static_cast<double>(k) * s[k] * e[m - k];
        }
        e[m] = acc / static_cast<double>(m);
    }
    return e;
}

SeriesFn series_compose(const SeriesFn& f, const SeriesFn& g)
{
    require_same_degree(f, g, "compose");
    const std::size_t n = f.degree();
    SeriesFn acc = SeriesFn::constant(f[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * g;
        acc[0] += f[k];
    }
    return acc;
}

double max_abs_diff(const SeriesFn& a, const SeriesFn& b)
{
    require_same_degree(a, b, "compare");
    double m = 0.0;
    for (std::size_t k = 0; k <= a.degree(); ++k) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

} // namespace holosg
