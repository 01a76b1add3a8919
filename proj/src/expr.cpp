#include "holosg/expr.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "holosg/errors.hpp"
#include "holosg/io.hpp"

namespace holosg {

struct HoloExpr::Node {
    ExprKind kind = ExprKind::Const;
    cplx value = 0.0;                // Const
    std::vector<cplx> coeffs;        // Poly
    std::array<cplx, 4> mobius{};    // Mobius a, b, c, d
    // Ratio (num, den), Sum/Product (lhs, rhs), Compose (outer, inner), Neg (operand)
    std::vector<HoloExpr> args;

    const HoloExpr& lhs() const { return args[0]; }
    const HoloExpr& rhs() const { return args[1]; }
};

namespace {

// Off-axis probes used to reject identically-zero denominators.
constexpr std::array<cplx, 7> kRatioProbes{{
    {0.1, 0.2}, {-0.3, 0.1}, {0.37, -0.41}, {0.5, 0.0}, {0.0, -0.6}, {0.73, 0.05}, {-0.2, -0.55},
}};

bool is_zero(const HoloExpr& e)
{
    if (e.kind() == ExprKind::Const) {
        return e.constant_value() == cplx(0.0);
    }
    if (e.kind() == ExprKind::Poly) {
        const auto& c = e.poly_coeffs();
        return std::all_of(c.begin(), c.end(), [](cplx v) { return v == cplx(0.0); });
    }
    return false;
}

bool is_one(const HoloExpr& e)
{
    return e.kind() == ExprKind::Const && e.constant_value() == cplx(1.0);
}

} // namespace

HoloExpr::HoloExpr() : node_(std::make_shared<const Node>()) {}

HoloExpr HoloExpr::constant(cplx c)
{
    Node n;
    n.kind = ExprKind::Const;
    n.value = c;
    return HoloExpr(std::make_shared<const Node>(std::move(n)));
}

HoloExpr HoloExpr::var()
{
    Node n;
    n.kind = ExprKind::Var;
    return HoloExpr(std::make_shared<const Node>(std::move(n)));
}

HoloExpr HoloExpr::poly(std::vector<cplx> coeffs)
{
    if (coeffs.empty()) {
        return constant(0.0);
    }
    Node n;
    n.kind = ExprKind::Poly;
    n.coeffs = std::move(coeffs);
    return HoloExpr(std::make_shared<const Node>(std::move(n)));
}

HoloExpr HoloExpr::ratio(HoloExpr num, HoloExpr den)
{
    bool nonzero = false;
    for (cplx p : kRatioProbes) {
        try {
            if (std::abs(holosg::eval(den, p)) >= kPoleEps) {
                nonzero = true;
                break;
            }
        } catch (const PoleError&) {
            // a pole of a nested denominator says nothing about this one
        }
    }
    if (!nonzero) {
        throw BadParameter("ratio denominator " + den.to_string() + " vanishes on every probe point");
    }
    Node n;
    n.kind = ExprKind::Ratio;
    n.args = {std::move(num), std::move(den)};
    return HoloExpr(std::make_shared<const Node>(std::move(n)));
}

HoloExpr HoloExpr::mobius(cplx a, cplx b, cplx c, cplx d)
{
    const cplx det = a * d - b * c;
    const double scale = std::abs(a * d) + std::abs(b * c);
    if (det == cplx(0.0) || std::abs(det) <= 1e-14 * scale) {
        throw BadParameter("mobius map needs ad - bc != 0");
    }
    Node n;
    n.kind = ExprKind::Mobius;
    n.mobius = {a, b, c, d};
    return HoloExpr(std::make_shared<const Node>(std::move(n)));
}

HoloExpr HoloExpr::sum(HoloExpr lhs, HoloExpr rhs)
{
    Node n;
    n.kind = ExprKind::Sum;
    n.args = {std::move(lhs), std::move(rhs)};
    return HoloExpr(std::make_shared<const Node>(std::move(n)));
}

HoloExpr HoloExpr::product(HoloExpr lhs, HoloExpr rhs)
{
    Node n;
    n.kind = ExprKind::Product;
    n.args = {std::move(lhs), std::move(rhs)};
    return HoloExpr(std::make_shared<const Node>(std::move(n)));
}

HoloExpr HoloExpr::compose(HoloExpr outer, HoloExpr inner)
{
    Node n;
    n.kind = ExprKind::Compose;
    n.args = {std::move(outer), std::move(inner)};
    return HoloExpr(std::make_shared<const Node>(std::move(n)));
}

HoloExpr HoloExpr::exp()
{
    Node n;
    n.kind = ExprKind::Exp;
    return HoloExpr(std::make_shared<const Node>(std::move(n)));
}

HoloExpr HoloExpr::neg(HoloExpr e)
{
    Node n;
    n.kind = ExprKind::Neg;
    n.args = {std::move(e)};
    return HoloExpr(std::make_shared<const Node>(std::move(n)));
}

ExprKind HoloExpr::kind() const
{
    return node_->kind;
}

cplx HoloExpr::constant_value() const
{
    if (node_->kind != ExprKind::Const) {
        throw BadParameter("expression is not a constant");
    }
    return node_->value;
}

const std::vector<HoloExpr>& HoloExpr::children() const
{
    return node_->args;
}

const std::vector<cplx>& HoloExpr::poly_coeffs() const
{
    if (node_->kind != ExprKind::Poly) {
        throw BadParameter("expression is not a polynomial");
    }
    return node_->coeffs;
}

namespace {

std::string complex_literal(cplx c)
{
    if (c.imag() == 0.0) {
        return "(" + format_double(c.real()) + ")";
    }
    if (c.real() == 0.0) {
        return "(" + format_double(c.imag()) + "*i)";
    }
    return "(" + format_double(c.real()) + "+" + format_double(c.imag()) + "*i)";
}

} // namespace

std::string HoloExpr::to_string() const
{
    const Node& n = *node_;
    switch (n.kind) {
    case ExprKind::Const:
        return complex_literal(n.value);
    case ExprKind::Var:
        return "z";
    case ExprKind::Poly: {
        std::string out = "(";
        for (std::size_t k = 0; k < n.coeffs.size(); ++k) {
            if (k > 0) {
                out += "+";
            }
            out += complex_literal(n.coeffs[k]);
            if (k >= 1) {
                out += "*z^" + std::to_string(k);
            }
        }
        return out + ")";
    }
    case ExprKind::Ratio:
        return "(" + n.lhs().to_string() + "/" + n.rhs().to_string() + ")";
    case ExprKind::Mobius:
        return "mobius(" + complex_literal(n.mobius[0]) + "," + complex_literal(n.mobius[1]) + ","
            + complex_literal(n.mobius[2]) + "," + complex_literal(n.mobius[3]) + ")";
    case ExprKind::Sum:
        return "(" + n.lhs().to_string() + "+" + n.rhs().to_string() + ")";
    case ExprKind::Product:
        return "(" + n.lhs().to_string() + "*" + n.rhs().to_string() + ")";
    case ExprKind::Compose:
        if (n.lhs().kind() == ExprKind::Exp) {
            return "exp(" + n.rhs().to_string() + ")";
        }
        return "compose(" + n.lhs().to_string() + "," + n.rhs().to_string() + ")";
    case ExprKind::Exp:
        return "exp(z)";
    case ExprKind::Neg:
        return "(-" + n.lhs().to_string() + ")";
    }
    return {};
}

HoloExpr operator+(const HoloExpr& a, const HoloExpr& b)
{
    return HoloExpr::sum(a, b);
}

HoloExpr operator-(const HoloExpr& a, const HoloExpr& b)
{
    return HoloExpr::sum(a, HoloExpr::neg(b));
}

HoloExpr operator*(const HoloExpr& a, const HoloExpr& b)
{
    return HoloExpr::product(a, b);
}

HoloExpr operator/(const HoloExpr& a, const HoloExpr& b)
{
    return HoloExpr::ratio(a, b);
}

HoloExpr operator-(const HoloExpr& a)
{
    return HoloExpr::neg(a);
}

cplx eval(const HoloExpr& f, cplx z)
{
    const auto& n = f.node();
    switch (n.kind) {
    case ExprKind::Const:
        return n.value;
    case ExprKind::Var:
        return z;
    case ExprKind::Poly: {
        cplx acc = 0.0;
        for (auto it = n.coeffs.rbegin(); it != n.coeffs.rend(); ++it) {
            acc = acc * z + *it;
        }
        return acc;
    }
    case ExprKind::Ratio: {
        const cplx den = eval(n.rhs(), z);
        if (std::abs(den) < kPoleEps) {
            throw PoleError("pole of " + f.to_string() + " at " + format_complex(z));
        }
        return eval(n.lhs(), z) / den;
    }
    case ExprKind::Mobius: {
        const auto& [a, b, c, d] = n.mobius;
        const cplx den = c * z + d;
        if (std::abs(den) < kPoleEps) {
            throw PoleError("pole of mobius map at " + format_complex(z));
        }
        return (a * z + b) / den;
    }
    case ExprKind::Sum:
        return eval(n.lhs(), z) + eval(n.rhs(), z);
    case ExprKind::Product:
        return eval(n.lhs(), z) * eval(n.rhs(), z);
    case ExprKind::Compose:
        return eval(n.lhs(), eval(n.rhs(), z));
    case ExprKind::Exp:
        return std::exp(z);
    case ExprKind::Neg:
        return -eval(n.lhs(), z);
    }
    return 0.0;
}

namespace {

HoloExpr add_simplified(const HoloExpr& a, const HoloExpr& b)
{
    if (is_zero(a)) {
        return b;
    }
    if (is_zero(b)) {
        return a;
    }
    return a + b;
}

HoloExpr mul_simplified(const HoloExpr& a, const HoloExpr& b)
{
    if (is_zero(a) || is_zero(b)) {
        return HoloExpr::constant(0.0);
    }
    if (is_one(a)) {
        return b;
    }
    if (is_one(b)) {
        return a;
    }
    return a * b;
}

} // namespace

HoloExpr derivative(const HoloExpr& f)
{
    const auto& n = f.node();
    switch (n.kind) {
    case ExprKind::Const:
        return HoloExpr::constant(0.0);
    case ExprKind::Var:
        return HoloExpr::constant(1.0);
    case ExprKind::Poly: {
        if (n.coeffs.size() <= 1) {
            return HoloExpr::constant(0.0);
        }
        std::vector<cplx> d(n.coeffs.size() - 1);
        for (std::size_t k = 1; k < n.coeffs.size(); ++k) {
            d[k - 1] = static_cast<double>(k) * n.coeffs[k];
        }
        return HoloExpr::poly(std::move(d));
    }
    case ExprKind::Ratio: {
        const HoloExpr dn = derivative(n.lhs());
        const HoloExpr dd = derivative(n.rhs());
        const HoloExpr top = is_zero(dd) ? mul_simplified(dn, n.rhs())
                                         : add_simplified(mul_simplified(dn, n.rhs()), -mul_simplified(n.lhs(), dd));
        if (is_zero(top)) {
            return HoloExpr::constant(0.0);
        }
        return HoloExpr::ratio(top, n.rhs() * n.rhs());
    }
    case ExprKind::Mobius: {
        // (ad - bc) / (cz + d)^2
        const auto& [a, b, c, d] = n.mobius;
        return HoloExpr::ratio(HoloExpr::constant(a * d - b * c), HoloExpr::poly({d * d, 2.0 * c * d, c * c}));
    }
    case ExprKind::Sum:
        return add_simplified(derivative(n.lhs()), derivative(n.rhs()));
    case ExprKind::Product:
        return add_simplified(mul_simplified(derivative(n.lhs()), n.rhs()), mul_simplified(n.lhs(), derivative(n.rhs())));
    case ExprKind::Compose:
        return mul_simplified(HoloExpr::compose(derivative(n.lhs()), n.rhs()), derivative(n.rhs()));
    case ExprKind::Exp:
        return HoloExpr::exp();
    case ExprKind::Neg: {
        const HoloExpr d = derivative(n.lhs());
        return is_zero(d) ? d : -d;
    }
    }
    return HoloExpr::constant(0.0);
}

SeriesFn taylor(const HoloExpr& f, std::size_t degree, double radius)
{
    if (!(radius > 0.0 && radius <= 1.0)) {
        throw BadParameter("taylor sampling radius must lie in (0, 1]");
    }
    const std::size_t m = std::max<std::size_t>(4 * degree, 64);
    std::vector<cplx> samples(m);
    for (std::size_t j = 0; j < m; ++j) {
        samples[j] = eval(f, std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(j) / m));
    }
    SeriesFn out(degree);
    double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k <= degree; ++k) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            // reduce j*k mod m so the twiddle angle stays in [0, 2π)
            const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * k) % m) / m;
            acc += samples[j] * std::polar(1.0, angle);
        }
        out[k] = acc * scale;
        scale /= radius;
    }
    return out;
}

SeriesFn eval_series(const HoloExpr& f, const SeriesFn& s)
{
    const std::size_t degree = s.degree();
    const auto& n = f.node();
    switch (n.kind) {
    case ExprKind::Const:
        return SeriesFn::constant(n.value, degree);
    case ExprKind::Var:
        return s;
    case ExprKind::Poly: {
        SeriesFn acc = SeriesFn::constant(n.coeffs.back(), degree);
        for (std::size_t k = n.coeffs.size() - 1; k-- > 0;) {
            acc = acc * s;
            acc[0] += n.coeffs[k];
        }
        return acc;
    }
    case ExprKind::Ratio:
        return eval_series(n.lhs(), s) / eval_series(n.rhs(), s);
    case ExprKind::Mobius: {
        const auto& [a, b, c, d] = n.mobius;
        SeriesFn num = s * a;
        num[0] += b;
        SeriesFn den = s * c;
        den[0] += d;
        return num / den;
    }
    case ExprKind::Sum:
        return eval_series(n.lhs(), s) + eval_series(n.rhs(), s);
    case ExprKind::Product:
        return eval_series(n.lhs(), s) * eval_series(n.rhs(), s);
    case ExprKind::Compose:
        return eval_series(n.lhs(), eval_series(n.rhs(), s));
    case ExprKind::Exp:
        return holosg::exp(s);
    case ExprKind::Neg:
        return -eval_series(n.lhs(), s);
    }
    return SeriesFn(degree);
}

SeriesFn expand(const HoloExpr& f, std::size_t degree, cplx center)
{
    return eval_series(f, SeriesFn::identity(degree, center));
}

} // namespace holosg
