#pragma once

#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "holosg/series.hpp"

namespace holosg {

using cplx = std::complex<double>;

/// Denominators with modulus below this are treated as poles.
inline constexpr double kPoleEps = 1e-13;

enum class ExprKind { Const, Var, Poly, Ratio, Mobius, Sum, Product, Compose, Exp, Neg };

// Immutable holomorphic expression in one complex variable z. Copies share
// structure. Compose(f, g) is f∘g; Exp is the primitive z ↦ e^z.
class HoloExpr {
public:
    struct Node;

    /// Defaults to the zero constant.
    HoloExpr();

    static HoloExpr constant(cplx c);
    static HoloExpr var();
    /// Ascending coefficients: poly({1, 2}) is 1 + 2z.
    static HoloExpr poly(std::vector<cplx> coeffs);
    /// Throws PoleError when the denominator vanishes on every probe point.
    static HoloExpr ratio(HoloExpr num, HoloExpr den);
    /// (a z + b) / (c z + d); throws BadParameter when ad - bc = 0.
    static HoloExpr mobius(cplx a, cplx b, cplx c, cplx d);
    static HoloExpr sum(HoloExpr lhs, HoloExpr rhs);
    static HoloExpr product(HoloExpr lhs, HoloExpr rhs);
    static HoloExpr compose(HoloExpr outer, HoloExpr inner);
    static HoloExpr exp();
    static HoloExpr neg(HoloExpr e);

    ExprKind kind() const;
    const Node& node() const { return *node_; }

    /// Constant value when kind() == Const.
    cplx constant_value() const;
    /// Coefficient list when kind() == Poly.
    const std::vector<cplx>& poly_coeffs() const;
    /// Operands of Ratio, Sum, Product, Compose (outer, inner) and Neg.
    const std::vector<HoloExpr>& children() const;

    /// Readable infix rendering; reparses to an equivalent expression.
    std::string to_string() const;

private:
    explicit HoloExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

HoloExpr operator+(const HoloExpr& a, const HoloExpr& b);
HoloExpr operator-(const HoloExpr& a, const HoloExpr& b);
HoloExpr operator*(const HoloExpr& a, const HoloExpr& b);
HoloExpr operator/(const HoloExpr& a, const HoloExpr& b);
HoloExpr operator-(const HoloExpr& a);

/// Recursive evaluation; throws PoleError when a denominator drops below kPoleEps.
cplx eval(const HoloExpr& f, cplx z);

/// Structural derivative (sum, product, quotient and chain rules).
HoloExpr derivative(const HoloExpr& f);

/// Taylor coefficients about 0 by the trapezoidal Cauchy rule on |z| = r with
/// M = max(4N, 64) samples. Roundoff in a_k grows like r^-k, so small radii
/// and large N do not mix.
SeriesFn taylor(const HoloExpr& f, std::size_t degree, double radius = 0.5);

/// f evaluated on a series argument: coefficients of w ↦ f(s(w)) truncated to
/// the degree of s. Exact truncated arithmetic, no sampling.
SeriesFn eval_series(const HoloExpr& f, const SeriesFn& s);

/// Taylor coefficients of w ↦ f(center + w), via eval_series.
SeriesFn expand(const HoloExpr& f, std::size_t degree, cplx center = 0.0);

/// Parses the symbol grammar (see README): numbers, i, z, + - * / ^n,
/// parentheses, exp(e), mobius(a,b,c,d). Throws ParseError with the offending position.
HoloExpr parse_expr(std::string_view text);

} // namespace holosg
