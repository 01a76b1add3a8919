#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holosg/series.hpp"

namespace holosg {

// Weight sequence beta_n > 0 of a weighted coefficient space.
class BetaRule {
public:
    enum class Kind { Constant, Power, Geometric, Table };

    /// beta_n = 1.
    static BetaRule constant();
    /// beta_n = (n+1)^s.
    static BetaRule power(double s);
    /// beta_n = rho^n; requires rho >= 1 (liminf beta_n^{1/n} >= 1).
    static BetaRule geometric(double rho);
    /// Explicit leading values. Past the table, beta_n follows `asymptotic`
    /// when given (itself not a Table), otherwise repeats the last entry.
    static BetaRule table(std::vector<double> values, std::optional<BetaRule> asymptotic = std::nullopt);

    Kind kind() const { return kind_; }
    double parameter() const { return parameter_; }
    const std::vector<double>& values() const { return values_; }
    const BetaRule* asymptotic() const { return asymptotic_.get(); }

    double operator()(std::size_t n) const;

    std::string to_string() const;

private:
    BetaRule(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

    Kind kind_;
    double parameter_ = 0.0;
    std::vector<double> values_;
    std::shared_ptr<const BetaRule> asymptotic_;
};

// H^p(beta): series whose coefficients lie in l^p(beta).
struct CoefSpace {
    double p;
    BetaRule beta;
    std::string name;  // "H2", "Bergman", "Dirichlet" or "custom"

    static CoefSpace hardy();
    static CoefSpace bergman();
    /// beta_n = (n+1)^{1/2}, i.e. ||f||^2 = sum (n+1)|a_n|^2.
    static CoefSpace dirichlet();
    static CoefSpace custom(double p, BetaRule beta);

    /// "h2", "bergman", "dirichlet", "hpbeta:p=<p>,beta=<rule>" with rule
    /// "const", "pow:<s>" or "geom:<rho>".
    static CoefSpace parse(std::string_view text);
    std::string to_string() const;
};

/// Truncated norm (sum_{n<=N} |a_n|^p beta_n^p)^{1/p}.
double norm(const CoefSpace& space, const SeriesFn& f);

/// Truncated norm of the evaluation functional at z for p = 2:
/// (sum_{n<=N} |z|^{2n} beta_n^{-2})^{1/2}. Requires |z| < 1.
double eval_norm(const CoefSpace& space, std::complex<double> z, std::size_t degree);

/// Coefficients conj(z)^n / beta_n^2 of the reproducing kernel at z (p = 2).
SeriesFn kernel_coeffs(const CoefSpace& space, std::complex<double> z, std::size_t degree);

/// Coefficients n conj(z)^{n-1} / beta_n^2 representing f ↦ f'(z) (p = 2).
SeriesFn kernel_derivative_coeffs(const CoefSpace& space, std::complex<double> z, std::size_t degree);

/// <f, g> = sum a_n conj(b_n) beta_n^2 (p = 2).
std::complex<double> pairing(const CoefSpace& space, const SeriesFn& f, const SeriesFn& g);

enum class ConditionEStatus { Satisfied, Violated, Inconclusive };

std::string to_string(ConditionEStatus s);

struct ConditionEVerdict {
    ConditionEStatus status;
    std::string evidence;
    std::vector<double> partial_sums;  // only for undecidable Table rules
};

/// Decides the evaluation condition from the rule kind:
/// p > 1: sum beta_n^{-q} = infinity with 1/p + 1/q = 1; p = 1: inf beta_n = 0.
ConditionEVerdict condition_E(const CoefSpace& space);

enum class Membership { Likely, Unlikely, Inconclusive };

std::string to_string(Membership m);

struct MembershipEstimate {
    double norm_truncated;
    double tail_slope;
    Membership verdict;
};

/// Heuristic: least-squares slope of log(|a_n| beta_n) over the last
/// `tail_window` nonzero coefficients. Likely below -0.05, Unlikely above +0.05.
MembershipEstimate membership_estimate(const CoefSpace& space, const SeriesFn& f, std::size_t tail_window);

} // namespace holosg
