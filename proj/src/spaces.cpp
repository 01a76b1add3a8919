#include "holosg/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holosg/errors.hpp"
#include "holosg/io.hpp"

namespace holosg {

BetaRule BetaRule::constant()
{
    return BetaRule(Kind::Constant, 1.0);
}

BetaRule BetaRule::power(double s)
{
    if (!std::isfinite(s)) {
        throw BadParameter("power weight exponent must be finite");
    }
    return BetaRule(Kind::Power, s);
}

BetaRule BetaRule::geometric(double rho)
{
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw BadParameter("geometric weight ratio must be positive");
    }
    if (rho < 1.0) {
        throw BadParameter("geometric weight ratio " + format_double(rho) + " violates liminf beta_n^(1/n) >= 1");
    }
    return BetaRule(Kind::Geometric, rho);
}

BetaRule BetaRule::table(std::vector<double> values, std::optional<BetaRule> asymptotic)
{
    if (values.empty()) {
        throw BadParameter("table weight needs at least one value");
    }
    if (std::any_of(values.begin(), values.end(), [](double v) { return !(v > 0.0) || !std::isfinite(v); })) {
        throw BadParameter("table weights must be positive");
    }
    if (asymptotic && asymptotic->kind() == Kind::Table) {
        throw BadParameter("table asymptotics must be a closed-form rule");
    }
    BetaRule r(Kind::Table, 0.0);
    r.values_ = std::move(values);
    if (asymptotic) {
        r.asymptotic_ = std::make_shared<const BetaRule>(*asymptotic);
    }
    return r;
}

double BetaRule::operator()(std::size_t n) const
{
    switch (kind_) {
    case Kind::Constant:
        return 1.0;
    case Kind::Power:
        return std::pow(static_cast<double>(n + 1), parameter_);
    case Kind::Geometric:
        return std::pow(parameter_, static_cast<double>(n));
    case Kind::Table:
        if (n < values_.size()) {
            return values_[n];
        }
        return asymptotic_ ? (*asymptotic_)(n) : values_.back();
    }
    return 1.0;
}

std::string BetaRule::to_string() const
{
    switch (kind_) {
    case Kind::Constant:
        return "const";
    case Kind::Power:
        return "pow:" + format_double(parameter_);
    case Kind::Geometric:
        return "geom:" + format_double(parameter_);
    case Kind::Table: {
        std::string out = "table[" + std::to_string(values_.size()) + "]";
        if (asymptotic_) {
            out += "~" + asymptotic_->to_string();
        }
        return out;
    }
    }
    return {};
}

CoefSpace CoefSpace::hardy()
{
    return {2.0, BetaRule::constant(), "H2"};
}

CoefSpace CoefSpace::bergman()
{
    return {2.0, BetaRule::power(-0.5), "Bergman"};
}

CoefSpace CoefSpace::dirichlet()
{
    return {2.0, BetaRule::power(0.5), "Dirichlet"};
}

CoefSpace CoefSpace::custom(double p, BetaRule beta)
{
    if (!(p >= 1.0) || !std::isfinite(p)) {
        throw BadParameter("space exponent p must lie in [1, inf)");
    }
    return {p, std::move(beta), "custom"};
}

CoefSpace CoefSpace::parse(std::string_view text)
{
    if (text == "h2") {
        return hardy();
    }
    if (text == "bergman") {
        return bergman();
    }
    if (text == "dirichlet") {
        return dirichlet();
    }
    constexpr std::string_view prefix = "hpbeta:";
    if (text.substr(0, prefix.size()) != prefix) {
        throw ParseError("unknown space '" + std::string(text) + "'", 0);
    }
    std::optional<double> p;
    std::optional<BetaRule> beta;
    std::size_t pos = prefix.size();
    while (pos < text.size()) {
        const auto comma = text.find(',', pos);
        const auto item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected key=value", pos);
        }
        const auto key = item.substr(0, eq);
        const auto value = item.substr(eq + 1);
        const std::size_t value_pos = pos + eq + 1;
        if (key == "p") {
            const auto v = parse_number_list(value, value_pos);
            if (v.size() != 1) {
                throw ParseError("p takes one number", value_pos);
            }
            p = v[0];
        } else if (key == "beta") {
            try {
                if (value == "const") {
                    beta = BetaRule::constant();
                } else if (value.substr(0, 4) == "pow:") {
                    beta = BetaRule::power(parse_number_list(value.substr(4), value_pos + 4).at(0));
                } else if (value.substr(0, 5) == "geom:") {
                    beta = BetaRule::geometric(parse_number_list(value.substr(5), value_pos + 5).at(0));
                } else {
                    throw ParseError("unknown beta rule '" + std::string(value) + "'", value_pos);
                }
            } catch (const BadParameter& e) {
                throw ParseError(e.what(), value_pos);
            }
        } else {
            throw ParseError("unknown key '" + std::string(key) + "'", pos);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (!p || !beta) {
        throw ParseError("hpbeta needs both p and beta", prefix.size());
    }
    try {
        return custom(*p, *beta);
    } catch (const BadParameter& e) {
        throw ParseError(e.what(), prefix.size());
    }
}

std::string CoefSpace::to_string() const
{
    if (name != "custom") {
        return name;
    }
    return "hpbeta:p=" + format_double(p) + ",beta=" + beta.to_string();
}

double norm(const CoefSpace& space, const SeriesFn& f)
{
    double acc = 0.0;
    if (space.p == 2.0) {
        for (std::size_t n = 0; n <= f.degree(); ++n) {
            const double b = space.beta(n);
            acc += std::norm(f[n]) * b * b;
        }
        return std::sqrt(acc);
    }
    for (std::size_t n = 0; n <= f.degree(); ++n) {
        acc += std::pow(std::abs(f[n]) * space.beta(n), space.p);
    }
    return std::pow(acc, 1.0 / space.p);
}

namespace {

void require_hilbert(const CoefSpace& space, const char* what)
{
    if (space.p != 2.0) {
        throw BadParameter(std::string(what) + " is only provided for p = 2");
    }
}

} // namespace

double eval_norm(const CoefSpace& space, std::complex<double> z, std::size_t degree)
{
    require_hilbert(space, "eval_norm");
    const double r2 = std::norm(z);
    if (!(r2 < 1.0)) {
        throw BadParameter("evaluation point must satisfy |z| < 1");
    }
    double acc = 0.0;
    double power = 1.0;
    for (std::size_t n = 0; n <= degree; ++n) {
        const double b = space.beta(n);
        acc += power / (b * b);
        power *= r2;
    }
    return std::sqrt(acc);
}

SeriesFn kernel_coeffs(const CoefSpace& space, std::complex<double> z, std::size_t degree)
{
    require_hilbert(space, "kernel_coeffs");
    SeriesFn k(degree);
    std::complex<double> power = 1.0;
    for (std::size_t n = 0; n <= degree; ++n) {
        const double b = space.beta(n);
        k[n] = power / (b * b);
        power *= std::conj(z);
    }
    return k;
}

SeriesFn kernel_derivative_coeffs(const CoefSpace& space, std::complex<double> z, std::size_t degree)
{
    require_hilbert(space, "kernel_derivative_coeffs");
    SeriesFn k(degree);
    std::complex<double> power = 1.0;
    for (std::size_t n = 1; n <= degree; ++n) {
        const double b = space.beta(n);
        k[n] = static_cast<double>(n) * power / (b * b);
        power *= std::conj(z);
    }
    return k;
}

std::complex<double> pairing(const CoefSpace& space, const SeriesFn& f, const SeriesFn& g)
{
    require_hilbert(space, "pairing");
    if (f.degree() != g.degree()) {
        throw DegreeMismatch("pairing of series with different degrees");
    }
    std::complex<double> acc = 0.0;
    for (std::size_t n = 0; n <= f.degree(); ++n) {
        const double b = space.beta(n);
        acc += f[n] * std::conj(g[n]) * b * b;
    }
    return acc;
}

std::string to_string(ConditionEStatus s)
{
    switch (s) {
    case ConditionEStatus::Satisfied:
        return "Satisfied";
    case ConditionEStatus::Violated:
        return "Violated";
    case ConditionEStatus::Inconclusive:
        return "Inconclusive";
    }
    return {};
}

namespace {

ConditionEVerdict decide_closed_form(double p, const BetaRule& rule)
{
    using S = ConditionEStatus;
    if (p > 1.0) {
        const std::string q = format_double(p / (p - 1.0));
        switch (rule.kind()) {
        case BetaRule::Kind::Constant:
            return {S::Satisfied, "sum of beta_n^-q = sum 1 diverges", {}};
        case BetaRule::Kind::Power: {
            // s*q <= 1  <=>  s*p <= p - 1, which keeps s = 1/2, p = 2 exact
            const double s = rule.parameter();
            const bool diverges = s * p <= p - 1.0;
            return {diverges ? S::Satisfied : S::Violated,
                    "sum (n+1)^(-s*q) with s=" + format_double(s) + ", q=" + q
                        + (diverges ? " diverges (s*q <= 1)" : " converges (s*q > 1)"),
                    {}};
        }
        case BetaRule::Kind::Geometric: {
            const bool diverges = rule.parameter() == 1.0;
            return {diverges ? S::Satisfied : S::Violated,
                    "sum rho^(-n*q) with rho=" + format_double(rule.parameter())
                        + (diverges ? " diverges (rho = 1)" : " converges (rho > 1)"),
                    {}};
        }
        case BetaRule::Kind::Table:
            break;
        }
    } else {
        switch (rule.kind()) {
        case BetaRule::Kind::Constant:
            return {S::Violated, "inf beta_n = 1 > 0", {}};
        case BetaRule::Kind::Power: {
            const bool zero_inf = rule.parameter() < 0.0;
            return {zero_inf ? S::Satisfied : S::Violated,
                    zero_inf ? "inf (n+1)^s = 0 for s < 0" : "inf (n+1)^s = 1 for s >= 0", {}};
        }
        case BetaRule::Kind::Geometric:
            return {S::Violated, "inf rho^n = 1 for rho >= 1", {}};
        case BetaRule::Kind::Table:
            break;
        }
    }
    return {S::Inconclusive, "no closed-form decision", {}};
}

} // namespace

ConditionEVerdict condition_E(const CoefSpace& space)
{
    const BetaRule& rule = space.beta;
    if (rule.kind() != BetaRule::Kind::Table) {
        return decide_closed_form(space.p, rule);
    }
    if (const BetaRule* tail = rule.asymptotic()) {
        ConditionEVerdict v = decide_closed_form(space.p, *tail);
        if (space.p == 1.0 && v.status == ConditionEStatus::Violated) {
            // the finite prefix is positive, so the infimum stays positive
            v.evidence = "table prefix positive; tail: " + v.evidence;
        } else {
            v.evidence = "decided by declared asymptotics: " + v.evidence;
        }
        return v;
    }
    ConditionEVerdict v{ConditionEStatus::Inconclusive, {}, {}};
    double acc = 0.0;
    if (space.p > 1.0) {
        const double q = space.p / (space.p - 1.0);
        for (double b : rule.values()) {
            acc += std::pow(b, -q);
            v.partial_sums.push_back(acc);
        }
        v.evidence = "table without asymptotics; partial sums of beta_n^-q reported";
    } else {
        acc = std::numeric_limits<double>::infinity();
        for (double b : rule.values()) {
            acc = std::min(acc, b);
            v.partial_sums.push_back(acc);
        }
        v.evidence = "table without asymptotics; running minima of beta_n reported";
    }
    return v;
}

std::string to_string(Membership m)
{
    switch (m) {
    case Membership::Likely:
        return "Likely";
    case Membership::Unlikely:
        return "Unlikely";
    case Membership::Inconclusive:
        return "Inconclusive";
    }
    return {};
}

MembershipEstimate membership_estimate(const CoefSpace& space, const SeriesFn& f, std::size_t tail_window)
{
    if (tail_window < 2 || 2 * tail_window >= f.degree()) {
        throw BadParameter("tail window must satisfy 2 <= window < N/2");
    }
    MembershipEstimate out{norm(space, f), 0.0, Membership::Inconclusive};
    std::vector<double> xs, ys;
    for (std::size_t n = f.degree() + 1 - tail_window; n <= f.degree(); ++n) {
        const double m = std::abs(f[n]) * space.beta(n);
        if (m > 0.0) {
            xs.push_back(static_cast<double>(n));
            ys.push_back(std::log(m));
        }
    }
    if (xs.size() < 2) {
        // tail vanishes: a polynomial of lower degree, finite norm
        out.tail_slope = -std::numeric_limits<double>::infinity();
        out.verdict = Membership::Likely;
        return out;
    }
    const double k = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    out.tail_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    if (out.tail_slope < -0.05) {
        out.verdict = Membership::Likely;
    } else if (out.tail_slope > 0.05) {
        out.verdict = Membership::Unlikely;
    }
    return out;
}

} // namespace holosg
