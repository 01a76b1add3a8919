#include "holosg/counterexample.hpp"

#include <cmath>

#include "holosg/berkson_porta.hpp"
#include "holosg/errors.hpp"
#include "holosg/io.hpp"

namespace holosg {

namespace {

constexpr int kHerglotzDensity = 2;
constexpr double kHerglotzTol = 1e-9;

} // namespace

HoloExpr build_counterexample(cplx b, const HoloExpr& F)
{
    const double m = std::abs(b);
    if (!(m > 1.0 && m < kOuterRadius)) {
        throw BadParameter("counterexample needs 1 < |b| < 2, got |b| = " + format_double(m));
    }
    const Domain outer = Domain::disc(0.0, kOuterRadius);
    const HerglotzSample h = herglotz_check(F, kHerglotzDensity, outer);
    if (h.min_re < -kHerglotzTol) {
        throw HerglotzError("Re F = " + format_double(h.min_re) + " < 0 at " + format_complex(h.argmin)
                            + " on the radius-2 disc");
    }
    const double r2 = kOuterRadius * kOuterRadius;
    const HoloExpr left = HoloExpr::poly({-1.0, std::conj(b) / r2});
    const HoloExpr right = HoloExpr::poly({-b, 1.0});
    return F * left * right;
}

CounterexampleReport run_counterexample(cplx b, const HoloExpr& F, cplx z0, double T_long, double tol,
                                        const CounterexampleOptions& options)
{
    if (!contains(Domain::unit_disc(), z0)) {
        throw DomainError("counterexample start " + format_complex(z0) + " must lie in the unit disc");
    }
    const HoloExpr G = build_counterexample(b, F);
    const Domain outer = Domain::disc(0.0, kOuterRadius);

    CounterexampleReport report{b, F.to_string(), z0, T_long, std::nullopt, 0.0, std::nullopt,
                                integrate(G, outer, z0, T_long, tol)};
    const Trajectory& tr = report.trajectory;
    if (tr.escaped()) {
        throw EscapeError("counterexample flow leaves the radius-2 disc at t=" + format_double(tr.escape().t_escape));
    }
    report.dw_distance = std::abs(tr.final_point() - b);

    std::size_t hit = 0;
    while (hit < tr.points.size() && std::abs(tr.points[hit]) < 1.0) {
        ++hit;
    }
    if (hit == tr.points.size()) {
        report.warning = "no crossing of |z| = 1 before T_long";
        return report;
    }
    // bisection on the bracketing sample interval, re-integrating from its left end
    const cplx start = tr.points[hit - 1];
    double lo = 0.0;
    double hi = tr.times[hit] - tr.times[hit - 1];
    while (hi - lo > options.crossing_tol) {
        const double mid = 0.5 * (lo + hi);
        const cplx p = mid > 0.0 ? flow_point(G, outer, start, mid, tol) : start;
        if (std::abs(p) < 1.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    report.t_exit = tr.times[hit - 1] + 0.5 * (lo + hi);
    if (report.dw_distance >= options.dw_tol) {
        report.warning = "distance to b at T_long is " + format_double(report.dw_distance) + ", above dw_tol";
    }
    return report;
}

} // namespace holosg
