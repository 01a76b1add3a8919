#pragma once

#include <complex>
#include <optional>
#include <string>

#include "holosg/expr.hpp"
#include "holosg/semiflow.hpp"

namespace holosg {

/// Radius of the larger disc on which the counterexample flow is global.
inline constexpr double kOuterRadius = 2.0;

/// Berkson–Porta form on the disc of radius R = 2 with Denjoy–Wolff point b:
/// F(z) (conj(b) z / R^2 - 1)(z - b). Its zeros are b and R^2 / conj(b), so for
/// 1 < |b| < 2 the flow is global on the large disc and attracted to b, which
/// lies outside the unit disc. Requires Re F >= 0 on the grid of the large disc.
HoloExpr build_counterexample(cplx b, const HoloExpr& F);

struct CounterexampleReport {
    cplx b;
    std::string F_desc;
    cplx z0;
    double T_long;
    std::optional<double> t_exit;  // first time with |phi(t, z0)| = 1
    double dw_distance;            // |phi(T_long, z0) - b|
    std::optional<std::string> warning;
    Trajectory trajectory;         // on the radius-2 disc
};

struct CounterexampleOptions {
    double crossing_tol = 1e-10;
    double dw_tol = 1e-3;
};

/// Integrates the counterexample symbol on the radius-2 disc from z0 in the
/// unit disc. Throws EscapeError if the path leaves the large disc. When the
/// path never reaches |z| = 1 the report carries no t_exit and a warning.
CounterexampleReport run_counterexample(cplx b, const HoloExpr& F, cplx z0, double T_long, double tol,
                                        const CounterexampleOptions& options = {});

} // namespace holosg
