#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "holosg/expr.hpp"
#include "holosg/geometry.hpp"
#include "holosg/series.hpp"

namespace holosg {

struct Completed {
    double horizon;
};

struct Escaped {
    double t_escape;
    cplx exit_point;       // last in-domain point
    bool at_infinity = false;
};

struct Failed {
    std::string reason;
};

using TrajectoryStatus = std::variant<Completed, Escaped, Failed>;

struct Trajectory {
    std::vector<double> times;
    std::vector<cplx> points;
    TrajectoryStatus status;

    cplx final_point() const { return points.back(); }
    bool completed() const { return std::holds_alternative<Completed>(status); }
    bool escaped() const { return std::holds_alternative<Escaped>(status); }
    const Escaped& escape() const { return std::get<Escaped>(status); }
};

struct IntegratorOptions {
    double delta_wall = 1e-9;      // steps ending closer than this to the boundary are rejected
    double h_min = 1e-12;          // step-size floor
    double escape_report = 1e-6;   // underflow within this distance of the boundary is an escape
    double r_max = 1e8;            // modulus treated as escape to infinity on unbounded domains
    long max_steps = 5'000'000;
    // When false, StiffnessError and step-count exhaustion end the trajectory
    // with a Failed status instead of throwing.
    bool throw_on_failure = true;
};

/// Solves u' = G(u), u(0) = z0 inside d up to `horizon` with adaptive
/// Dormand–Prince 5(4). The path holds every accepted step plus
/// max(64, 16*horizon) uniformly spaced dense-output samples.
Trajectory integrate(const HoloExpr& G, const Domain& d, cplx z0, double horizon, double tol,
                     const IntegratorOptions& options = {});

/// The same problem for -G; times are reported as negative values decreasing from 0.
Trajectory backward_integrate(const HoloExpr& G, const Domain& d, cplx z0, double horizon, double tol,
                              const IntegratorOptions& options = {});

/// Escape time when the trajectory leaves d no later than t_max. An empty
/// result only means no escape was seen before t_max.
std::optional<double> escape_time(const HoloExpr& G, const Domain& d, cplx z0, double t_max, double tol);

/// phi(t, z0); throws EscapeError if the flow leaves d before t.
cplx flow_point(const HoloExpr& G, const Domain& d, cplx z0, double t, double tol);

/// |phi(t+s, z0) - phi(t, phi(s, z0))|.
double semigroup_residual(const HoloExpr& G, const Domain& d, cplx z0, double t, double s, double tol);

struct FlowSeries {
    double t;
    SeriesFn coeffs;
};

/// Taylor coefficients of z ↦ phi(t, z) about 0, from the coefficient ODE
/// c' = G(c) in truncated series arithmetic, starting at the identity series.
/// Throws EscapeError when the flow from 0 or from the radius-0.25 probes
/// leaves d before t.
FlowSeries flow_series(const HoloExpr& G, double t, std::size_t degree, double tol,
                       const Domain& d = Domain::unit_disc());

/// flow_series at each of the nondecreasing times, from one integration.
std::vector<FlowSeries> flow_series_path(const HoloExpr& G, const std::vector<double>& times, std::size_t degree,
                                         double tol, const Domain& d = Domain::unit_disc());

/// "completed horizon=...", "escaped t=... exit=(re,im)", "failed reason=...".
std::string status_string(const Trajectory& tr);

/// Header "t,re,im", one row per sample, then "# status=...".
void write_csv(std::ostream& out, const Trajectory& tr);

} // namespace holosg
