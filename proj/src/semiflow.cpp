#include "holosg/semiflow.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "holosg/dopri5.hpp"
#include "holosg/errors.hpp"
#include "holosg/io.hpp"

namespace holosg {

namespace {

constexpr double kMinTol = 1e-13;
constexpr double kMaxTol = 1e-3;
constexpr double kInitialStep = 0.05;

void validate(const Domain& d, cplx z0, double horizon, double tol)
{
    if (!contains(d, z0)) {
        throw DomainError("initial point " + format_complex(z0) + " is not in " + d.to_string());
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw BadParameter("horizon must be positive and finite");
    }
    if (!(tol >= kMinTol && tol <= kMaxTol)) {
        throw BadParameter("tol must lie in [1e-13, 1e-3], got " + format_double(tol));
    }
}

double grow_factor(double ratio)
{
    if (ratio == 0.0) {
        return 5.0;
    }
    return std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
}

std::size_t dense_count(double horizon)
{
    return std::max<std::size_t>(64, static_cast<std::size_t>(std::ceil(16.0 * horizon)));
}

Trajectory run(const std::function<cplx(cplx)>& field, const Domain& d, cplx z0, double horizon, double tol,
               const IntegratorOptions& opt)
{
    validate(d, z0, horizon, tol);

    Trajectory tr;
    tr.times.push_back(0.0);
    tr.points.push_back(z0);

    auto fail = [&](const std::string& reason) -> Trajectory {
        if (opt.throw_on_failure) {
            throw StiffnessError(reason);
        }
        tr.status = Failed{reason};
        return tr;
    };

    Dopri5 stepper([&field](const Dopri5::State& y, Dopri5::State& dy) { dy[0] = field(y[0]); }, {z0});

    const std::size_t n_dense = dense_count(horizon);
    std::size_t next_dense = 1;
    double t = 0.0;
    double h = std::min(horizon, kInitialStep);
    long steps = 0;

    while (t < horizon) {
        if (++steps > opt.max_steps) {
            return fail("step limit exceeded at t=" + format_double(t));
        }
        bool last = false;
        if (t + h >= horizon) {
            h = horizon - t;
            last = true;
        }

        bool wall = false;
        double ratio = 0.0;
        try {
            stepper.attempt(h);
        } catch (const PoleError&) {
            wall = true;
        }
        if (!wall) {
            const cplx cand = stepper.candidate()[0];
            wall = !contains(d, cand) || boundary_distance(d, cand) < opt.delta_wall;
        }
        if (!wall) {
            ratio = stepper.error_ratio(tol);
        }
        if (wall || !(ratio <= 1.0)) {
            h = wall ? 0.5 * h : h * (std::isfinite(ratio) ? grow_factor(ratio) : 0.2);
            if (h < opt.h_min) {
                const cplx y = stepper.state()[0];
                const double dist = boundary_distance(d, y);
                if (dist < opt.escape_report) {
                    tr.status = Escaped{t, y, false};
                    return tr;
                }
                return fail("step size underflow at t=" + format_double(t) + ", boundary distance "
                            + format_double(dist));
            }
            continue;
        }

        stepper.accept();
        const double t_new = last ? horizon : t + h;
        for (; next_dense <= n_dense; ++next_dense) {
            const double ts = horizon * static_cast<double>(next_dense) / static_cast<double>(n_dense);
            if (ts >= t_new) {
                break;
            }
            const cplx p = stepper.dense((ts - t) / h)[0];
            if (ts > tr.times.back() && contains(d, p)) {
                tr.times.push_back(ts);
                tr.points.push_back(p);
            }
        }
        const cplx y = stepper.state()[0];
        if (t_new > tr.times.back()) {
            tr.times.push_back(t_new);
            tr.points.push_back(y);
        }
        t = t_new;
        if (!d.is_bounded() && std::abs(y) > opt.r_max) {
            tr.status = Escaped{t, y, true};
            return tr;
        }
        h *= grow_factor(ratio);
    }
    tr.status = Completed{horizon};
    return tr;
}

} // namespace

Trajectory integrate(const HoloExpr& G, const Domain& d, cplx z0, double horizon, double tol,
                     const IntegratorOptions& options)
{
    return run([&G](cplx u) { return eval(G, u); }, d, z0, horizon, tol, options);
}

Trajectory backward_integrate(const HoloExpr& G, const Domain& d, cplx z0, double horizon, double tol,
                              const IntegratorOptions& options)
{
    Trajectory tr = run([&G](cplx u) { return -eval(G, u); }, d, z0, horizon, tol, options);
    for (double& t : tr.times) {
        t = -t;
    }
    if (auto* e = std::get_if<Escaped>(&tr.status)) {
        e->t_escape = -e->t_escape;
    }
    return tr;
}

std::optional<double> escape_time(const HoloExpr& G, const Domain& d, cplx z0, double t_max, double tol)
{
    const Trajectory tr = integrate(G, d, z0, t_max, tol);
    if (tr.escaped() && tr.escape().t_escape <= t_max) {
        return tr.escape().t_escape;
    }
    return std::nullopt;
}

cplx flow_point(const HoloExpr& G, const Domain& d, cplx z0, double t, double tol)
{
    if (t == 0.0) {
        if (!contains(d, z0)) {
            throw DomainError("initial point " + format_complex(z0) + " is not in " + d.to_string());
        }
        return z0;
    }
    const Trajectory tr = integrate(G, d, z0, t, tol);
    if (tr.escaped()) {
        throw EscapeError("flow from " + format_complex(z0) + " leaves " + d.to_string() + " at t="
                          + format_double(tr.escape().t_escape) + " before t=" + format_double(t));
    }
    return tr.final_point();
}

double semigroup_residual(const HoloExpr& G, const Domain& d, cplx z0, double t, double s, double tol)
{
    const cplx joint = flow_point(G, d, z0, t + s, tol);
    const cplx split = flow_point(G, d, flow_point(G, d, z0, s, tol), t, tol);
    return std::abs(joint - split);
}

namespace {

void check_series_neighbourhood(const HoloExpr& G, const Domain& d, double t, double tol)
{
    const cplx probes[] = {0.0, 0.25, {0.0, 0.25}, -0.25, {0.0, -0.25}};
    for (cplx p : probes) {
        if (p != cplx(0.0) && !contains(d, p)) {
            continue;
        }
        flow_point(G, d, p, t, tol);
    }
}

} // namespace

std::vector<FlowSeries> flow_series_path(const HoloExpr& G, const std::vector<double>& times, std::size_t degree,
                                         double tol, const Domain& d)
{
    if (!contains(d, 0.0)) {
        throw DomainError("series flow needs 0 in " + d.to_string());
    }
    if (!(tol >= kMinTol && tol <= kMaxTol)) {
        throw BadParameter("tol must lie in [1e-13, 1e-3], got " + format_double(tol));
    }
    if (!std::is_sorted(times.begin(), times.end()) || (!times.empty() && times.front() < 0.0)) {
        throw BadParameter("series flow times must be nonnegative and nondecreasing");
    }
    std::vector<FlowSeries> out;
    if (times.empty()) {
        return out;
    }
    if (times.back() > 0.0) {
        check_series_neighbourhood(G, d, times.back(), tol);
    }

    const IntegratorOptions opt;
    const SeriesFn identity = SeriesFn::identity(degree);
    Dopri5 stepper(
        [&G](const Dopri5::State& c, Dopri5::State& dc) {
            const SeriesFn v = eval_series(G, SeriesFn(c));
            std::copy(v.coeffs().begin(), v.coeffs().end(), dc.begin());
        },
        Dopri5::State(identity.coeffs().begin(), identity.coeffs().end()));

    double t = 0.0;
    double h = kInitialStep;
    for (double target : times) {
        while (t < target) {
            bool last = false;
            if (t + h >= target) {
                h = target - t;
                last = true;
            }
            bool pole = false;
            double ratio = 0.0;
            try {
                stepper.attempt(h);
                ratio = stepper.error_ratio(tol);
            } catch (const PoleError&) {
                pole = true;
            }
            if (pole || !(ratio <= 1.0)) {
                h *= (pole || !std::isfinite(ratio)) ? 0.5 : grow_factor(ratio);
                if (h < opt.h_min) {
                    throw StiffnessError("series flow step underflow at t=" + format_double(t));
                }
                continue;
            }
            stepper.accept();
            t = last ? target : t + h;
            h *= grow_factor(ratio);
        }
        const auto& c = stepper.state();
        out.push_back({target, SeriesFn(std::vector<cplx>(c.begin(), c.end()))});
    }
    return out;
}

FlowSeries flow_series(const HoloExpr& G, double t, std::size_t degree, double tol, const Domain& d)
{
    return flow_series_path(G, {t}, degree, tol, d).front();
}

std::string status_string(const Trajectory& tr)
{
    if (const auto* c = std::get_if<Completed>(&tr.status)) {
        return "completed horizon=" + format_double(c->horizon);
    }
    if (const auto* e = std::get_if<Escaped>(&tr.status)) {
        return "escaped t=" + format_double(e->t_escape) + " exit=" + format_complex(e->exit_point)
            + (e->at_infinity ? " at_infinity=true" : "");
    }
    return "failed reason=" + std::get<Failed>(tr.status).reason;
}

void write_csv(std::ostream& out, const Trajectory& tr)
{
    out << "t,re,im\n";
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        out << format_double(tr.times[i]) << ',' << format_double(tr.points[i].real()) << ','
            << format_double(tr.points[i].imag()) << '\n';
    }
    out << "# status=" << status_string(tr) << '\n';
}

} // namespace holosg
