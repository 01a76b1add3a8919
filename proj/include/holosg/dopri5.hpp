#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace holosg {

// Dormand–Prince 5(4) stepper for autonomous complex systems y' = f(y),
// with the FSAL property and the standard 4th-order continuous extension.
// The stepper only attempts and commits steps; step-size policy belongs to
// the caller.
class Dopri5 {
public:
    using State = std::vector<std::complex<double>>;
    using Rhs = std::function<void(const State& y, State& dydt)>;

    Dopri5(Rhs rhs, State y0);

    const State& state() const { return y_; }

    /// Attempts a step of size h from the current state. Exceptions thrown by
    /// the right-hand side propagate; the current state is left untouched.
    void attempt(double h);

    const State& candidate() const { return y_new_; }

    /// max_k |err_k| / (tol * (1 + max(|y_k|, |y_new_k|))) for the last attempt.
    double error_ratio(double tol) const;

    /// Makes the last attempt the current state.
    void accept();

    /// Continuous extension inside the last accepted step, theta in [0, 1].
    State dense(double theta) const;

private:
    void axpy_stage(State& out, const State& base, double h, std::initializer_list<std::pair<double, const State*>> terms) const;

    Rhs rhs_;
    State y_;
    State y_prev_;
    State y_new_;
    State k1_, k2_, k3_, k4_, k5_, k6_, k7_;
    State err_;
    // continuous-extension coefficients of the last accepted step
    State r1_, r2_, r3_, r4_, r5_;
    double h_attempt_ = 0.0;
};

} // namespace holosg
