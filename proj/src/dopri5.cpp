#include "holosg/dopri5.hpp"

#include <algorithm>
#include <cmath>

namespace holosg {

namespace {

// Tableau for autonomous systems; the nodes c_i are not needed.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                 a76 = 11.0 / 84.0;
// 5th minus embedded 4th order weights
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// continuous extension
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

} // namespace

Dopri5::Dopri5(Rhs rhs, State y0) : rhs_(std::move(rhs)), y_(std::move(y0))
{
    const auto n = y_.size();
    for (State* s : {&y_prev_, &y_new_, &k1_, &k2_, &k3_, &k4_, &k5_, &k6_, &k7_, &err_, &r1_, &r2_, &r3_, &r4_, &r5_}) {
        s->assign(n, 0.0);
    }
    rhs_(y_, k1_);
}

void Dopri5::axpy_stage(State& out, const State& base, double h,
                        std::initializer_list<std::pair<double, const State*>> terms) const
{
    for (std::size_t i = 0; i < base.size(); ++i) {
        std::complex<double> acc = 0.0;
        for (const auto& [w, k] : terms) {
            acc += w * (*k)[i];
        }
        out[i] = base[i] + h * acc;
    }
}

void Dopri5::attempt(double h)
{
    h_attempt_ = h;
    State tmp(y_.size());
    axpy_stage(tmp, y_, h, {{a21, &k1_}});
    rhs_(tmp, k2_);
    axpy_stage(tmp, y_, h, {{a31, &k1_}, {a32, &k2_}});
    rhs_(tmp, k3_);
    axpy_stage(tmp, y_, h, {{a41, &k1_}, {a42, &k2_}, {a43, &k3_}});
    rhs_(tmp, k4_);
    axpy_stage(tmp, y_, h, {{a51, &k1_}, {a52, &k2_}, {a53, &k3_}, {a54, &k4_}});
    rhs_(tmp, k5_);
    axpy_stage(tmp, y_, h, {{a61, &k1_}, {a62, &k2_}, {a63, &k3_}, {a64, &k4_}, {a65, &k5_}});
    rhs_(tmp, k6_);
    axpy_stage(y_new_, y_, h, {{a71, &k1_}, {a73, &k3_}, {a74, &k4_}, {a75, &k5_}, {a76, &k6_}});
    rhs_(y_new_, k7_);
    for (std::size_t i = 0; i < y_.size(); ++i) {
        err_[i] = h * (e1 * k1_[i] + e3 * k3_[i] + e4 * k4_[i] + e5 * k5_[i] + e6 * k6_[i] + e7 * k7_[i]);
    }
}

double Dopri5::error_ratio(double tol) const
{
    double ratio = 0.0;
    for (std::size_t i = 0; i < y_.size(); ++i) {
        const double scale = tol * (1.0 + std::max(std::abs(y_[i]), std::abs(y_new_[i])));
        ratio = std::max(ratio, std::abs(err_[i]) / scale);
    }
    return ratio;
}

void Dopri5::accept()
{
    const double h = h_attempt_;
    for (std::size_t i = 0; i < y_.size(); ++i) {
        const auto diff = y_new_[i] - y_[i];
        const auto bspl = h * k1_[i] - diff;
        r1_[i] = y_[i];
        r2_[i] = diff;
        r3_[i] = bspl;
        r4_[i] = diff - h * k7_[i] - bspl;
        r5_[i] = h * (d1 * k1_[i] + d3 * k3_[i] + d4 * k4_[i] + d5 * k5_[i] + d6 * k6_[i] + d7 * k7_[i]);
    }
    y_prev_ = y_;
    y_ = y_new_;
    k1_ = k7_;
}

Dopri5::State Dopri5::dense(double theta) const
{
    const double eta = 1.0 - theta;
    State out(y_.size());
    for (std::size_t i = 0; i < y_.size(); ++i) {
        out[i] = r1_[i] + theta * (r2_[i] + eta * (r3_[i] + theta * (r4_[i] + eta * r5_[i])));
    }
    return out;
}

} // namespace holosg
