#include "holosg/berkson_porta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "holosg/errors.hpp"
#include "holosg/semiflow.hpp"

namespace holosg {

namespace {

constexpr int kBoundarySamples = 64;
constexpr int kWitnessSeeds = 8;
constexpr int kSingularProbes = 16;
// Grid points closer than this to a zero of the BP factor use circle averaging.
constexpr double kSingularNear = 1e-3;

std::vector<cplx> boundary_samples()
{
    // half-step offset keeps z = ±1 off the sample set
    std::vector<cplx> out;
    for (int j = 0; j < kBoundarySamples; ++j) {
        out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * (j + 0.5) / kBoundarySamples));
    }
    return out;
}

double arg_positive(cplx z)
{
    double a = std::arg(z);
    return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
}

std::optional<cplx> newton(const HoloExpr& G, const HoloExpr& dG, cplx z, const ClassifyOptions& opt)
{
    try {
        for (int it = 0; it < opt.newton_iterations; ++it) {
            const cplx g = eval(G, z);
            const cplx dg = eval(dG, z);
            if (g == cplx(0.0)) {
                return z;
            }
            if (std::abs(dg) == 0.0) {
                return std::nullopt;
            }
            const cplx step = g / dg;
            z -= step;
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > 1e6) {
                return std::nullopt;
            }
            if (std::abs(step) < opt.newton_tol * std::max(1.0, std::abs(z))) {
                return z;
            }
        }
    } catch (const PoleError&) {
    }
    return std::nullopt;
}

// F = G / ((b - z)(1 - conj(b) z)), with removable singularities evaluated as
// the mean over a small circle.
double factor_real_part(const HoloExpr& G, cplx b, cplx z, const ClassifyOptions& opt)
{
    auto direct = [&](cplx w) { return eval(G, w) / ((b - w) * (1.0 - std::conj(b) * w)); };
    const bool near_b = std::abs(z - b) < kSingularNear;
    const bool near_reflection = std::abs(1.0 - std::conj(b) * z) < kSingularNear;
    if (!near_b && !near_reflection) {
        return direct(z).real();
    }
    cplx acc = 0.0;
    for (int k = 0; k < kSingularProbes; ++k) {
        acc += direct(z + std::polar(opt.singular_probe_radius, 2.0 * std::numbers::pi * (k + 0.5) / kSingularProbes));
    }
    return (acc / static_cast<double>(kSingularProbes)).real();
}

HerglotzSample factor_herglotz(const HoloExpr& G, cplx b, const std::vector<cplx>& grid, const ClassifyOptions& opt)
{
    HerglotzSample best{std::numeric_limits<double>::infinity(), 0.0};
    for (cplx z : grid) {
        const double re = factor_real_part(G, b, z, opt);
        if (re < best.min_re) {
            best = {re, z};
        }
    }
    return best;
}

} // namespace

HerglotzSample herglotz_check(const HoloExpr& F, int density, const Domain& d)
{
    HerglotzSample best{std::numeric_limits<double>::infinity(), 0.0};
    for (cplx z : sample_grid(d, density)) {
        const double re = eval(F, z).real();
        if (re < best.min_re) {
            best = {re, z};
        }
    }
    return best;
}

HoloExpr bp_build(cplx b, const HoloExpr& F)
{
    if (std::abs(b) > 1.0) {
        throw BadParameter("Denjoy–Wolff point must satisfy |b| <= 1");
    }
    // (b - z)(1 - conj(b) z) = b - (1 + |b|^2) z + conj(b) z^2
    const HoloExpr factor = HoloExpr::poly({b, -(1.0 + std::norm(b)), std::conj(b)});
    return factor * F;
}

std::string to_string(BPStatus s)
{
    switch (s) {
    case BPStatus::Global:
        return "Global";
    case BPStatus::NotGlobal:
        return "NotGlobal";
    case BPStatus::Inconclusive:
        return "Inconclusive";
    }
    return {};
}

BPVerdict bp_classify(const HoloExpr& G, const ClassifyOptions& opt)
{
    const Domain disc = Domain::unit_disc();
    const auto grid = sample_grid(disc, opt.density);
    const auto boundary = boundary_samples();
    const HoloExpr dG = derivative(G);

    // Seeds: half from the interior grid, half from the boundary samples.
    std::vector<cplx> seeds;
    const int half = opt.newton_seeds / 2;
    for (int i = 0; i < half; ++i) {
        seeds.push_back(grid[static_cast<std::size_t>(i) * grid.size() / half]);
    }
    for (int i = 0; i < opt.newton_seeds - half; ++i) {
        seeds.push_back(boundary[static_cast<std::size_t>(i) * boundary.size() / (opt.newton_seeds - half)]);
    }

    bool any_converged = false;
    std::vector<cplx> zeros;
    for (cplx s : seeds) {
        const auto z = newton(G, dG, s, opt);
        if (!z) {
            continue;
        }
        any_converged = true;
        if (std::abs(*z) > 1.0 + opt.tol_b) {
            continue;
        }
        cplx b = std::abs(*z) > 1.0 ? *z / std::abs(*z) : *z;
        // roundoff-level components would otherwise flip the argument tie-break across 0
        if (std::abs(b.real()) < opt.newton_tol) {
            b.real(0.0);
        }
        if (std::abs(b.imag()) < opt.newton_tol) {
            b.imag(0.0);
        }
        const bool seen = std::any_of(zeros.begin(), zeros.end(), [&](cplx w) { return std::abs(w - b) < 1e-8; });
        if (!seen) {
            zeros.push_back(b);
        }
    }
    std::sort(zeros.begin(), zeros.end(), [](cplx x, cplx y) {
        const double rx = std::round(std::abs(x) * 1e9), ry = std::round(std::abs(y) * 1e9);
        if (rx != ry) {
            return rx < ry;
        }
        return arg_positive(x) < arg_positive(y);
    });

    std::vector<cplx> candidates = zeros;
    if (candidates.empty()) {
        double best = std::numeric_limits<double>::infinity();
        cplx at = 1.0;
        for (cplx w : boundary) {
            try {
                const double m = std::abs(eval(G, w));
                if (m < best) {
                    best = m;
                    at = w;
                }
            } catch (const PoleError&) {
            }
        }
        if (std::isfinite(best)) {
            candidates.push_back(at);
        }
    }

    BPVerdict verdict;
    std::optional<HerglotzSample> interior_failure;
    for (cplx b : candidates) {
        const HerglotzSample h = factor_herglotz(G, b, grid, opt);
        if (h.min_re >= -opt.tol_herglotz) {
            verdict.status = BPStatus::Global;
            verdict.b = b;
            verdict.min_re_F = h.min_re;
            verdict.min_re_at = h.argmin;
            return verdict;
        }
        if (!verdict.b) {
            verdict.b = b;
            verdict.min_re_F = h.min_re;
            verdict.min_re_at = h.argmin;
        }
        if (std::abs(b) < 1.0 - opt.tol_b && !interior_failure) {
            interior_failure = h;
        }
    }

    const double r = 1.0 - std::ldexp(1.0, -(4 * opt.density - 1));
    for (int k = 0; k < kWitnessSeeds; ++k) {
        const cplx seed = std::polar(r, 2.0 * std::numbers::pi * k / kWitnessSeeds);
        try {
            if (const auto t = escape_time(G, disc, seed, opt.witness_t_max, opt.witness_tol)) {
                verdict.status = BPStatus::NotGlobal;
                verdict.witness = EscapeWitness{seed, *t};
                return verdict;
            }
        } catch (const PoleError&) {
        } catch (const StiffnessError&) {
        }
    }

    // An interior zero is the only possible Denjoy–Wolff point, so a negative
    // Re F sample for it is a certificate on its own; so are two interior zeros.
    const auto interior = std::count_if(zeros.begin(), zeros.end(), [&](cplx z) { return std::abs(z) < 1.0 - opt.tol_b; });
    if (interior_failure || interior > 1) {
        verdict.status = BPStatus::NotGlobal;
        return verdict;
    }
    if (!any_converged) {
        throw ToleranceError("Newton iteration converged from none of the " + std::to_string(seeds.size())
                             + " seeds and no escape witness was found");
    }
    verdict.status = BPStatus::Inconclusive;
    return verdict;
}

} // namespace holosg
