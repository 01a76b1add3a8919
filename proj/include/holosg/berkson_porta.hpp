#pragma once

#include <complex>
#include <optional>
#include <string>

#include "holosg/expr.hpp"
#include "holosg/geometry.hpp"

namespace holosg {

struct HerglotzSample {
    double min_re;
    cplx argmin;
};

/// Minimum of Re F over sample_grid(d, density). A negative minimum is a
/// conclusive failure; a nonnegative one is evidence only.
HerglotzSample herglotz_check(const HoloExpr& F, int density, const Domain& d = Domain::unit_disc());

/// (b - z)(1 - conj(b) z) F(z); throws BadParameter when |b| > 1.
HoloExpr bp_build(cplx b, const HoloExpr& F);

enum class BPStatus { Global, NotGlobal, Inconclusive };

std::string to_string(BPStatus s);

struct EscapeWitness {
    cplx point;
    double time;
};

struct BPVerdict {
    BPStatus status = BPStatus::Inconclusive;
    std::optional<cplx> b;                 // Denjoy–Wolff candidate
    std::optional<double> min_re_F;
    std::optional<cplx> min_re_at;         // where min_re_F was attained
    std::optional<EscapeWitness> witness;
};

struct ClassifyOptions {
    int density = 2;
    double tol_b = 1e-8;
    double tol_herglotz = 1e-9;
    int newton_seeds = 32;
    int newton_iterations = 50;
    double newton_tol = 1e-12;
    double singular_probe_radius = 1e-4;  // circle used to evaluate F at removable singularities
    double witness_t_max = 10.0;
    double witness_tol = 1e-9;
};

/// Decides globality of the semiflow of G on the unit disc.
///
/// Zeros of G in the closed disc are located by Newton iteration from grid
/// and boundary seeds; each zero b (or, with none, the boundary point of
/// smallest |G|) is tried as the Denjoy–Wolff point by sampling
/// Re[G / ((b - z)(1 - conj(b) z))] on the grid. When no candidate passes,
/// integrations from eight seeds on the second-outermost ring look for an
/// escape witness. Throws ToleranceError when Newton converged from no seed
/// and no verdict could be reached otherwise.
BPVerdict bp_classify(const HoloExpr& G, const ClassifyOptions& options = {});

} // namespace holosg
