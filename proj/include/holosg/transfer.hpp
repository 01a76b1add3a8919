#pragma once

#include <complex>

#include "holosg/expr.hpp"
#include "holosg/geometry.hpp"

namespace holosg {

// A Möbius conformal map h from `source` onto `target` with its inverse.
struct ConformalPair {
    HoloExpr h;
    HoloExpr h_inv;
    Domain source;
    Domain target;

    /// The pair with the roles of the two domains swapped.
    ConformalPair inverse() const { return {h_inv, h, target, source}; }
};

/// h(z) = i(1 + z)/(1 - z) from the unit disc onto the upper half-plane,
/// h^-1(w) = (w - i)/(w + i).
ConformalPair cayley();

/// Pair for the Möbius map (a z + b)/(c z + d); the inverse is (d w - b)/(-c w + a).
/// Throws DomainError when a probe of the source grid is not mapped into target.
ConformalPair mobius_pair(cplx a, cplx b, cplx c, cplx d, const Domain& source, const Domain& target);

/// (G∘h) / h' : the symbol on the source domain conjugate to G on the target.
HoloExpr transfer_symbol(const HoloExpr& G, const ConformalPair& pair);

/// |h(phi_H(t, z0)) - phi_G(t, h(z0))| with H = transfer_symbol(G, pair).
double conjugation_residual(const HoloExpr& G, const ConformalPair& pair, cplx z0, double t, double tol);

} // namespace holosg
