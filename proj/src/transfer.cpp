#include "holosg/transfer.hpp"

#include "holosg/errors.hpp"
#include "holosg/io.hpp"
#include "holosg/semiflow.hpp"

namespace holosg {

namespace {

constexpr int kProbeDensity = 2;

} // namespace

ConformalPair cayley()
{
    const cplx i(0.0, 1.0);
    return {HoloExpr::mobius(i, i, -1.0, 1.0), HoloExpr::mobius(1.0, -i, 1.0, i), Domain::unit_disc(),
            Domain::half_plane(HalfPlaneKind::Upper)};
}

ConformalPair mobius_pair(cplx a, cplx b, cplx c, cplx d, const Domain& source, const Domain& target)
{
    ConformalPair pair{HoloExpr::mobius(a, b, c, d), HoloExpr::mobius(d, -b, -c, a), source, target};
    for (cplx z : sample_grid(source, kProbeDensity)) {
        const cplx w = eval(pair.h, z);
        if (!contains(target, w)) {
            throw DomainError("mobius map sends " + format_complex(z) + " to " + format_complex(w) + ", outside "
                              + target.to_string());
        }
    }
    return pair;
}

HoloExpr transfer_symbol(const HoloExpr& G, const ConformalPair& pair)
{
    return HoloExpr::ratio(HoloExpr::compose(G, pair.h), derivative(pair.h));
}

double conjugation_residual(const HoloExpr& G, const ConformalPair& pair, cplx z0, double t, double tol)
{
    const HoloExpr H = transfer_symbol(G, pair);
    const cplx source_end = flow_point(H, pair.source, z0, t, tol);
    const cplx target_end = flow_point(G, pair.target, eval(pair.h, z0), t, tol);
    return std::abs(eval(pair.h, source_end) - target_end);
}

} // namespace holosg
