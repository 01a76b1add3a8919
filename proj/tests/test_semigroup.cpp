#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "holosg/errors.hpp"
#include "holosg/semigroup.hpp"
#include "oracles.hpp"

using namespace holosg;

namespace {

SeriesFn coeffs(std::vector<cplx> c, std::size_t degree)
{
    c.resize(degree + 1, 0.0);
    return SeriesFn(std::move(c));
}

SeriesFn random_series(std::mt19937_64& rng, std::size_t degree, std::size_t nonzero)
{
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> c(degree + 1, 0.0);
    for (std::size_t k = 0; k <= nonzero && k <= degree; ++k) {
        c[k] = cplx(g(rng), g(rng));
    }
    return SeriesFn(c);
}

} // namespace

TEST_SUITE("semigroup") {

TEST_CASE("apply examples")
{
    const SeriesFn e1 = coeffs({0.0, 1.0}, 8);
    const SeriesFn half = apply(parse_expr("-z"), std::log(2.0), e1, 1e-12);
    CHECK(max_abs_diff(half, coeffs({0.0, 0.5}, 8)) < 1e-10);

    std::mt19937_64 rng(3);
    const SeriesFn f = random_series(rng, 10, 10);
    CHECK(max_abs_diff(apply(parse_expr("1-z^2"), 0.0, f, 1e-10), f) == 0.0);

    const SeriesFn tanh_series = apply(parse_expr("1-z^2"), 0.5, coeffs({0.0, 1.0}, 16), 1e-12);
    const auto oracle_c = oracle::tanh_flow_coeffs(0.5, 16);
    for (std::size_t n = 0; n <= 16; ++n) {
        CHECK(std::abs(tanh_series[n] - oracle_c[n]) < 1e-9);
    }
}

TEST_CASE("operator matrix examples")
{
    const OperatorMatrix m = operator_matrix(parse_expr("-z"), 0.7, 10, 1e-12);
    for (std::size_t r = 0; r <= 10; ++r) {
        for (std::size_t c = 0; c <= 10; ++c) {
            const cplx expected = r == c ? std::exp(-0.7 * static_cast<double>(r)) : 0.0;
            CHECK(std::abs(m(r, c) - expected) < 1e-10);
        }
    }
    CHECK(m.spectral_radius_estimate() == doctest::Approx(1.0));

    const OperatorMatrix id = operator_matrix(parse_expr("1-z^2"), 0.0, 6, 1e-10);
    for (std::size_t r = 0; r <= 6; ++r) {
        for (std::size_t c = 0; c <= 6; ++c) {
            CHECK(id(r, c) == (r == c ? cplx(1.0) : cplx(0.0)));
        }
    }

    const HoloExpr G = parse_expr("1-z^2");
    const OperatorMatrix m3 = operator_matrix(G, 0.3, 8, 1e-12);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const SeriesFn f = random_series(rng, 8, 8);
        CHECK(max_abs_diff(m3 * f, apply(G, 0.3, f, 1e-12)) < 1e-9);
    }
}

TEST_CASE("matrix columns")
{
    const OperatorMatrix m = operator_matrix(parse_expr("1-z^2"), 0.4, 12, 1e-12);
    CHECK(max_abs_diff(m.column(0), SeriesFn::constant(1.0, 12)) == 0.0);
    SeriesFn power = SeriesFn::constant(1.0, 12);
    for (std::size_t k = 1; k <= 12; ++k) {
        power = power * m.column(1);
        CHECK(max_abs_diff(m.column(k), power) < 1e-12);
    }

    std::ostringstream csv;
    write_csv(csv, operator_matrix(parse_expr("-z"), 0.0, 1, 1e-10));
    CHECK(csv.str() == "1,0,0,0\n0,0,1,0\n");
}

TEST_CASE("operator semigroup law")
{
    // symbols fixing 0, where truncated products are exact
    for (const char* symbol : {"-z", "-i*z", "-z*(1+z)/(1-z)"}) {
        CAPTURE(symbol);
        const HoloExpr G = parse_expr(symbol);
        for (double t : {0.1, 0.4}) {
            for (double s : {0.25, 0.8}) {
                const OperatorMatrix lhs = operator_matrix(G, t + s, 12, 1e-12);
                const OperatorMatrix rhs = operator_matrix(G, t, 12, 1e-12) * operator_matrix(G, s, 12, 1e-12);
                CHECK(rhs.t() == doctest::Approx(t + s));
                CHECK(lhs.max_abs_diff(rhs) < 1e-8);
            }
        }
    }
}

TEST_CASE("composition is multiplicative")
{
    std::mt19937_64 rng(99);
    for (const char* symbol : {"1-z^2", "-z", "-i*z"}) {
        const HoloExpr G = parse_expr(symbol);
        for (int trial = 0; trial < 5; ++trial) {
            const SeriesFn f = random_series(rng, 24, 5), g = random_series(rng, 24, 5);
            const SeriesFn lhs = apply(G, 0.35, f * g, 1e-12);
            const SeriesFn rhs = apply(G, 0.35, f, 1e-12) * apply(G, 0.35, g, 1e-12);
            CHECK(max_abs_diff(lhs, rhs) < 1e-9);
        }
    }
}

TEST_CASE("kernel pairing reproduces values of T(t)f")
{
    const HoloExpr G = parse_expr("1-z^2");
    const CoefSpace h2 = CoefSpace::hardy();
    const SeriesFn f = coeffs({0.5, 1.0, -0.25}, 64);
    for (cplx z : {cplx(0.1, 0.2), cplx(-0.3), cplx(0.0, 0.35)}) {
        const SeriesFn tf = apply(G, 0.3, f, 1e-12);
        const cplx value = pairing(h2, tf, kernel_coeffs(h2, z, 64));
        const cplx phi = oracle::tanh_flow(z, 0.3);
        CHECK(std::abs(value - (0.5 + phi - 0.25 * phi * phi)) < 1e-9);
    }
}

TEST_CASE("generator acts on kernels through G(z) and the derivative kernel")
{
    const CoefSpace h2 = CoefSpace::hardy();
    const HoloExpr G = parse_expr("1-z^2");
    const SeriesFn f = coeffs({1.0, cplx(0.5, -1.0), 0.0, 2.0}, 32);
    for (cplx z : {cplx(0.2), cplx(-0.1, 0.4)}) {
        const cplx lhs = pairing(h2, generator_image(G, f), kernel_coeffs(h2, z, 32));
        const cplx rhs = eval(G, z) * pairing(h2, f, kernel_derivative_coeffs(h2, z, 32));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("generator residual")
{
    const CoefSpace h2 = CoefSpace::hardy();
    const double r = generator_residual(parse_expr("-z"), coeffs({0.0, 1.0}, 16), h2, 1e-3, 1e-12);
    CHECK(r <= 1e-3);
    CHECK(r == doctest::Approx(std::abs((std::exp(-1e-3) - 1.0) / 1e-3 + 1.0)).epsilon(1e-5));

    CHECK(generator_residual(parse_expr("1-z^2"), SeriesFn::constant(2.0, 16), h2, 0.05, 1e-10) < 1e-14);

    for (const SeriesFn& f : {coeffs({0.0, 1.0}, 64), coeffs({0.0, 1.0, 1.0}, 64)}) {
        const HoloExpr G = parse_expr("1-z^2");
        const double r1 = generator_residual(G, f, h2, 1e-2, 1e-12);
        const double r2 = generator_residual(G, f, h2, 5e-3, 1e-12);
        const double r3 = generator_residual(G, f, h2, 2.5e-3, 1e-12);
        const double slope = std::log(r1 / r3) / std::log(4.0);
        CHECK(slope >= 0.9);
        CHECK(r2 < r1);
        CHECK(generator_residual(G, f, h2, 1e-3, 1e-12) <= 1e-2);
    }

    CHECK_THROWS_AS(generator_residual(parse_expr("-z"), coeffs({0.0, 1.0}, 4), h2, 0.5, 1e-10), BadParameter);
}

TEST_CASE("maximality residual")
{
    const CoefSpace h2 = CoefSpace::hardy();
    CHECK(maximality_residual(parse_expr("-z"), coeffs({0.0, 1.0}, 16), h2, 1.0, 64, 1e-12) <= 1e-8);
    CHECK(maximality_residual(parse_expr("1-z^2"), SeriesFn::constant(3.0, 16), h2, 0.7, 8, 1e-10) < 1e-14);
    CHECK(maximality_residual(parse_expr("1-z^2"), coeffs({0.0, 0.0, 1.0}, 64), h2, 0.5, 64, 1e-12) <= 1e-6);

    const HoloExpr G = parse_expr("1-z^2");
    const SeriesFn f = coeffs({0.0, 1.0}, 32);
    const double coarse = maximality_residual(G, f, h2, 0.5, 8, 1e-12);
    const double fine = maximality_residual(G, f, h2, 0.5, 16, 1e-12);
    CHECK(coarse / fine > 10.0);
    CHECK_THROWS_AS(maximality_residual(G, f, h2, 0.5, 7, 1e-12), BadParameter);
}

TEST_CASE("transport equation")
{
    CHECK(transport_pde_residual(parse_expr("-z"), coeffs({0.0, 1.0}, 16), 0.5, 1.0, 1e-3, 1e-3) <= 1e-6);
    CHECK(transport_pde_residual(parse_expr("-z"), SeriesFn::constant(1.0, 16), 0.5, 1.0, 1e-3, 1e-3) < 1e-9);
    CHECK(transport_pde_residual(parse_expr("1-z^2"), coeffs({0.0, 1.0}, 64), 0.2, 0.4, 1e-3, 1e-3) <= 1e-5);
    CHECK_THROWS_AS(transport_pde_residual(parse_expr("-z"), coeffs({0.0, 1.0}, 8), 0.9995, 1.0, 1e-3, 1e-3),
                    BadParameter);
}

TEST_CASE("strong continuity")
{
    const CoefSpace h2 = CoefSpace::hardy();
    std::vector<double> ts;
    for (int k = 1; k <= 8; ++k) {
        ts.push_back(std::ldexp(1.0, -k));
    }
    const auto linear = strong_continuity_report(parse_expr("-z"), coeffs({0.0, 1.0}, 8), h2, ts, 1e-12);
    REQUIRE(linear.size() == ts.size());
    for (std::size_t i = 0; i < linear.size(); ++i) {
        CHECK(linear[i].second == doctest::Approx(1.0 - std::exp(-ts[i])).epsilon(1e-8));
        if (i > 0) {
            CHECK(linear[i].second / linear[i - 1].second == doctest::Approx(0.5).epsilon(0.2));
        }
    }

    for (const auto& [t, d] : strong_continuity_report(parse_expr("1-z^2"), SeriesFn(8), h2, ts, 1e-10)) {
        CHECK(d == 0.0);
    }

    const auto riccati = strong_continuity_report(parse_expr("1-z^2"), coeffs({0.0, 1.0, 1.0}, 64), h2, ts, 1e-12);
    for (std::size_t i = 1; i < riccati.size(); ++i) {
        CHECK(riccati[i].second < riccati[i - 1].second);
    }
    // first order: T(t)f - f ~ t G f' = t (1 + 2z - z^2 - 2z^3), norm t sqrt(10)
    CHECK(riccati.back().second / (ts.back() * std::sqrt(10.0)) == doctest::Approx(1.0).epsilon(0.01));
}

}
