#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "holosg/errors.hpp"
#include "holosg/expr.hpp"
#include "holosg/geometry.hpp"
#include "oracles.hpp"

using namespace holosg;

namespace {

const cplx I(0.0, 1.0);

// one expression per node kind, all analytic on the closed disc of radius 0.6
std::vector<HoloExpr> variant_suite()
{
    const HoloExpr z = HoloExpr::var();
    return {
        HoloExpr::constant({2.0, -1.0}),
        z,
        HoloExpr::poly({1.0, {0.0, 2.0}, -3.0, 0.5}),
        HoloExpr::ratio(HoloExpr::poly({1.0, 1.0}), HoloExpr::poly({2.0, -1.0})),
        HoloExpr::mobius(I, I, -1.0, 1.0),
        HoloExpr::sum(HoloExpr::exp(), HoloExpr::poly({0.0, 0.0, 1.0})),
        HoloExpr::product(HoloExpr::exp(), HoloExpr::mobius(1.0, 0.5, 0.25, 1.0)),
        HoloExpr::compose(HoloExpr::exp(), HoloExpr::poly({0.0, I, 0.5})),
        HoloExpr::compose(HoloExpr::mobius(1.0, 0.0, -0.5, 1.0), HoloExpr::exp()),
        HoloExpr::neg(HoloExpr::ratio(HoloExpr::exp(), HoloExpr::poly({3.0, 1.0}))),
    };
}

std::vector<cplx> probes(std::size_t count, double radius, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> r(0.0, radius), a(0.0, 2.0 * std::numbers::pi);
    std::vector<cplx> out;
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(std::polar(r(rng), a(rng)));
    }
    return out;
}

} // namespace

TEST_SUITE("expr") {

TEST_CASE("eval examples")
{
    CHECK(eval(HoloExpr::poly({0.0, -1.0}), 0.5) == cplx(-0.5));
    CHECK(std::abs(eval(HoloExpr::mobius(I, I, -1.0, 1.0), 0.0) - I) < 1e-15);
    CHECK(eval(HoloExpr::compose(HoloExpr::exp(), HoloExpr::poly({0.0, 1.0})), 0.0) == cplx(1.0));
    CHECK_THROWS_AS(eval(HoloExpr::mobius(I, I, -1.0, 1.0), 1.0), PoleError);
    CHECK_THROWS_AS(eval(HoloExpr::ratio(HoloExpr::constant(1.0), HoloExpr::var()), 0.0), PoleError);
}

TEST_CASE("constructor invariants")
{
    CHECK_THROWS_AS(HoloExpr::mobius(1.0, 2.0, 2.0, 4.0), BadParameter);
    CHECK_THROWS_AS(HoloExpr::ratio(HoloExpr::var(), HoloExpr::constant(0.0)), BadParameter);
    CHECK_THROWS_AS(HoloExpr::ratio(HoloExpr::var(), HoloExpr::poly({0.0, 0.0})), BadParameter);
    CHECK_NOTHROW(HoloExpr::ratio(HoloExpr::var(), HoloExpr::var()));
}

TEST_CASE("derivative examples")
{
    const HoloExpr d = derivative(HoloExpr::poly({0.0, 0.0, 1.0}));
    REQUIRE(d.kind() == ExprKind::Poly);
    CHECK(d.poly_coeffs() == std::vector<cplx>{0.0, 2.0});

    const HoloExpr dc = derivative(HoloExpr::constant({3.0, 4.0}));
    REQUIRE(dc.kind() == ExprKind::Const);
    CHECK(dc.constant_value() == cplx(0.0));

    // Cayley map: h' = 2i/(1-z)^2, compared against central differences
    const HoloExpr h = HoloExpr::mobius(I, I, -1.0, 1.0);
    const HoloExpr dh = derivative(h);
    for (cplx z : probes(20, 0.8, 1)) {
        const cplx fd = oracle::central_difference([&](cplx w) { return eval(h, w); }, z, 1e-5);
        CHECK(std::abs(eval(dh, z) - fd) < 1e-7);
        CHECK(std::abs(eval(dh, z) - 2.0 * I / ((1.0 - z) * (1.0 - z))) < 1e-12);
    }
}

TEST_CASE("derivative agrees with finite differences for every node kind")
{
    for (const HoloExpr& f : variant_suite()) {
        const HoloExpr df = derivative(f);
        for (cplx z : probes(20, 0.6, 2)) {
            const cplx fd = oracle::central_difference([&](cplx w) { return eval(f, w); }, z, 1e-5);
            const cplx exact = eval(df, z);
            CAPTURE(f.to_string());
            CHECK(std::abs(exact - fd) <= 1e-6 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("taylor examples")
{
    const auto p = taylor(HoloExpr::poly({1.0, 2.0, 3.0}), 4, 0.5);
    const double expected[] = {1, 2, 3, 0, 0};
    for (std::size_t k = 0; k <= 4; ++k) {
        CHECK(std::abs(p[k] - expected[k]) < 1e-12);
    }

    const auto g = taylor(HoloExpr::ratio(HoloExpr::constant(1.0), HoloExpr::poly({1.0, -1.0})), 5, 0.5);
    for (std::size_t k = 0; k <= 5; ++k) {
        CHECK(std::abs(g[k] - 1.0) < 1e-10);
    }

    const auto e = taylor(HoloExpr::compose(HoloExpr::exp(), HoloExpr::var()), 3, 0.5);
    const double exp_coeffs[] = {1.0, 1.0, 0.5, 1.0 / 6.0};
    for (std::size_t k = 0; k <= 3; ++k) {
        CHECK(std::abs(e[k] - exp_coeffs[k]) < 1e-10);
    }
    CHECK_THROWS_AS(taylor(HoloExpr::var(), 3, 0.0), BadParameter);
    CHECK_THROWS_AS(taylor(HoloExpr::var(), 3, 1.5), BadParameter);
    CHECK_THROWS_AS(taylor(HoloExpr::mobius(I, I, -1.0, 1.0), 3, 1.0), PoleError);
}

TEST_CASE("taylor reproduces eval inside half the sampling radius")
{
    for (const HoloExpr& f : variant_suite()) {
        for (std::size_t n : {32u, 48u}) {
            const auto s = taylor(f, n, 0.5);
            for (cplx z : probes(10, 0.25, 3)) {
                CAPTURE(f.to_string());
                CHECK(std::abs(s.evaluate(z) - eval(f, z)) < 1e-8);
            }
        }
    }
}

TEST_CASE("series evaluation of an expression matches sampled taylor")
{
    for (const HoloExpr& f : variant_suite()) {
        const auto sampled = taylor(f, 16, 0.5);
        const auto exact = expand(f, 16);
        for (std::size_t k = 0; k <= 16; ++k) {
            CAPTURE(f.to_string());
            // aliasing from the pole at ln 2 dominates for the last variant
            CHECK(std::abs(sampled[k] - exact[k]) < 1e-8 * std::pow(2.0, static_cast<double>(k)));
        }
    }
    // expansion about a shifted center
    const auto shifted = expand(HoloExpr::poly({0.0, 0.0, 1.0}), 3, 2.0);
    CHECK(shifted == SeriesFn({4.0, 4.0, 1.0, 0.0}));
}

TEST_CASE("parser")
{
    const auto check_same = [](const char* text, const HoloExpr& expected) {
        const HoloExpr parsed = parse_expr(text);
        for (cplx z : probes(8, 0.7, 4)) {
            CAPTURE(text);
            CHECK(std::abs(eval(parsed, z) - eval(expected, z)) < 1e-13);
        }
    };
    const HoloExpr z = HoloExpr::var();
    check_same("-z", HoloExpr::poly({0.0, -1.0}));
    check_same("(1-z)*(1+z)", HoloExpr::poly({1.0, 0.0, -1.0}));
    check_same("1-z^2", HoloExpr::poly({1.0, 0.0, -1.0}));
    check_same("mobius(i,i,-1,1)", HoloExpr::mobius(I, I, -1.0, 1.0));
    check_same("exp(z)", HoloExpr::exp());
    check_same("-i*z", HoloExpr::poly({0.0, -I}));
    check_same("-iz", HoloExpr::poly({0.0, -I}));
    check_same("2z + 1.5i", HoloExpr::poly({1.5 * I, 2.0}));
    check_same("(1+z)/(1-z)", HoloExpr::mobius(1.0, 1.0, -1.0, 1.0));
    check_same("exp(2*z)^2", HoloExpr::compose(HoloExpr::exp(), HoloExpr::poly({0.0, 4.0})));
    check_same("compose(exp(z), z/2)", HoloExpr::compose(HoloExpr::exp(), HoloExpr::poly({0.0, 0.5})));
    check_same("z^0 + 1e-1", HoloExpr::constant(1.1));
}

TEST_CASE("parser diagnostics carry positions")
{
    try {
        parse_expr("(((");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
    try {
        parse_expr("1 + foo(z)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_expr("z ^ -1"), ParseError);
    CHECK_THROWS_AS(parse_expr("mobius(1,2,2,4)"), ParseError);
    CHECK_THROWS_AS(parse_expr("mobius(z,1,0,1)"), ParseError);
    CHECK_THROWS_AS(parse_expr("1/(z-z)"), ParseError);
    CHECK_THROWS_AS(parse_expr("z)"), ParseError);
    CHECK_THROWS_AS(parse_expr(""), ParseError);
}

TEST_CASE("to_string reparses to the same function")
{
    for (const HoloExpr& f : variant_suite()) {
        const HoloExpr again = parse_expr(f.to_string());
        for (cplx z : probes(6, 0.6, 9)) {
            CAPTURE(f.to_string());
            CHECK(std::abs(eval(again, z) - eval(f, z)) <= 1e-13 * std::max(1.0, std::abs(eval(f, z))));
        }
    }
}

}
