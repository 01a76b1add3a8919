// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.
// Usage: holosg_acceptance <path to holosg CLI>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "holosg/berkson_porta.hpp"
#include "holosg/counterexample.hpp"
#include "holosg/expr.hpp"
#include "holosg/semiflow.hpp"
#include "holosg/semigroup.hpp"
#include "holosg/spaces.hpp"
#include "holosg/transfer.hpp"
#include "oracles.hpp"

using namespace holosg;
namespace fs = std::filesystem;

namespace {

struct Check {
    bool pass;
    std::string detail;
};

// 12 seeds spread over the density-1 grid of the unit disc
std::vector<cplx> twelve_seeds()
{
    const auto grid = sample_grid(Domain::unit_disc(), 1);
    std::vector<cplx> seeds;
    for (int k = 0; k < 12; ++k) {
        seeds.push_back(grid[static_cast<std::size_t>(std::lround(k * (grid.size() - 1) / 11.0))]);
    }
    return seeds;
}

SeriesFn coeffs(std::vector<cplx> c, std::size_t degree)
{
    c.resize(degree + 1, 0.0);
    return SeriesFn(std::move(c));
}

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Check linear_flow()
{
    const HoloExpr G = parse_expr("-z");
    double worst = 0.0;
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
        for (cplx z : twelve_seeds()) {
            worst = std::max(worst, std::abs(flow_point(G, Domain::unit_disc(), z, t, 1e-10) - z * std::exp(-t)));
        }
    }
    return {worst <= 1e-8, "max error " + num(worst) + " (tol 1e-8)"};
}

Check semigroup_law()
{
    double worst = 0.0;
    for (const char* symbol : {"-z", "-i*z", "1-z^2"}) {
        const HoloExpr G = parse_expr(symbol);
        for (double t : {0.25, 0.5, 1.0, 2.0}) {
            for (double s : {0.25, 0.5, 1.0, 2.0}) {
                for (cplx z : twelve_seeds()) {
                    worst = std::max(worst, semigroup_residual(G, Domain::unit_disc(), z, t, s, 1e-10));
                }
            }
        }
    }
    return {worst <= 1e-7, "max residual " + num(worst) + " (tol 1e-7)"};
}

Check escape_times()
{
    const HoloExpr G = parse_expr("z");
    double worst = 0.0;
    bool all = true;
    for (double r : {0.3, 0.5, 0.9}) {
        const auto t = escape_time(G, Domain::unit_disc(), std::polar(r, 1.0), 10.0, 1e-10);
        all = all && t.has_value();
        if (t) {
            worst = std::max(worst, std::abs(*t - std::log(1.0 / r)));
        }
    }
    const auto tq = escape_time(parse_expr("z^2"), Domain::unit_disc(), 0.9, 10.0, 1e-10);
    const double quad = tq ? std::abs(*tq - (1.0 / 0.9 - 1.0)) : INFINITY;
    return {all && worst <= 1e-6 && quad <= 1e-5,
            "linear max error " + num(worst) + " (tol 1e-6), quadratic error " + num(quad) + " (tol 1e-5)"};
}

Check berkson_porta_round_trip()
{
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> radius(0.0, 0.9), angle(0.0, 2.0 * std::numbers::pi), w(0.0, 2.0);
    double worst = 0.0;
    int global = 0;
    for (int k = 0; k < 20; ++k) {
        const cplx b = std::polar(radius(rng), angle(rng));
        // c + i e + d (1+z)/(1-z), c, d >= 0 and c + d > 0
        const HoloExpr F = HoloExpr::sum(HoloExpr::constant(cplx(0.05 + w(rng), w(rng) - 1.0)),
                                         HoloExpr::product(HoloExpr::constant(w(rng)), HoloExpr::mobius(1.0, 1.0, -1.0, 1.0)));
        const BPVerdict v = bp_classify(bp_build(b, F));
        if (v.status == BPStatus::Global && v.b) {
            ++global;
            worst = std::max(worst, std::abs(*v.b - b));
        } else {
            worst = INFINITY;
        }
    }
    const BPVerdict outward = bp_classify(parse_expr("z"));
    const bool witnessed = outward.status == BPStatus::NotGlobal && outward.witness.has_value();
    return {global == 20 && worst <= 1e-6 && witnessed,
            std::to_string(global) + "/20 Global, max |b error| " + num(worst) + " (tol 1e-6), z -> " +
                to_string(outward.status) + (witnessed ? " with witness" : " without witness")};
}

Check condition_e_table()
{
    const std::vector<std::pair<CoefSpace, ConditionEStatus>> table{
        {CoefSpace::hardy(), ConditionEStatus::Satisfied},
        {CoefSpace::bergman(), ConditionEStatus::Satisfied},
        {CoefSpace::dirichlet(), ConditionEStatus::Satisfied},
        {CoefSpace::custom(2.0, BetaRule::power(0.6)), ConditionEStatus::Violated},
        {CoefSpace::custom(2.0, BetaRule::geometric(2.0)), ConditionEStatus::Violated},
        {CoefSpace::custom(1.0, BetaRule::power(-0.5)), ConditionEStatus::Satisfied},
    };
    int matched = 0;
    std::string got;
    for (const auto& [space, expected] : table) {
        const auto status = condition_E(space).status;
        matched += status == expected;
        got += (got.empty() ? "" : ",") + to_string(status);
    }
    return {matched == 6, std::to_string(matched) + "/6 match (" + got + ")"};
}

Check generator_identity()
{
    const HoloExpr G = parse_expr("1-z^2");
    const CoefSpace h2 = CoefSpace::hardy();
    double min_slope = INFINITY, max_res = 0.0;
    for (const SeriesFn& f : {coeffs({0.0, 1.0}, 64), coeffs({0.0, 1.0, 1.0}, 64)}) {
        const double r1 = generator_residual(G, f, h2, 1e-2, 1e-12);
        const double r3 = generator_residual(G, f, h2, 2.5e-3, 1e-12);
        min_slope = std::min(min_slope, std::log(r1 / r3) / std::log(4.0));
        max_res = std::max(max_res, generator_residual(G, f, h2, 1e-3, 1e-12));
    }
    return {min_slope >= 0.9 && max_res <= 1e-2,
            "min slope " + num(min_slope) + " (>= 0.9), residual at h=1e-3 " + num(max_res) + " (tol 1e-2)"};
}

Check maximality()
{
    const HoloExpr G = parse_expr("1-z^2");
    double worst = 0.0;
    for (const SeriesFn& f : {coeffs({0.0, 1.0}, 64), coeffs({0.0, 1.0, 1.0}, 64)}) {
        worst = std::max(worst, maximality_residual(G, f, CoefSpace::hardy(), 0.5, 64, 1e-12));
    }
    return {worst <= 1e-6, "max residual " + num(worst) + " (tol 1e-6)"};
}

Check transport()
{
    const std::vector<std::pair<cplx, double>> probes{{0.5, 1.0},           {0.2, 0.4},          {cplx(0.1, 0.3), 0.7},
                                                      {cplx(-0.4, 0.2), 1.5}, {cplx(0.0, -0.6), 0.3}, {cplx(0.3, 0.3), 2.0}};
    double worst = 0.0;
    for (const char* symbol : {"-z", "1-z^2"}) {
        for (const auto& [z, t] : probes) {
            worst = std::max(worst, transport_pde_residual(parse_expr(symbol), coeffs({0.0, 1.0, 1.0}, 64), z, t,
                                                           1e-3, 1e-3));
        }
    }
    return {worst <= 1e-5, "max residual " + num(worst) + " (tol 1e-5)"};
}

Check counterexample()
{
    const auto r = run_counterexample(1.5, HoloExpr::constant(1.0), 0.0, 20.0, 1e-10);
    double max_modulus = 0.0;
    for (cplx z : r.trajectory.points) {
        max_modulus = std::max(max_modulus, std::abs(z));
    }
    const bool pass = r.t_exit.has_value() && max_modulus < kOuterRadius && r.dw_distance < 1e-3;
    return {pass, "t_exit " + (r.t_exit ? num(*r.t_exit) : std::string("none")) + ", max |phi| " + num(max_modulus) +
                      " (< 2), |phi(20) - b| " + num(r.dw_distance) + " (tol 1e-3)"};
}

Check conjugation()
{
    const ConformalPair c = cayley();
    double worst = 0.0;
    for (const char* symbol : {"i", "-(z-i)"}) {
        for (cplx z0 : {cplx(0.0), cplx(0.3, 0.0), cplx(-0.2, 0.5)}) {
            for (double t : {0.5, 1.0, 2.0}) {
                worst = std::max(worst, conjugation_residual(parse_expr(symbol), c, z0, t, 1e-10));
            }
        }
    }
    const double fixed = std::abs(eval(transfer_symbol(parse_expr("-(z-i)"), c), 0.0));
    return {worst <= 1e-7 && fixed <= 1e-9,
            "max residual " + num(worst) + " (tol 1e-7), |H(z*)| " + num(fixed) + " (tol 1e-9)"};
}

// Runs the CLI in a fresh directory; returns every file it left there plus stdout.
std::map<std::string, std::string> cli_run(const std::string& cli, const std::string& args, const fs::path& dir)
{
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ofstream(dir / "run.cfg") << "symbol = -z\nz0 = 0.3,0.1\nhorizon = 4\n";
    const std::string cmd = "cd '" + dir.string() + "' && '" + cli + "' " + args + " > stdout.txt 2> stderr.txt";
    const int status = std::system(cmd.c_str());
    std::map<std::string, std::string> files{{"#status", std::to_string(status)}};
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream bytes;
        bytes << in.rdbuf();
        files[entry.path().filename().string()] = bytes.str();
    }
    return files;
}

Check determinism(const std::string& cli)
{
    const std::vector<std::string> runs{
        "flow --symbol \"-z\" --z0 0.5,0 --horizon 5 --out t.csv --report r.json",
        "flow --config run.cfg --out t.csv",
        "portrait --symbol \"(0.375*z-1)*(z-1.5)\" --domain disc:0,0,2 --horizon 20 --out p.svg",
        "portrait --symbol \"-i*z\" --out p.svg",
        "classify --symbol \"1-z^2\" --report r.json",
        "evolve --symbol \"1-z^2\" --f \"z+z^2\" -N 16 --t 0.5 --matrix m.csv --report r.json",
        "check-e --space dirichlet",
        "generator-check --symbol \"1-z^2\" --f z --space h2 --h 1e-3",
        "counterexample --out c.csv --report r.json",
        "transfer-check --symbol \"-(z-i)\" --z0 0.3,0 --t 2 --tol 1e-10",
    };
    const fs::path base = fs::temp_directory_path() / ("holosg_acceptance_" + std::to_string(::getpid()));
    int same = 0;
    std::string mismatched;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto a = cli_run(cli, runs[i], base / "a");
        const auto b = cli_run(cli, runs[i], base / "b");
        if (a == b && a.at("stdout.txt").size() > 0) {
            ++same;
        } else {
            mismatched += " [" + runs[i] + "]";
        }
    }
    fs::remove_all(base);
    return {same == static_cast<int>(runs.size()),
            std::to_string(same) + "/" + std::to_string(runs.size()) + " commands byte-identical" + mismatched};
}

Check eval_norms()
{
    const double h2 = std::abs(eval_norm(CoefSpace::hardy(), 0.6, 200) - 1.25);
    const double bergman = std::abs(eval_norm(CoefSpace::bergman(), 0.5, 400) - 4.0 / 3.0);
    return {h2 <= 1e-6 && bergman <= 1e-5, "H2 error " + num(h2) + " (tol 1e-6), Bergman error " + num(bergman) + " (tol 1e-5)"};
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: holosg_acceptance <holosg cli>\n";
        return 2;
    }
    const std::string cli = fs::absolute(argv[1]).string();

    struct Criterion {
        int id;
        const char* name;
        double budget_s;  // 0: no runtime limit
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "linear flow oracle", 1.0, linear_flow},
        {2, "semigroup law", 5.0, semigroup_law},
        {3, "escape times", 0.0, escape_times},
        {4, "Berkson-Porta round trip", 30.0, berkson_porta_round_trip},
        {5, "condition (E) table", 0.0, condition_e_table},
        {6, "generator identity", 0.0, generator_identity},
        {7, "maximality integral identity", 0.0, maximality},
        {8, "transport equation", 0.0, transport},
        {9, "counterexample leaves the unit disc", 2.0, counterexample},
        {10, "conformal conjugation", 0.0, conjugation},
        {11, "CLI determinism", 0.0, [&] { return determinism(cli); }},
        {12, "evaluation functional norms", 0.0, eval_norms},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = c.run();
        } catch (const std::exception& e) {
            result = {false, std::string("threw: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string timing = num(elapsed) + " s";
        if (c.budget_s > 0.0) {
            timing += " (limit " + num(c.budget_s) + " s)";
            result.pass = result.pass && elapsed < c.budget_s;
        }
        std::cout << (result.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " - "
                  << result.detail << ", " << timing << "\n";
        failed += !result.pass;
    }
    std::cout << (failed ? "FAIL" : "PASS") << " acceptance: " << 12 - failed << "/12 criteria\n";
    return failed ? 1 : 0;
}
