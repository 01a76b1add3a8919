// holosg: command-line front end for the holosg library.
//
// Every command prints one JSON line to stdout (the report) and can write the
// same report to --report and bulky artifacts (CSV, SVG) to --out / --matrix.
// Exit codes: 0 ok, 1 parse error, 2 numeric failure, 3 escape, 4 inconclusive.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "holosg/berkson_porta.hpp"
#include "holosg/counterexample.hpp"
#include "holosg/errors.hpp"
#include "holosg/expr.hpp"
#include "holosg/geometry.hpp"
#include "holosg/io.hpp"
#include "holosg/semiflow.hpp"
#include "holosg/semigroup.hpp"
#include "holosg/spaces.hpp"
#include "holosg/transfer.hpp"

using namespace holosg;

namespace {

constexpr const char* kSchema = "holosg.report.v1";

enum Exit { kOk = 0, kParse = 1, kNumeric = 2, kEscape = 3, kInconclusive = 4 };

struct Config {
    std::string symbol;
    std::string domain = "unitdisc";
    std::string space = "h2";
    std::string f = "z";
    std::string z0 = "0,0";
    std::string b = "1.5,0";
    std::string F = "1";
    std::string map = "cayley";
    std::string source = "unitdisc";
    std::string target = "halfplane:upper";
    double tol = 1e-9;
    double horizon = 10.0;
    double T_long = 20.0;
    std::size_t N = 64;
    double t = 1.0;
    double h = 1e-3;
    int density = 2;
    std::string out;
    std::string matrix;
    std::string report;
};

struct Outcome {
    json result;
    int code = kOk;
};

// Error raised before any library call, e.g. a bad --map string.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot open " + path + " for writing");
    }
    return out;
}

json series_json(const SeriesFn& s)
{
    json a = json::array();
    for (cplx c : s.coeffs()) {
        a.push_back(to_json(c));
    }
    return a;
}

json status_json(const Trajectory& tr)
{
    json j;
    if (tr.completed()) {
        j["status"] = "Completed";
        j["horizon"] = std::get<Completed>(tr.status).horizon;
    } else if (tr.escaped()) {
        const Escaped& e = tr.escape();
        j["status"] = "Escaped";
        j["t_escape"] = e.t_escape;
        j["exit_point"] = to_json(e.exit_point);
        j["at_infinity"] = e.at_infinity;
    } else {
        j["status"] = "Failed";
        j["reason"] = std::get<Failed>(tr.status).reason;
    }
    return j;
}

// ---------------------------------------------------------------- commands

Outcome cmd_flow(const Config& c, json& inputs)
{
    inputs = {{"symbol", c.symbol}, {"domain", c.domain}, {"z0", c.z0}, {"horizon", c.horizon}, {"tol", c.tol},
              {"out", c.out}};
    const HoloExpr G = parse_expr(c.symbol);
    const Domain d = Domain::parse(c.domain);
    const Trajectory tr = integrate(G, d, parse_complex_pair(c.z0), c.horizon, c.tol);
    if (!c.out.empty()) {
        auto out = open_output(c.out);
        write_csv(out, tr);
    }
    Outcome o;
    o.result = status_json(tr);
    o.result["final_point"] = to_json(tr.final_point());
    o.result["samples"] = tr.points.size();
    o.code = tr.escaped() ? kEscape : kOk;
    return o;
}

std::string ramp_color(std::size_t i, std::size_t n)
{
    // hue around the wheel, fixed saturation and lightness
    const double hue = 300.0 * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n, 2) - 1);
    const double s = 0.7, l = 0.42;
    const double chroma = (1.0 - std::abs(2.0 * l - 1.0)) * s;
    const double hp = hue / 60.0;
    const double x = chroma * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (hp < 1) { r = chroma; g = x; }
    else if (hp < 2) { r = x; g = chroma; }
    else if (hp < 3) { g = chroma; b = x; }
    else if (hp < 4) { g = x; b = chroma; }
    else if (hp < 5) { r = x; b = chroma; }
    else { r = chroma; b = x; }
    const double m = l - chroma / 2.0;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround((r + m) * 255)),
                  static_cast<int>(std::lround((g + m) * 255)), static_cast<int>(std::lround((b + m) * 255)));
    return buf;
}

std::string fixed3(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

Outcome cmd_portrait(const Config& c, json& inputs)
{
    inputs = {{"symbol", c.symbol}, {"domain", c.domain}, {"density", c.density}, {"horizon", c.horizon},
              {"tol", c.tol}, {"out", c.out}};
    if (c.out.empty()) {
        throw UsageError("portrait needs --out");
    }
    const HoloExpr G = parse_expr(c.symbol);
    const Domain d = Domain::parse(c.domain);
    const std::vector<cplx> seeds = sample_grid(d, c.density);

    IntegratorOptions opts;
    opts.throw_on_failure = false;
    std::vector<std::optional<Trajectory>> paths(seeds.size());
    std::vector<std::string> errors(seeds.size());
    const std::size_t batch = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < seeds.size(); start += batch) {
        std::vector<std::future<void>> jobs;
        for (std::size_t i = start; i < std::min(seeds.size(), start + batch); ++i) {
            jobs.push_back(std::async(std::launch::async, [&, i] {
                try {
                    paths[i] = integrate(G, d, seeds[i], c.horizon, c.tol, opts);
                } catch (const Error& e) {
                    errors[i] = e.what();
                }
            }));
        }
        for (auto& j : jobs) {
            j.get();
        }
    }

    // square viewport in the complex plane
    double x0, y0, span;
    if (d.is_disc()) {
        const Disc& disc = d.as_disc();
        span = 2.2 * disc.radius;
        x0 = disc.center.real() - span / 2;
        y0 = disc.center.imag() - span / 2;
    } else {
        const double box = kHalfPlaneBox * c.density;
        span = 2.4 * box;
        if (d.as_half_plane().kind == HalfPlaneKind::Right) {
            x0 = -0.2 * box;
            y0 = -1.2 * box;
        } else {
            x0 = -1.2 * box;
            y0 = -0.2 * box;
        }
    }
    const double scale = 800.0 / span;
    auto px = [&](cplx z) { return fixed3((z.real() - x0) * scale) + "," + fixed3((y0 + span - z.imag()) * scale); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    svg << "<defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"800\" height=\"800\"/></clipPath></defs>\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
    if (d.is_disc()) {
        const Disc& disc = d.as_disc();
        svg << "<circle cx=\"" << fixed3((disc.center.real() - x0) * scale) << "\" cy=\""
            << fixed3((y0 + span - disc.center.imag()) * scale) << "\" r=\"" << fixed3(disc.radius * scale)
            << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
        const bool overlay = !(d == Domain::unit_disc()) && std::abs(disc.center) + 1.0 <= disc.radius;
        if (overlay) {
            svg << "<circle cx=\"" << fixed3(-x0 * scale) << "\" cy=\"" << fixed3((y0 + span) * scale) << "\" r=\""
                << fixed3(scale) << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
        }
    } else if (d.as_half_plane().kind == HalfPlaneKind::Right) {
        svg << "<line x1=\"" << fixed3(-x0 * scale) << "\" y1=\"0\" x2=\"" << fixed3(-x0 * scale)
            << "\" y2=\"800\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    } else {
        svg << "<line x1=\"0\" y1=\"" << fixed3((y0 + span) * scale) << "\" x2=\"800\" y2=\""
            << fixed3((y0 + span) * scale) << "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    }
    svg << "<g clip-path=\"url(#view)\" fill=\"none\" stroke-width=\"1\">\n";
    std::size_t completed = 0, escaped = 0, failed = 0;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (!paths[i]) {
            std::cerr << "seed " << i << " " << format_complex(seeds[i]) << " skipped: " << errors[i] << "\n";
            ++failed;
            continue;
        }
        const Trajectory& tr = *paths[i];
        if (tr.escaped()) {
            ++escaped;
        } else if (tr.completed()) {
            ++completed;
        } else {
            std::cerr << "seed " << i << " " << format_complex(seeds[i]) << ": " << status_string(tr) << "\n";
            ++failed;
        }
        svg << "<polyline stroke=\"" << ramp_color(i, seeds.size()) << "\"";
        if (tr.escaped()) {
            svg << " stroke-dasharray=\"4,3\"";
        }
        svg << " points=\"";
        for (std::size_t k = 0; k < tr.points.size(); ++k) {
            svg << (k ? " " : "") << px(tr.points[k]);
        }
        svg << "\"/>\n";
    }
    svg << "</g>\n</svg>\n";
    auto out = open_output(c.out);
    out << svg.str();

    Outcome o;
    o.result = {{"seeds", seeds.size()}, {"completed", completed}, {"escaped", escaped}, {"failed", failed}};
    return o;
}

Outcome cmd_classify(const Config& c, json& inputs)
{
    inputs = {{"symbol", c.symbol}, {"density", c.density}};
    ClassifyOptions opts;
    opts.density = c.density;
    const BPVerdict v = bp_classify(parse_expr(c.symbol), opts);
    Outcome o;
    o.result["status"] = to_string(v.status);
    o.result["b"] = v.b ? to_json(*v.b) : json(nullptr);
    o.result["min_re_F"] = v.min_re_F ? json(*v.min_re_F) : json(nullptr);
    o.result["min_re_at"] = v.min_re_at ? to_json(*v.min_re_at) : json(nullptr);
    if (v.witness) {
        o.result["witness"] = {{"point", to_json(v.witness->point)}, {"time", v.witness->time}};
    } else {
        o.result["witness"] = nullptr;
    }
    o.code = v.status == BPStatus::Inconclusive ? kInconclusive : kOk;
    return o;
}

Outcome cmd_evolve(const Config& c, json& inputs)
{
    inputs = {{"symbol", c.symbol}, {"f", c.f}, {"space", c.space}, {"t", c.t}, {"N", c.N}, {"tol", c.tol},
              {"matrix", c.matrix}};
    const HoloExpr G = parse_expr(c.symbol);
    const SeriesFn f = expand(parse_expr(c.f), c.N);
    const CoefSpace space = CoefSpace::parse(c.space);
    const SeriesFn tf = apply(G, c.t, f, c.tol);
    Outcome o;
    o.result["norm_f"] = norm(space, f);
    o.result["norm_Tf"] = norm(space, tf);
    o.result["coeffs"] = series_json(tf);
    if (!c.matrix.empty()) {
        const OperatorMatrix m = operator_matrix(G, c.t, c.N, c.tol);
        auto out = open_output(c.matrix);
        write_csv(out, m);
        o.result["matrix"] = {{"t", m.t()},
                              {"N", m.degree()},
                              {"spectral_radius_estimate", m.spectral_radius_estimate()},
                              {"residuals", {{"apply", max_abs_diff(m * f, tf)}}}};
    }
    return o;
}

Outcome cmd_check_e(const Config& c, json& inputs)
{
    inputs = {{"space", c.space}};
    const CoefSpace space = CoefSpace::parse(c.space);
    const ConditionEVerdict v = condition_E(space);
    Outcome o;
    o.result = {{"space", space.to_string()}, {"status", to_string(v.status)}, {"evidence", v.evidence},
                {"partial_sums", v.partial_sums}};
    o.code = v.status == ConditionEStatus::Inconclusive ? kInconclusive : kOk;
    return o;
}

Outcome cmd_generator_check(const Config& c, json& inputs)
{
    inputs = {{"symbol", c.symbol}, {"f", c.f}, {"space", c.space}, {"h", c.h}, {"N", c.N}, {"tol", c.tol}};
    const HoloExpr G = parse_expr(c.symbol);
    const SeriesFn f = expand(parse_expr(c.f), c.N);
    const CoefSpace space = CoefSpace::parse(c.space);
    const std::vector<double> hs{1e-2, 5e-3, 2.5e-3};
    std::vector<double> rs;
    for (double h : hs) {
        rs.push_back(generator_residual(G, f, space, h, c.tol));
    }
    Outcome o;
    o.result["residual"] = generator_residual(G, f, space, c.h, c.tol);
    o.result["slope_h"] = hs;
    o.result["slope_residuals"] = rs;
    o.result["slope"] = std::log(rs.front() / rs.back()) / std::log(hs.front() / hs.back());
    // how G f' itself sits in the space: the domain condition of the generator
    if (c.N >= 8) {
        const MembershipEstimate m = membership_estimate(space, generator_image(G, f), std::max<std::size_t>(2, c.N / 4));
        o.result["image_membership"] = {{"norm_truncated", m.norm_truncated},
                                        {"tail_slope", m.tail_slope},
                                        {"verdict", to_string(m.verdict)}};
    }
    return o;
}

Outcome cmd_counterexample(const Config& c, json& inputs)
{
    inputs = {{"b", c.b}, {"F", c.F}, {"z0", c.z0}, {"horizon", c.T_long}, {"tol", c.tol}, {"out", c.out}};
    const HoloExpr F = parse_expr(c.F);
    const CounterexampleReport r = run_counterexample(parse_complex_pair(c.b), F, parse_complex_pair(c.z0),
                                                      c.T_long, c.tol);
    if (!c.out.empty()) {
        auto out = open_output(c.out);
        write_csv(out, r.trajectory);
    }
    Outcome o;
    o.result = {{"b", to_json(r.b)},
                {"F", r.F_desc},
                {"symbol", build_counterexample(r.b, F).to_string()},
                {"t_exit", r.t_exit ? json(*r.t_exit) : json(nullptr)},
                {"dw_distance", r.dw_distance},
                {"final_point", to_json(r.trajectory.final_point())},
                {"warning", r.warning ? json(*r.warning) : json(nullptr)}};
    o.code = r.t_exit ? kOk : kInconclusive;
    return o;
}

ConformalPair parse_map(const Config& c)
{
    if (c.map == "cayley") {
        return cayley();
    }
    if (c.map.rfind("mobius:", 0) == 0) {
        const std::vector<double> v = parse_number_list(std::string_view(c.map).substr(7), 7);
        if (v.size() != 4 && v.size() != 8) {
            throw ParseError("mobius map needs 4 real or 8 re,im numbers", 7);
        }
        cplx k[4];
        for (int i = 0; i < 4; ++i) {
            k[i] = v.size() == 4 ? cplx(v[i]) : cplx(v[2 * i], v[2 * i + 1]);
        }
        return mobius_pair(k[0], k[1], k[2], k[3], Domain::parse(c.source), Domain::parse(c.target));
    }
    throw ParseError("map must be cayley or mobius:a,b,c,d", 0);
}

Outcome cmd_transfer_check(const Config& c, json& inputs)
{
    inputs = {{"symbol", c.symbol}, {"map", c.map}, {"source", c.source}, {"target", c.target}, {"z0", c.z0},
              {"t", c.t}, {"tol", c.tol}};
    const HoloExpr G = parse_expr(c.symbol);
    const ConformalPair pair = parse_map(c);
    const cplx z0 = parse_complex_pair(c.z0);
    const HoloExpr H = transfer_symbol(G, pair);
    Outcome o;
    o.result = {{"transferred", H.to_string()},
                {"H_at_z0", to_json(eval(H, z0))},
                {"residual", conjugation_residual(G, pair, z0, c.t, c.tol)}};
    return o;
}

// ------------------------------------------------------------ config files

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config " + path);
    }
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        entries.emplace_back(trim(line.substr(0, eq)), value);
    }
    return entries;
}

const char* error_kind(const Error& e)
{
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
    if (dynamic_cast<const BadParameter*>(&e)) return "BadParameter";
    if (dynamic_cast<const ToleranceError*>(&e)) return "ToleranceError";
    if (dynamic_cast<const StiffnessError*>(&e)) return "StiffnessError";
    if (dynamic_cast<const DegreeMismatch*>(&e)) return "DegreeMismatch";
    if (dynamic_cast<const HerglotzError*>(&e)) return "HerglotzError";
    return "Error";
}

std::string option_flag(const std::string& key) { return key.size() == 1 ? "-" + key : "--" + key; }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"holomorphic semiflows and composition semigroups"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    Config c;
    std::string config_path;
    using Handler = Outcome (*)(const Config&, json&);
    std::map<std::string, Handler> handlers;

    auto add = [&](const char* name, const char* help, Handler fn) {
        handlers[name] = fn;
        CLI::App* sub = app.add_subcommand(name, help);
        sub->set_help_flag("--help", "print this help");  // -h is not free: --h is the step size
        sub->add_option("--config", config_path, "file of key = value lines; flags win");
        sub->add_option("--report", c.report, "write the JSON report here as well");
        return sub;
    };
    auto tol = [&](CLI::App* s) { s->add_option("--tol", c.tol, "integrator tolerance")->capture_default_str(); };

    auto* flow = add("flow", "integrate u' = G(u) from z0", cmd_flow);
    flow->add_option("--symbol", c.symbol, "G")->required();
    flow->add_option("--domain", c.domain)->capture_default_str();
    flow->add_option("--z0", c.z0, "re,im")->capture_default_str();
    flow->add_option("--horizon", c.horizon)->capture_default_str();
    flow->add_option("--out", c.out, "trajectory CSV");
    tol(flow);

    auto* portrait = add("portrait", "SVG phase portrait from grid seeds", cmd_portrait);
    portrait->add_option("--symbol", c.symbol)->required();
    portrait->add_option("--domain", c.domain)->capture_default_str();
    portrait->add_option("--density", c.density)->capture_default_str();
    portrait->add_option("--horizon", c.horizon)->capture_default_str();
    portrait->add_option("--out", c.out, "SVG path")->required();
    tol(portrait);

    auto* classify = add("classify", "Berkson–Porta classification on the unit disc", cmd_classify);
    classify->add_option("--symbol", c.symbol)->required();
    classify->add_option("--density", c.density)->capture_default_str();

    auto* evolve = add("evolve", "T(t)f as a truncated series", cmd_evolve);
    evolve->add_option("--symbol", c.symbol)->required();
    evolve->add_option("--f", c.f)->capture_default_str();
    evolve->add_option("--space", c.space)->capture_default_str();
    evolve->add_option("--t", c.t)->capture_default_str();
    evolve->add_option("-N,--degree", c.N)->capture_default_str();
    evolve->add_option("--matrix", c.matrix, "operator matrix CSV");
    tol(evolve);

    auto* check_e = add("check-e", "evaluation condition for a weighted space", cmd_check_e);
    check_e->add_option("--space", c.space)->capture_default_str();

    auto* gen = add("generator-check", "residual of (T(h)f - f)/h against G f'", cmd_generator_check);
    gen->add_option("--symbol", c.symbol)->required();
    gen->add_option("--f", c.f)->capture_default_str();
    gen->add_option("--space", c.space)->capture_default_str();
    gen->add_option("--h", c.h)->capture_default_str();
    gen->add_option("-N,--degree", c.N)->capture_default_str();
    tol(gen);

    auto* counter = add("counterexample", "flow on the radius-2 disc leaving the unit disc", cmd_counterexample);
    counter->add_option("--b", c.b, "re,im with 1 < |b| < 2")->capture_default_str();
    counter->add_option("--F", c.F, "Herglotz factor")->capture_default_str();
    counter->add_option("--z0", c.z0)->capture_default_str();
    counter->add_option("--horizon", c.T_long, "T_long")->capture_default_str();
    tol(counter);
    counter->add_option("--out", c.out, "trajectory CSV");

    auto* transfer = add("transfer-check", "conformal transfer of a symbol and flow conjugation", cmd_transfer_check);
    transfer->add_option("--symbol", c.symbol, "G on the target domain")->required();
    transfer->add_option("--map", c.map, "cayley or mobius:a,b,c,d")->capture_default_str();
    transfer->add_option("--source", c.source)->capture_default_str();
    transfer->add_option("--target", c.target)->capture_default_str();
    transfer->add_option("--z0", c.z0)->capture_default_str();
    transfer->add_option("--t", c.t)->capture_default_str();
    tol(transfer);

    std::vector<std::string> args(argv + 1, argv + argc);
    std::string command;
    json inputs = json::object();

    auto emit = [&](json report, int code) {
        report["exit_code"] = code;
        const std::string line = dump_json(report);
        std::cout << line << "\n";
        if (!c.report.empty()) {
            std::ofstream(c.report, std::ios::binary) << line << "\n";
        }
        return code;
    };
    auto fail = [&](const char* kind, const std::string& message, std::optional<std::size_t> position, int code) {
        std::cerr << "holosg: " << message << "\n";
        json report = {{"schema", kSchema}, {"command", command}, {"inputs", inputs}};
        report["error"] = {{"kind", kind}, {"message", message}};
        if (position) {
            report["error"]["position"] = *position;
        }
        return emit(report, code);
    };

    try {
        // config values go right after the subcommand name so later flags override them
        auto sub_it = std::find_if(args.begin(), args.end(), [&](const std::string& a) { return handlers.count(a); });
        if (sub_it != args.end()) {
            command = *sub_it;
            // both are needed before the full parse: one feeds it, the other reports its failures
            auto prescan = [&](const std::string& flag, std::string& target) {
                for (std::size_t i = 0; i < args.size(); ++i) {
                    if (args[i] == flag && i + 1 < args.size()) {
                        target = args[i + 1];
                    } else if (args[i].rfind(flag + "=", 0) == 0) {
                        target = args[i].substr(flag.size() + 1);
                    }
                }
            };
            prescan("--config", config_path);
            prescan("--report", c.report);
            if (!config_path.empty()) {
                CLI::App* sub = app.get_subcommand(command);
                std::vector<std::string> injected;
                for (const auto& [key, value] : read_config(config_path)) {
                    if (key == "config" || !sub->get_option_no_throw(option_flag(key))) {
                        throw UsageError("unknown config key '" + key + "' for " + command);
                    }
                    injected.push_back(option_flag(key));
                    injected.push_back(value);
                }
                args.insert(sub_it + 1, injected.begin(), injected.end());
            }
        }
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), std::nullopt, kParse);
    } catch (const UsageError& e) {
        return fail("usage", e.what(), std::nullopt, kParse);
    }

    try {
        const Outcome o = handlers.at(command)(c, inputs);
        json report = {{"schema", kSchema}, {"command", command}, {"inputs", inputs}, {"result", o.result}};
        return emit(report, o.code);
    } catch (const ParseError& e) {
        return fail("ParseError", e.what(), e.position(), kParse);
    } catch (const UsageError& e) {
        return fail("usage", e.what(), std::nullopt, kParse);
    } catch (const EscapeError& e) {
        return fail("EscapeError", e.what(), std::nullopt, kEscape);
    } catch (const Error& e) {
        return fail(error_kind(e), e.what(), std::nullopt, kNumeric);
    }
}
