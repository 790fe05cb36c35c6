#include "annulus/cli.hpp"

#include "annulus/bounds.hpp"
#include "annulus/embedding.hpp"
#include "annulus/error.hpp"
#include "annulus/generators.hpp"
#include "annulus/io.hpp"
#include "annulus/solvers.hpp"
#include "annulus/sweep.hpp"
#include "annulus/verify.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

namespace annulus::cli {

namespace {

using io::json;

struct Global {
    std::uint64_t seed = 1;
    double tolerance = 1e-9;
    bool strict = false;
    std::string output;
    std::string format = "json";
    std::optional<std::size_t> budget;

    BuildOptions build() const { return {tolerance, strict}; }
};

struct Output {
    std::string text;
    int code = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<std::size_t> budget_from_env() {
    const char* raw = std::getenv(kBudgetEnv);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError(std::string(kBudgetEnv) + " must be a positive integer");
    return static_cast<std::size_t>(v);
}

json report(const Global& g, const std::string& command, const std::string& mode, const std::string& anchor,
            json result) {
    json j;
    j["tool"] = "annulus";
    j["version"] = kVersion;
    j["seed"] = g.seed;
    j["mode"] = mode;
    j["command"] = command;
    j["anchor"] = anchor;
    j["tolerance"] = g.tolerance;
    j["result"] = std::move(result);
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void require_json(const Global& g, const std::string& command) {
    if (g.format != "json") throw UsageError(command + ": only --format json is supported");
}

// Instance output: the instance itself plus a "meta" block; readers ignore it.
Output instance_output(const Global& g, const std::string& command, const std::string& anchor,
                       const AnnulusInstance& inst) {
    require_json(g, command);
    json j = io::to_json(inst);
    json meta = report(g, command, to_string(inst.mode), anchor, json::object());
    meta.erase("result");
    j["meta"] = meta;
    return {dump(j), 0};
}

std::string instance_mode(const json& j) {
    return j.contains("mode") ? j["mode"].get<std::string>() : to_string(ArithmeticMode::Float);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Annulus graph construction, colouring, exact solvers, bounds and probes", "annulus"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Global g;
    app.add_option("--seed", g.seed, "RNG seed; fixes every stochastic step");
    app.add_option("--tolerance", g.tolerance, "float-mode boundary tolerance")->check(CLI::NonNegativeNumber);
    app.add_flag("--strict-boundaries", g.strict, "reject pairs within tolerance of r1 or r2");
    app.add_option("-o,--output", g.output, "write the report to this file instead of stdout");
    app.add_option("--format", g.format, "json or csv (csv for bounds only)")
        ->check(CLI::IsMember({"json", "csv"}));
    std::size_t budget_flag = 0;
    app.add_option("--budget", budget_flag, "vertex budget for exact solvers and embedding search")
        ->check(CLI::PositiveNumber);
    app.fallthrough();

    std::function<Output()> action;

    // ── gen ──────────────────────────────────────────────────────
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    gen->require_subcommand(1);
    gen->fallthrough();

    LatticeSpec lat;
    std::string lat_eps = "1/2";
    auto* gen_lat = gen->add_subcommand("lattice", "eps Z^d restricted to B(0,n), exact arithmetic");
    gen_lat->add_option("--d", lat.d)->required()->check(CLI::PositiveNumber);
    gen_lat->add_option("--x", lat.x, "upper radius (lower radius is 1)")->required();
    gen_lat->add_option("--eps", lat_eps, "lattice spacing as a rational, e.g. 3/10");
    gen_lat->add_option("--n", lat.n, "radius of the restricting ball")->required();
    gen_lat->add_option("--max-points", lat.max_points);
    gen_lat->fallthrough();
    gen_lat->callback([&] {
        action = [&] {
            lat.eps = parse_rational(lat_eps);
            return instance_output(g, "gen lattice", "eps Z^d within B(0,n); edge iff 1 <= |u-v| <= x",
                                   gen_lattice(lat));
        };
    });

    double cyc_x = 2.0;
    auto* gen_cyc = gen->add_subcommand("cycle1d", "1D odd-cycle instance with radii (1, x)");
    gen_cyc->add_option("--x", cyc_x)->required();
    gen_cyc->fallthrough();
    gen_cyc->callback([&] {
        action = [&] {
            return instance_output(g, "gen cycle1d", "1D odd cycle: omega = 2, chi = 3", gen_cycle_1d(cyc_x));
        };
    });

    SphereNetSpec sph;
    std::string sph_method = "greedy-net";
    double sph_eps = std::numbers::pi / 16.0;
    double sph_lambda = 1.0;
    auto* gen_sph = gen->add_subcommand("sphere", "unit-sphere point set with radii (2/x, 2)");
    gen_sph->add_option("--d", sph.d)->required()->check(CLI::PositiveNumber);
    gen_sph->add_option("--x", sph.x)->required();
    gen_sph->add_option("--method", sph_method)->check(CLI::IsMember({"greedy-net", "poisson"}));
    gen_sph->add_option("--eps", sph_eps, "net spacing (greedy-net)");
    gen_sph->add_option("--lambda", sph_lambda, "intensity per unit surface measure (poisson)");
    gen_sph->add_option("--probes", sph.probes);
    gen_sph->fallthrough();
    gen_sph->callback([&] {
        action = [&] {
            sph.seed = g.seed;
            if (sph_method == "poisson") {
                sph.method = PoissonCloud{sph_lambda};
            } else {
                sph.method = GreedyNet{sph_eps};
            }
            return instance_output(g, "gen sphere", "points on S^{d-1}; edge iff |u-v| >= 2/x", gen_sphere_net(sph));
        };
    });

    int easy_d = 3;
    auto* gen_easy = gen->add_subcommand("easy-lemma", "2d+2 points in B(0,0.99) pairwise more than 1 apart");
    gen_easy->add_option("--d", easy_d)->required();
    gen_easy->fallthrough();
    gen_easy->callback([&] {
        action = [&] {
            return instance_output(g, "gen easy-lemma", "N_gamma >= 2d+2 (d >= 3), 5 (d = 2); gamma = 0.99",
                                   gen_easy_lemma_instance(easy_d));
        };
    });

    // ── color ────────────────────────────────────────────────────
    auto* color = app.add_subcommand("color", "colour an instance");
    color->require_subcommand(1);
    color->fallthrough();
    std::string color_file;
    auto* color_sweep = color->add_subcommand("sweep", "sweep-hyperplane batch colouring");
    color_sweep->add_option("file", color_file, "instance JSON")->required();
    color_sweep->fallthrough();
    color_sweep->callback([&] {
        action = [&] {
            require_json(g, "color sweep");
            const auto inst = io::instance_from_json(io::read_json_file(color_file));
            const Graph graph = build_graph(inst, g.build());
            const auto col = sweep_color(inst, graph);
            const auto tokens = verify_token_invariants(inst, col, g.build());
            std::size_t ball = 0;
            if (inst.r1 > 0.0) {
                for (std::size_t v = 0; v < inst.size(); ++v) {
                    ball = std::max(ball, colors_in_ball(inst, col, v, inst.r1));
                }
            }
            json r = io::to_json(col);
            r["n"] = inst.size();
            r["edges"] = graph.edge_count();
            r["max_color"] = col.max_color();
            r["token_count"] = col.token_count();
            r["proper"] = is_proper(graph, col.colors);
            r["token_invariants_ok"] = tokens.ok;
            r["violations"] = tokens.violations;
            r["max_colors_in_r1_ball"] = ball;
            r["seven_pow_d"] = seven_pow(inst.dim);
            return Output{dump(report(g, "color sweep", to_string(inst.mode),
                                      "sweep colouring: chi <= nu(2 + r1/r2, d) 7^d omega", r)),
                          0};
        };
    });

    // ── exact ────────────────────────────────────────────────────
    auto* exact = app.add_subcommand("exact", "exact solvers on a graph or instance file");
    exact->require_subcommand(1);
    exact->fallthrough();
    std::string exact_file;
    auto add_exact = [&](const std::string& name, const std::string& help, const std::string& anchor) {
        auto* sub = exact->add_subcommand(name, help);
        sub->add_option("file", exact_file, "instance or graph JSON")->required();
        sub->fallthrough();
        sub->callback([&, name, anchor] {
            action = [&, name, anchor] {
                require_json(g, "exact " + name);
                const json input = io::read_json_file(exact_file);
                const Graph graph = io::load_graph(input, g.build());
                json r;
                r["n"] = graph.size();
                r["edges"] = graph.edge_count();
                if (name == "omega") {
                    const auto res = max_clique(graph, g.budget.value_or(kDefaultCliqueBudget));
                    r["value"] = res.value;
                    r["witness"] = res.witness;
                } else if (name == "alpha") {
                    const auto res = max_independent_set(graph, g.budget.value_or(kDefaultCliqueBudget));
                    r["value"] = res.value;
                    r["witness"] = res.witness;
                } else {
                    const auto res = chromatic_number(graph, g.budget.value_or(kDefaultChromaticBudget));
                    r["value"] = res.value;
                    r["witness"] = res.colors;
                }
                return Output{dump(report(g, "exact " + name, instance_mode(input), anchor, r)), 0};
            };
        });
    };
    add_exact("omega", "maximum clique", "omega(G): size of the largest clique");
    add_exact("chi", "chromatic number", "chi(G): fewest colours in a proper colouring");
    add_exact("alpha", "independence number", "alpha(G) = omega(complement of G)");

    // ── bounds ───────────────────────────────────────────────────
    auto* bounds = app.add_subcommand("bounds", "evaluate bound formulas");
    bounds->require_subcommand(1);
    bounds->fallthrough();

    int bd_d = 2;
    double bd_r1 = 1.0;
    double bd_r2 = 2.0;
    double bd_delta = 1e-4;
    auto* b_sweep = bounds->add_subcommand("sweep", "nu(2 + r1/r2, d) 7^d with the full bound report");
    b_sweep->add_option("--d", bd_d)->required();
    b_sweep->add_option("--r1", bd_r1)->required();
    b_sweep->add_option("--r2", bd_r2)->required();
    b_sweep->add_option("--delta", bd_delta);
    b_sweep->fallthrough();
    b_sweep->callback([&] {
        action = [&] {
            const auto rep = bound_report(bd_d, bd_r1, bd_r2, bd_delta, g.seed);
            if (g.format == "csv") {
                std::ostringstream os;
                os << "d,r1,r2,T,nu,seven_pow_d,bound\n"
                   << rep.d << ',' << fmt(rep.r1) << ',' << fmt(rep.r2) << ',' << fmt(rep.sweep.T) << ','
                   << rep.sweep.nu << ',' << rep.sweep.seven_pow_d << ',' << rep.sweep.bound << '\n';
                return Output{os.str(), 0};
            }
            json r;
            r["d"] = rep.d;
            r["r1"] = rep.r1;
            r["r2"] = rep.r2;
            r["T"] = rep.sweep.T;
            r["nu"] = rep.sweep.nu;
            r["seven_pow_d"] = rep.sweep.seven_pow_d;
            r["bound"] = rep.sweep.bound;
            r["kl_exponent"] = rep.kl;
            r["cap_fraction_thetas"] = rep.cap_fraction_thetas;
            r["cap_fraction_values"] = rep.cap_fraction_values;
            r["ratio_exponent"] = rep.ratio;
            r["delta"] = bd_delta;
            r["notes"] = rep.notes;
            return Output{dump(report(g, "bounds sweep", "float", "chi <= nu(2 + r1/r2, d) 7^d omega", r)), 0};
        };
    });

    double ratio_x = 1.2;
    double ratio_x_max = 0.0;
    std::size_t ratio_steps = 1;
    auto* b_ratio = bounds->add_subcommand("ratio", "chi/omega ratio exponent for sphere nets");
    b_ratio->add_option("--x", ratio_x);
    b_ratio->add_option("--delta", bd_delta);
    b_ratio->add_option("--x-max", ratio_x_max, "grid end for CSV output (default: --x)");
    b_ratio->add_option("--steps", ratio_steps, "number of grid intervals")->check(CLI::PositiveNumber);
    b_ratio->fallthrough();
    b_ratio->callback([&] {
        action = [&] {
            const double threshold = std::log(1.003);
            if (g.format == "csv") {
                const double hi = ratio_x_max > 0.0 ? ratio_x_max : ratio_x;
                const std::size_t steps = hi > ratio_x ? ratio_steps : 0;
                std::ostringstream os;
                os << "x,delta,ratio_exponent,ln_1_003\n";
                for (std::size_t i = 0; i <= steps; ++i) {
                    const double x = steps == 0 ? ratio_x : ratio_x + (hi - ratio_x) * i / steps;
                    os << fmt(x) << ',' << fmt(bd_delta) << ',' << fmt(ratio_exponent(x, bd_delta)) << ','
                       << fmt(threshold) << '\n';
                }
                return Output{os.str(), 0};
            }
            const double v = ratio_exponent(ratio_x, bd_delta);
            json r;
            r["x"] = ratio_x;
            r["delta"] = bd_delta;
            r["exponent"] = v;
            r["ln_1_003"] = threshold;
            r["exceeds_ln_1_003"] = v > threshold;
            r["units"] = "nats per dimension, asymptotic";
            return Output{dump(report(g, "bounds ratio", "float",
                                      "-ln sin(arcsin(1/x) + delta) - KL(2 arcsin(1/x)) vs ln 1.003", r)),
                          0};
        };
    });

    std::optional<double> kl_phi;
    double kl_lo = 0.01;
    double kl_hi = std::numbers::pi / 2.0;
    std::size_t kl_steps = 100;
    auto* b_kl = bounds->add_subcommand("kl", "spherical-code exponent A ln A - B ln B");
    b_kl->add_option("--phi", kl_phi, "single angle; omit for a grid");
    b_kl->add_option("--lo", kl_lo);
    b_kl->add_option("--hi", kl_hi);
    b_kl->add_option("--steps", kl_steps)->check(CLI::PositiveNumber);
    b_kl->fallthrough();
    b_kl->callback([&] {
        action = [&] {
            std::vector<double> phis;
            if (kl_phi) {
                phis.push_back(*kl_phi);
            } else {
                if (!(kl_hi > kl_lo)) throw DomainError("bounds kl: need hi > lo");
                for (std::size_t i = 0; i <= kl_steps; ++i) phis.push_back(kl_lo + (kl_hi - kl_lo) * i / kl_steps);
            }
            std::vector<double> values;
            for (double p : phis) values.push_back(kl_exponent(p));
            if (g.format == "csv") {
                std::ostringstream os;
                os << "phi,kl_exponent\n";
                for (std::size_t i = 0; i < phis.size(); ++i) os << fmt(phis[i]) << ',' << fmt(values[i]) << '\n';
                return Output{os.str(), 0};
            }
            json r;
            r["phi"] = phis;
            r["kl_exponent"] = values;
            r["units"] = "nats per dimension, asymptotic";
            return Output{dump(report(g, "bounds kl", "float",
                                      "A ln A - B ln B, A = (1+sin phi)/(2 sin phi), B = (1-sin phi)/(2 sin phi)",
                                      r)),
                          0};
        };
    });

    std::optional<double> an_theta;
    double an_lo = 0.01;
    double an_hi = analysis_domain_end();
    double an_step = 1e-4;
    auto* b_an = bounds->add_subcommand("analysis", "sin(theta) exp(KL(2 theta)) and its grid maximum");
    b_an->add_option("--theta", an_theta, "single angle; omit for the grid maximum");
    b_an->add_option("--lo", an_lo);
    b_an->add_option("--hi", an_hi);
    b_an->add_option("--step", an_step);
    b_an->fallthrough();
    b_an->callback([&] {
        action = [&] {
            const std::string anchor = "max of sin(theta) exp(KL(2 theta)) on (0, arcsin(1/1.2)] is < 0.997";
            if (an_theta) {
                const double v = analysis_function(*an_theta);
                if (g.format == "csv") return Output{"theta,value\n" + fmt(*an_theta) + "," + fmt(v) + "\n", 0};
                json r;
                r["theta"] = *an_theta;
                r["value"] = v;
                return Output{dump(report(g, "bounds analysis", "float", anchor, r)), 0};
            }
            if (g.format == "csv") {
                if (!(an_step > 0.0) || !(an_lo > 0.0) || an_hi < an_lo) throw DomainError("bounds analysis: bad grid");
                std::ostringstream os;
                os << "theta,value\n";
                for (std::size_t i = 0;; ++i) {
                    const double t = an_lo + static_cast<double>(i) * an_step;
                    if (t >= an_hi) break;
                    os << fmt(t) << ',' << fmt(analysis_function(t)) << '\n';
                }
                os << fmt(an_hi) << ',' << fmt(analysis_function(an_hi)) << '\n';
                return Output{os.str(), 0};
            }
            const auto m = analysis_grid_max(an_lo, an_hi, an_step);
            json r;
            r["lo"] = an_lo;
            r["hi"] = an_hi;
            r["step"] = an_step;
            r["argmax"] = m.argmax;
            r["max"] = m.value;
            r["samples"] = m.samples;
            r["at_right_endpoint"] = m.at_right_endpoint;
            r["below_0_997"] = m.value < 0.997;
            return Output{dump(report(g, "bounds analysis", "float", anchor, r)), 0};
        };
    });

    auto* b_cv = bounds->add_subcommand("clique-volume", "floor(((r2 + r1/2)/(r1/2))^d)");
    b_cv->add_option("--d", bd_d)->required();
    b_cv->add_option("--r1", bd_r1)->required();
    b_cv->add_option("--r2", bd_r2)->required();
    b_cv->fallthrough();
    b_cv->callback([&] {
        action = [&] {
            const auto v = clique_volume_bound(bd_d, bd_r1, bd_r2);
            if (g.format == "csv") {
                std::ostringstream os;
                os << "d,r1,r2,clique_volume_bound\n"
                   << bd_d << ',' << fmt(bd_r1) << ',' << fmt(bd_r2) << ',' << v << '\n';
                return Output{os.str(), 0};
            }
            json r;
            r["d"] = bd_d;
            r["r1"] = bd_r1;
            r["r2"] = bd_r2;
            r["value"] = v;
            return Output{dump(report(g, "bounds clique-volume", "float", "omega <= ((r2 + r1/2)/(r1/2))^d", r)), 0};
        };
    });

    // ── probe ────────────────────────────────────────────────────
    auto* probe = app.add_subcommand("probe", "numeric feasibility probes");
    probe->require_subcommand(1);
    probe->fallthrough();

    std::string emb_file;
    std::optional<int> emb_d;
    std::optional<double> emb_r1;
    std::optional<double> emb_r2;
    int pr_restarts = 20;
    int pr_iters = 3000;
    auto* p_embed = probe->add_subcommand("embed", "search for an annulus embedding of a graph");
    p_embed->add_option("file", emb_file, "graph or instance JSON")->required();
    p_embed->add_option("--d", emb_d);
    p_embed->add_option("--r1", emb_r1);
    p_embed->add_option("--r2", emb_r2);
    p_embed->add_option("--restarts", pr_restarts)->check(CLI::PositiveNumber);
    p_embed->add_option("--max-iters", pr_iters)->check(CLI::PositiveNumber);
    p_embed->fallthrough();
    p_embed->callback([&] {
        action = [&] {
            require_json(g, "probe embed");
            const json input = io::read_json_file(emb_file);
            EmbedProblem p;
            p.graph = io::load_graph(input, g.build());
            const bool is_instance = input.contains("points");
            auto pick = [&](const auto& flag, const char* key, const char* name) {
                if (flag) return static_cast<double>(*flag);
                if (is_instance) return input.at(key).template get<double>();
                throw UsageError(std::string("probe embed: --") + name + " is required for a graph file");
            };
            p.d = static_cast<int>(pick(emb_d, "dim", "d"));
            p.r1 = pick(emb_r1, "r1", "r1");
            p.r2 = pick(emb_r2, "r2", "r2");
            p.restarts = pr_restarts;
            p.max_iters = pr_iters;
            p.seed = g.seed;
            if (g.budget) p.budget = *g.budget;
            const auto res = embed_search(p);
            json r = io::to_json(res);
            r["d"] = p.d;
            r["r1"] = p.r1;
            r["r2"] = p.r2;
            r["witness"] = res.is_witness();
            if (res.is_witness()) {
                const auto inst = AnnulusInstance::from_points(p.d, p.r1, p.r2, res.coords);
                r["roundtrip"] = build_graph(inst, g.build()) == p.graph;
            }
            r["interpretation"] = res.is_witness() ? "witness" : "evidence only: no embedding found";
            return Output{dump(report(g, "probe embed", "float", "annulus embedding penalty residual", r)), 0};
        };
    });

    std::string fb_kind = "bipartite-sphericity";
    int fb_d = 1;
    std::size_t fb_count = 0;
    double fb_gamma = 0.99;
    double fb_cross = 1.0;
    ProbeOptions fb_opts;
    auto* p_forb = probe->add_subcommand("forbidden", "penalty residual of a forbidden configuration");
    p_forb->add_option("--kind", fb_kind)->check(CLI::IsMember({"three-points", "bipartite-sphericity"}));
    p_forb->add_option("--d", fb_d);
    p_forb->add_option("--count", fb_count, "points for three-points (0: default)");
    p_forb->add_option("--gamma", fb_gamma);
    p_forb->add_option("--cross-limit", fb_cross, "cross-part distance limit for bipartite-sphericity");
    p_forb->add_option("--margin", fb_opts.margin);
    p_forb->add_option("--restarts", fb_opts.restarts)->check(CLI::PositiveNumber);
    p_forb->add_option("--max-iters", fb_opts.max_iters)->check(CLI::PositiveNumber);
    p_forb->add_option("--separation-weight", fb_opts.separation_weight);
    p_forb->fallthrough();
    p_forb->callback([&] {
        action = [&] {
            require_json(g, "probe forbidden");
            fb_opts.seed = g.seed;
            ForbiddenConfig cfg;
            std::string anchor;
            if (fb_kind == "three-points") {
                cfg = ThreePoints{fb_d, fb_count, fb_gamma};
                anchor = "no N_gamma (d >= 3) or 3 (d = 2) points in B(a,1) n B(b,1) pairwise > 1 apart";
            } else {
                cfg = BipartiteSphericity{fb_d, fb_cross};
                anchor = "no 2d+2 points in two parts, far within parts, within 1 across";
            }
            const auto res = forbidden_config_residual(cfg, fb_opts);
            json r = io::to_json(res);
            r["kind"] = fb_kind;
            r["d"] = fb_d;
            r["margin"] = fb_opts.margin;
            r["restarts"] = fb_opts.restarts;
            r["min_restart_residual"] = *std::min_element(res.restart_stats.begin(), res.restart_stats.end());
            r["feasible"] = res.is_witness();
            r["interpretation"] = res.is_witness() ? "configuration realised" : "numerically infeasible at this margin";
            return Output{dump(report(g, "probe forbidden", "float", anchor, r)), 0};
        };
    });

    // ── verify ───────────────────────────────────────────────────
    std::string only;
    auto* verify = app.add_subcommand("verify", "run the property battery");
    verify->add_option("--only", only, "module filter")->check(CLI::IsMember(verify_modules()));
    verify->fallthrough();
    verify->callback([&] {
        action = [&] {
            require_json(g, "verify");
            VerifyConfig cfg;
            cfg.seed = g.seed;
            cfg.tolerance = g.tolerance;
            cfg.only = only;
            const auto summary = verify_suite(cfg);
            json checks = json::array();
            for (const auto& c : summary.checks) {
                checks.push_back({{"module", c.module},
                                  {"name", c.name},
                                  {"anchor", c.anchor},
                                  {"passed", c.passed},
                                  {"detail", c.detail}});
                err << (c.passed ? "PASS " : "FAIL ") << c.module << '/' << c.name << ": " << c.detail << '\n';
            }
            json r;
            r["checks"] = checks;
            r["only"] = only.empty() ? "all" : only;
            r["failures"] = summary.failures();
            r["passed"] = summary.all_passed();
            return Output{dump(report(g, "verify", "float", "property battery", r)), summary.all_passed() ? 0 : 2};
        };
    });

    std::vector<std::string> owned(args);
    if (owned.empty()) owned.emplace_back("annulus");
    std::vector<char*> argv;
    for (auto& a : owned) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        g.budget = budget_from_env();
        if (budget_flag != 0) g.budget = budget_flag;
        if (!action) throw UsageError("no command given");
        Output o = action();
        if (g.output.empty()) {
            out << o.text;
        } else {
            io::write_text_file(g.output, o.text);
        }
        return o.code;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return 2;
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << '\n';
        return 2;
    } catch (const BoundaryAmbiguity& e) {
        err << "boundary ambiguity: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace annulus::cli
