#include "annulus/verify.hpp"

#include "annulus/bounds.hpp"
#include "annulus/embedding.hpp"
#include "annulus/error.hpp"
#include "annulus/generators.hpp"
#include "annulus/geometry.hpp"
#include "annulus/solvers.hpp"
#include "annulus/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace annulus {

namespace {

constexpr double kPi = std::numbers::pi;

// ── exhaustive references for small graphs ──────────────────────

std::size_t enum_clique(const Graph& g) {
    const std::size_t n = g.size();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u) {
            if (!(mask >> u & 1u)) continue;
            for (std::size_t v = u + 1; v < n && ok; ++v) {
                if ((mask >> v & 1u) && !g.adjacent(u, v)) ok = false;
            }
        }
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
    }
    return best;
}

std::size_t enum_chromatic(const Graph& g) {
    const std::size_t n = g.size();
    const std::uint32_t full = (1u << n) - 1;
    std::vector<bool> independent(full + 1, true);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        for (auto [u, v] : g.edges()) {
            if ((mask >> u & 1u) && (mask >> v & 1u)) {
                independent[mask] = false;
                break;
            }
        }
    }
    std::vector<std::size_t> parts(full + 1, n + 1);
    parts[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
            if ((sub & low) && independent[sub]) parts[mask] = std::min(parts[mask], parts[mask ^ sub] + 1);
        }
    }
    return parts[full];
}

Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

// Random instance with n in [lo, hi], unit r2, r1 drawn in [0, 1], and a box
// sized so the graph is neither empty nor complete.
AnnulusInstance random_instance(int d, std::size_t lo, std::size_t hi, bool unit_disc, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> size(lo, hi);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const std::size_t n = size(rng);
    const double r1 = unit_disc ? 0.0 : unif(rng);
    const double side = 1.0 + 2.5 * std::pow(static_cast<double>(n) / 20.0, 1.0 / d);
    return gen_uniform_box(d, n, side, r1, 1.0, rng());
}

class Battery {
public:
    Battery(const VerifyConfig& cfg, VerifySummary& out) : cfg_(cfg), out_(out) {}

    bool wants(const std::string& module) const { return cfg_.only.empty() || cfg_.only == module; }

    void check(const std::string& module, const std::string& name, const std::string& anchor,
               const std::function<std::string()>& body) {
        if (!wants(module)) return;
        CheckResult r{module, name, anchor, false, ""};
        try {
            r.detail = body();
            r.passed = r.detail.empty();
            if (r.passed) r.detail = "ok";
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        out_.checks.push_back(std::move(r));
    }

    BuildOptions build() const { return {cfg_.tolerance, false}; }
    std::mt19937_64 rng(std::uint64_t stream) const { return make_rng(cfg_.seed, stream); }

private:
    const VerifyConfig& cfg_;
    VerifySummary& out_;
};

std::string fail_count(std::size_t bad, std::size_t total, const std::string& what) {
    if (bad == 0) return "";
    std::ostringstream os;
    os << bad << " of " << total << " " << what;
    return os.str();
}

void geometry_checks(Battery& b) {
    b.check("geometry", "cap-fraction-monotone", "cap fraction is 1 at pi and increasing in theta", [] {
        // strictness is only demanded where the double value has not saturated at 0 or 1
        for (int d : {2, 3, 5, 50, 1000}) {
            if (std::abs(cap_fraction(d, kPi) - 1.0) > 1e-12) return "cap_fraction(d, pi) != 1";
            double prev = 0.0;
            for (int i = 1; i <= 200; ++i) {
                const double f = cap_fraction(d, kPi * i / 200.0);
                if (f < prev || (f == prev && f > 0.0 && f < 1.0)) return "not increasing";
                prev = f;
            }
        }
        return "";
    });
    b.check("geometry", "cap-fraction-closed-form", "cap fraction (d=3) equals (1-cos theta)/2", [&] {
        auto rng = b.rng(11);
        std::uniform_real_distribution<double> unif(1e-3, kPi);
        std::size_t bad = 0;
        for (int i = 0; i < 100; ++i) {
            const double t = unif(rng);
            if (std::abs(cap_fraction(3, t) - (1.0 - std::cos(t)) / 2.0) > 1e-10) ++bad;
        }
        return fail_count(bad, 100, "angles disagree beyond 1e-10");
    });
    b.check("geometry", "packing-volume-bound", "greedy packing count <= ((R+r)/r)^d", [&] {
        std::size_t bad = 0;
        std::size_t total = 0;
        for (int d = 1; d <= 3; ++d) {
            for (double R : {1.0, 2.0, 3.5}) {
                const auto w = greedy_ball_packing(R, 1.0, d, 7, {4, 1500});
                ++total;
                if (!w.valid() || static_cast<double>(w.count()) > std::pow(R + 1.0, d)) ++bad;
            }
        }
        return fail_count(bad, total, "packings invalid or above the volume bound");
    });
    b.check("geometry", "covering-probe", "covering witness survives 1e5 random probes", [&] {
        for (auto [T, d] : {std::pair{2.0, 2}, std::pair{3.0, 3}, std::pair{2.5, 1}}) {
            CoveringOptions opts;
            opts.seed = b.rng(12)();
            covering_number_witness(T, d, 0.5, opts);
        }
        return "";
    });
    b.check("geometry", "n-gamma-witness", "points in B(0,gamma) pairwise more than 1 apart", [] {
        for (int d = 2; d <= 8; ++d) {
            const auto pts = n_gamma_witness(d, 0.99);
            const std::size_t want = d == 2 ? 5u : static_cast<std::size_t>(2 * d + 2);
            if (pts.size() != want) return "wrong witness size";
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (norm(pts[i]) > 0.99 + 1e-12) return "point outside B(0, gamma)";
                for (std::size_t j = i + 1; j < pts.size(); ++j) {
                    if (!(dist(pts[i], pts[j]) > 1.0)) return "pair not more than 1 apart";
                }
            }
        }
        return "";
    });
}

void graph_checks(Battery& b) {
    b.check("graph", "rigid-motion-invariance", "adjacency invariant under isometries", [&] {
        auto rng = b.rng(21);
        std::size_t bad = 0;
        for (int trial = 0; trial < 30; ++trial) {
            const int d = 1 + trial % 3;
            const auto inst = random_instance(d, 5, 40, false, rng);
            if (count_boundary_pairs(inst, 1e-6) != 0) continue;
            // random rotation (Gram-Schmidt on gaussian vectors) and shift
            std::vector<Point> basis;
            while (basis.size() < static_cast<std::size_t>(d)) {
                Point v = random_unit_vector(d, rng);
                for (const auto& e : basis) {
                    double c = 0.0;
                    for (int k = 0; k < d; ++k) c += v[k] * e[k];
                    for (int k = 0; k < d; ++k) v[k] -= c * e[k];
                }
                const double nv = norm(v);
                if (nv < 1e-6) continue;
                for (double& x : v) x /= nv;
                basis.push_back(v);
            }
            const Point shift = random_in_ball(d, 10.0, rng);
            auto moved = inst;
            for (auto& p : moved.points) {
                Point q(static_cast<std::size_t>(d), 0.0);
                for (int i = 0; i < d; ++i) {
                    for (int k = 0; k < d; ++k) q[i] += basis[i][k] * p[k];
                    q[i] += shift[i];
                }
                p = q;
            }
            if (!(build_graph(inst, b.build()) == build_graph(moved, b.build()))) ++bad;
        }
        return fail_count(bad, 30, "instances changed under a rigid motion");
    });
    b.check("graph", "clique-volume-bound", "omega <= (2 r2/r1 + 1)^d", [&] {
        auto rng = b.rng(22);
        std::size_t bad = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const int d = 1 + trial % 3;
            const auto inst = random_instance(d, 5, 60, false, rng);
            if (inst.r1 <= 0.05) continue;
            const auto omega = max_clique(build_graph(inst, b.build())).value;
            if (omega > clique_volume_bound(d, inst.r1, inst.r2)) ++bad;
        }
        return fail_count(bad, 60, "instances exceed the volume bound");
    });
    b.check("graph", "chi-lower-bounds", "chi >= omega and chi >= n/alpha", [&] {
        auto rng = b.rng(23);
        std::size_t bad = 0;
        for (int trial = 0; trial < 40; ++trial) {
            const auto inst = random_instance(1 + trial % 3, 4, 16, trial % 2 == 0, rng);
            const Graph g = build_graph(inst, b.build());
            const auto chi = chromatic_number(g);
            const auto omega = max_clique(g).value;
            const auto alpha = max_independent_set(g).value;
            if (chi.value < omega || chi.value * alpha < g.size() || !is_proper(g, chi.colors)) ++bad;
        }
        return fail_count(bad, 40, "instances violate chi >= omega or chi >= n/alpha");
    });
    b.check("graph", "solver-enumeration-agreement", "exact omega, chi, alpha match enumeration (n <= 9)", [&] {
        auto rng = b.rng(24);
        std::uniform_int_distribution<std::size_t> size(1, 9);
        std::uniform_real_distribution<double> density(0.1, 0.9);
        std::size_t bad = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const Graph g = random_graph(size(rng), density(rng), rng);
            if (max_clique(g).value != enum_clique(g) || chromatic_number(g).value != enum_chromatic(g) ||
                max_independent_set(g).value != enum_clique(g.complement())) {
                ++bad;
            }
        }
        return fail_count(bad, 100, "graphs disagree with enumeration");
    });
}

void sweep_checks(Battery& b) {
    b.check("sweep", "proper-and-tokens", "sweep colouring proper with valid tokens", [&] {
        auto rng = b.rng(31);
        std::size_t bad = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto inst = random_instance(1 + trial % 3, 1, 60, trial % 4 == 0, rng);
            const auto col = sweep_color(inst, b.build());
            if (!verify_token_invariants(inst, col, b.build()).ok) ++bad;
        }
        return fail_count(bad, 100, "colourings break an invariant");
    });
    b.check("sweep", "bound-chain", "max colour k <= nu(2 + r1/r2, d) 7^d omega", [&] {
        auto rng = b.rng(32);
        std::size_t bad = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const int d = 1 + trial % 3;
            const auto inst = random_instance(d, 2, 60, false, rng);
            const Graph g = build_graph(inst, b.build());
            const auto k = static_cast<std::uint64_t>(sweep_color(inst, g).max_color());
            const auto bound = sweep_chi_bound(d, inst.r1, inst.r2).bound;
            if (k > bound * max_clique(g).value) ++bad;
        }
        return fail_count(bad, 60, "instances exceed the chain bound");
    });
    b.check("sweep", "colours-in-ball", "at most 7^d colours within r1 of any vertex", [&] {
        auto rng = b.rng(33);
        std::size_t bad = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const int d = 1 + trial % 3;
            const auto inst = random_instance(d, 2, 60, false, rng);
            const auto col = sweep_color(inst, b.build());
            for (std::size_t v = 0; v < inst.size(); ++v) {
                if (colors_in_ball(inst, col, v, inst.r1) > seven_pow(d)) {
                    ++bad;
                    break;
                }
            }
        }
        return fail_count(bad, 60, "instances exceed 7^d colours in a ball");
    });
    b.check("sweep", "unit-disc-3omega", "unit disc sweep uses <= 3 omega - 2 colours", [&] {
        auto rng = b.rng(34);
        std::size_t bad = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const auto inst = random_instance(2, 1, 60, true, rng);
            const Graph g = build_graph(inst, b.build());
            const auto col = sweep_color(inst, g);
            const auto omega = static_cast<int>(max_clique(g).value);
            if (!is_proper(g, col.colors) || col.max_color() > 3 * omega - 2) ++bad;
        }
        return fail_count(bad, 60, "instances exceed 3 omega - 2");
    });
}

void generator_checks(Battery& b) {
    b.check("generators", "cycle1d-ratio", "1D odd cycles: omega = 2, chi = 3", [&] {
        std::size_t bad = 0;
        std::vector<double> xs;
        for (int i = 1; i <= 19; ++i) xs.push_back(1.0 + 0.05 * i);
        xs.push_back(2.0);
        xs.push_back(3.0);
        for (double x : xs) {
            const Graph g = build_graph(gen_cycle_1d(x), b.build());
            if (max_clique(g).value != 2 || chromatic_number(g).value != 3) ++bad;
        }
        return fail_count(bad, xs.size(), "x values without omega = 2, chi = 3");
    });
    b.check("generators", "lattice-exact", "lattice instances have no boundary-ambiguous pairs", [&] {
        LatticeSpec spec;
        spec.d = 2;
        spec.x = 2.0;
        spec.eps = Rational(1);
        spec.n = 1.0;
        if (!(build_graph(gen_lattice(spec), b.build()) == Graph::complete(5))) return "d=2, eps=1, n=1 is not K5";
        spec.eps = parse_rational("3/10");
        spec.n = 1.5;
        spec.x = 1.5;
        if (count_boundary_pairs(gen_lattice(spec), 1e-9) != 0) return "exact lattice reports ambiguous pairs";
        return "";
    });
    b.check("generators", "sphere-net-covering", "greedy net covers the sphere within eps", [&] {
        SphereNetSpec spec;
        spec.d = 3;
        spec.method = GreedyNet{kPi / 8.0};
        spec.seed = b.rng(41)();
        const auto inst = gen_sphere_net(spec);
        for (const auto& p : inst.points) {
            if (std::abs(norm(p) - 1.0) > 1e-12) return "net point off the sphere";
        }
        return "";
    });
}

void bounds_checks(Battery& b) {
    b.check("bounds", "analysis-max", "analysis function <= 0.997, maximum at arcsin(1/1.2)", [] {
        const auto m = analysis_grid_max(0.01, analysis_domain_end(), 1e-4);
        if (!m.at_right_endpoint) return "maximum not at the right endpoint";
        if (!(m.value < 0.997)) return "maximum not below 0.997";
        return "";
    });
    b.check("bounds", "kl-decreasing", "kl exponent strictly decreasing on (0, pi/2]", [] {
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= 1000; ++i) {
            const double v = kl_exponent(kPi / 2.0 * i / 1000.0);
            if (!(v < prev) || v < 0.0) return "not decreasing or negative";
            prev = v;
        }
        return kl_exponent(kPi / 2.0) == 0.0 ? "" : "nonzero at pi/2";
    });
    b.check("bounds", "ratio-exponent", "ratio exponent at x = 1.2 exceeds ln(1.003)", [] {
        for (int i = 1; i <= 100; ++i) {
            if (!(ratio_exponent(1.2, 1e-6 * i) > std::log(1.003))) return "ratio exponent below ln(1.003)";
        }
        return "";
    });
    b.check("bounds", "generated-clique-bound", "omega of generated instances <= volume bound", [&] {
        for (int d = 2; d <= 5; ++d) {
            const auto inst = gen_easy_lemma_instance(d);
            if (max_clique(build_graph(inst, b.build())).value > clique_volume_bound(d, inst.r1, inst.r2)) {
                return "easy-lemma instance exceeds the bound";
            }
        }
        for (double x : {1.1, 1.5, 2.0, 3.0}) {
            if (max_clique(build_graph(gen_cycle_1d(x), b.build())).value > clique_volume_bound(1, 1.0, x)) {
                return "cycle instance exceeds the bound";
            }
        }
        return "";
    });
}

void probe_checks(Battery& b) {
    b.check("probe", "bipartite-floor", "d=1 bipartite configuration residual >= 0.09", [&] {
        ProbeOptions opts;
        opts.restarts = 20;
        opts.seed = b.rng(51)();
        const auto res = forbidden_config_residual(BipartiteSphericity{1, 1.0}, opts);
        const auto low = *std::min_element(res.restart_stats.begin(), res.restart_stats.end());
        return low >= 0.09 ? "" : "a restart went below the analytic floor";
    });
    b.check("probe", "relaxed-control", "relaxed bipartite configuration is feasible", [&] {
        ProbeOptions opts;
        opts.restarts = 10;
        opts.seed = b.rng(52)();
        return forbidden_config_residual(BipartiteSphericity{1, 2.0}, opts).residual < kFeasibilityTolerance
                   ? ""
                   : "control problem not solved";
    });
    b.check("probe", "gradient-finite-difference", "hinge gradients match central differences", [&] {
        auto rng = b.rng(53);
        const auto model = forbidden_config_model(ThreePoints{2, 3, 0.99}, 0.1, 1e3);
        std::uniform_real_distribution<double> unif(-1.5, 1.5);
        std::size_t bad = 0;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> x(model.variables());
            for (double& v : x) v = unif(rng);
            for (std::size_t t = 0; t < model.constraints().size(); ++t) {
                std::vector<double> grad(x.size(), 0.0);
                model.add_term_gradient(t, x, grad);
                for (std::size_t i = 0; i < x.size(); ++i) {
                    const double h = 1e-6;
                    auto xp = x;
                    auto xm = x;
                    xp[i] += h;
                    xm[i] -= h;
                    const double fp = model.term_value(t, xp);
                    const double fm = model.term_value(t, xm);
                    // skip coordinates where the stencil straddles a kink
                    if ((fp == 0.0) != (fm == 0.0)) continue;
                    const double fd = (fp - fm) / (2.0 * h);
                    if (std::abs(fd - grad[i]) > 1e-6 * std::max(1.0, std::abs(grad[i]))) ++bad;
                }
            }
        }
        return fail_count(bad, 1, "gradient entries disagree");
    });
    b.check("probe", "cycle-embedding-roundtrip", "C5 embeds in 1D with radii (1,2)", [&] {
        EmbedProblem p;
        p.graph = Graph::cycle(5);
        p.d = 1;
        p.r1 = 1.0;
        p.r2 = 2.0;
        p.seed = b.rng(54)();
        const auto res = embed_search(p);
        if (!res.is_witness()) return "no witness found";
        const auto inst = AnnulusInstance::from_points(1, 1.0, 2.0, res.coords);
        return build_graph(inst, b.build()) == p.graph ? "" : "witness does not round-trip";
    });
}

} // namespace

bool VerifySummary::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t VerifySummary::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

std::vector<std::string> verify_modules() { return {"geometry", "graph", "sweep", "generators", "bounds", "probe"}; }

VerifySummary verify_suite(const VerifyConfig& config) {
    if (!config.only.empty()) {
        const auto mods = verify_modules();
        if (std::find(mods.begin(), mods.end(), config.only) == mods.end()) {
            throw DomainError("verify: unknown module '" + config.only + "'");
        }
    }
    VerifySummary out;
    Battery b(config, out);
    geometry_checks(b);
    graph_checks(b);
    sweep_checks(b);
    generator_checks(b);
    bounds_checks(b);
    probe_checks(b);
    return out;
}

} // namespace annulus
