// Acceptance criteria, one PASS/FAIL line each. Every tolerance, sample size,
// seed and time limit used below is fixed here.

#include "annulus/bounds.hpp"
#include "annulus/embedding.hpp"
#include "annulus/generators.hpp"
#include "annulus/geometry.hpp"
#include "annulus/solvers.hpp"
#include "annulus/sweep.hpp"

#include "support/oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

using namespace annulus;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20240611;

// frozen 40-digit values from tests/oracles/compute_frozen_values.py
constexpr double kRatio12 = 0.00393419005839549258055;
constexpr double kLn1003 = 0.00299550897979847881161;
constexpr double kCrossDistance3 = 1.11364267159623512695;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && limit_s > 0.0 && secs > limit_s) {
        o.pass = false;
        o.detail += " (over the time limit)";
    }
    if (!o.pass) ++failures;
    char limit[32] = "no limit";
    if (limit_s > 0.0) std::snprintf(limit, sizeof limit, "%gs", limit_s);
    std::printf("AC%-2d %s  %-34s %7.3fs / %-8s  %s\n", id, o.pass ? "PASS" : "FAIL", name.c_str(), secs, limit,
                o.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

// Random instance for criteria 2-4: n uniform in [1, 60], points in a box sized
// to keep the graph sparse enough to be interesting.
AnnulusInstance instance(std::mt19937_64& rng, int d, bool unit_disc) {
    std::uniform_int_distribution<std::size_t> size(1, 60);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const std::size_t n = size(rng);
    const double r1 = unit_disc ? 0.0 : unif(rng);
    const double side = 1.0 + 2.5 * std::pow(static_cast<double>(n) / 20.0, 1.0 / d);
    return gen_uniform_box(d, n, side, r1, 1.0, rng());
}

bool triangle_free(const Graph& g) {
    const auto s = oracle::from_edges(g.size(), g.edges());
    for (std::size_t u = 0; u < s.n; ++u) {
        for (std::size_t v = u + 1; v < s.n; ++v) {
            if (s.has(u, v) && (s.adj[u] & s.adj[v])) return false;
        }
    }
    return true;
}

double fd_gradient_error(const PenaltyModel& model, std::uint64_t seed, double spread) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-spread, spread);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
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
                if ((fp == 0.0) != (fm == 0.0)) continue;  // stencil straddles the hinge
                const double fd = (fp - fm) / (2 * h);
                worst = std::max(worst, std::abs(fd - grad[i]) / std::max(1.0, std::abs(grad[i])));
            }
        }
    }
    return worst;
}

} // namespace

int main() {
    std::printf("acceptance suite, seed %llu\n", static_cast<unsigned long long>(kSeed));

    criterion(1, "1D cycles: omega 2, chi 3", 5.0, [] {
        std::vector<double> xs;
        for (int i = 1; i <= 19; ++i) xs.push_back(1.0 + 0.05 * i);
        xs.push_back(2.0);
        xs.push_back(3.0);
        int bad = 0;
        for (double x : xs) {
            const Graph g = build_graph(gen_cycle_1d(x));
            if (max_clique(g).value != 2 || chromatic_number(g).value != 3) ++bad;
            if (x < 2.0 && !triangle_free(g)) ++bad;
        }
        return Outcome{bad == 0, std::to_string(xs.size()) + " values of x, " + std::to_string(bad) + " mismatches"};
    });

    criterion(2, "unit disc sweep <= 3 omega - 2", 60.0, [] {
        auto rng = make_rng(kSeed, 2);
        int bad = 0;
        for (int i = 0; i < 200; ++i) {
            const auto inst = instance(rng, 2, true);
            const Graph g = build_graph(inst);
            const auto col = sweep_color(inst, g);
            const auto omega = static_cast<int>(max_clique(g).value);
            if (!is_proper(g, col.colors) || col.max_color() > 3 * omega - 2) ++bad;
        }
        return Outcome{bad == 0, "200 instances, " + std::to_string(bad) + " violations"};
    });

    // criteria 3 and 4 share one instance set
    std::vector<AnnulusInstance> chain;
    {
        auto rng = make_rng(kSeed, 3);
        for (int d = 1; d <= 3; ++d) {
            for (int i = 0; i < 100; ++i) chain.push_back(instance(rng, d, false));
        }
    }

    criterion(3, "bound chain k <= nu 7^d omega", 0.0, [&] {
        int bad = 0;
        for (const auto& inst : chain) {
            const Graph g = build_graph(inst);
            const auto k = static_cast<std::uint64_t>(sweep_color(inst, g).max_color());
            if (k > sweep_chi_bound(inst.dim, inst.r1, inst.r2, kSeed).bound * max_clique(g).value) ++bad;
        }
        return Outcome{bad == 0, "300 instances (d = 1, 2, 3), " + std::to_string(bad) + " violations"};
    });

    criterion(4, "colours in B(v, r1) <= 7^d", 0.0, [&] {
        int bad = 0;
        for (const auto& inst : chain) {
            const auto col = sweep_color(inst);
            for (std::size_t v = 0; v < inst.size(); ++v) {
                if (colors_in_ball(inst, col, v, inst.r1) > seven_pow(inst.dim)) ++bad;
            }
        }
        return Outcome{bad == 0, "every vertex of 300 instances, " + std::to_string(bad) + " violations"};
    });

    criterion(5, "analysis grid maximum", 1.0, [] {
        const auto m = analysis_grid_max(0.01, analysis_domain_end(), 1e-4);
        const bool ok = m.at_right_endpoint && m.value > 0.996 && m.value < 0.997;
        return Outcome{ok, fmt("max %.12f at theta %.12f", m.value, m.argmax) +
                               (m.at_right_endpoint ? " (right endpoint)" : " (interior)")};
    });

    criterion(6, "ratio exponent vs ln 1.003", 1.0, [] {
        const double v = ratio_exponent(1.2, 1e-4);
        const bool accurate = std::abs(v - kRatio12) < 1e-6;
        const bool exceeds = v - kLn1003 > 1e-6;
        return Outcome{accurate && exceeds, fmt("exponent %.9f, ln 1.003 = %.9f", v, kLn1003)};
    });

    criterion(7, "N_gamma witnesses d = 2..8", 1.0, [] {
        int bad = 0;
        double min3 = 0.0;
        for (int d = 2; d <= 8; ++d) {
            const auto pts = n_gamma_witness(d, 0.99);
            const std::size_t want = d == 2 ? 5 : static_cast<std::size_t>(2 * d + 2);
            if (pts.size() != want) ++bad;
            double mn = 1e300;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (norm(pts[i]) > 0.99 + 1e-12) ++bad;  // cos/sin rounding on the pentagon
                for (std::size_t j = i + 1; j < pts.size(); ++j) mn = std::min(mn, dist(pts[i], pts[j]));
            }
            if (!(mn > 1.0)) ++bad;
            if (d == 3) min3 = mn;
        }
        const double expect = std::min(1.2, std::sqrt(2 * (0.99 * 0.99 - 0.36)));
        const bool d3 = std::abs(min3 - expect) < 1e-9 && std::abs(expect - kCrossDistance3) < 1e-12;
        return Outcome{bad == 0 && d3, fmt("d=3 min distance %.12f (expected %.12f)", min3, expect)};
    });

    criterion(8, "cap fraction formula", 30.0, [] {
        std::mt19937_64 rng(kSeed);
        std::uniform_real_distribution<double> unif(1e-6, kPi);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double t = unif(rng);
            worst = std::max(worst, std::abs(cap_fraction(3, t) - (1 - std::cos(t)) / 2));
            worst = std::max(worst, std::abs(cap_fraction(2, t) - t / kPi));
        }
        // Monte Carlo: 10^6 uniform sphere points per dimension, fraction within
        // angle theta of e_0, compared at 3 standard errors
        constexpr int kSamples = 1000000;
        double worst_z = 0.0;
        for (int d : {3, 5, 10}) {
            auto mc = make_rng(kSeed, static_cast<std::uint64_t>(100 + d));
            const std::vector<double> thetas{0.5, 1.0, kPi / 2, 2.0};
            std::vector<std::size_t> hits(thetas.size(), 0);
            for (int s = 0; s < kSamples; ++s) {
                const Point p = random_unit_vector(d, mc);
                const double angle = std::acos(std::clamp(p[0], -1.0, 1.0));
                for (std::size_t k = 0; k < thetas.size(); ++k) hits[k] += angle <= thetas[k];
            }
            for (std::size_t k = 0; k < thetas.size(); ++k) {
                const double f = cap_fraction(d, thetas[k]);
                const double se = std::sqrt(f * (1 - f) / kSamples);
                const double z = std::abs(static_cast<double>(hits[k]) / kSamples - f) / se;
                worst_z = std::max(worst_z, z);
            }
        }
        return Outcome{worst <= 1e-10 && worst_z <= 3.0,
                       fmt("closed-form error %.2e, worst Monte Carlo z %.2f", worst, worst_z)};
    });

    criterion(9, "exact solvers vs enumeration", 60.0, [] {
        std::mt19937_64 rng(kSeed);
        std::uniform_real_distribution<double> density(0.0, 1.0);
        int bad = 0;
        for (int i = 0; i < 500; ++i) {
            const auto s = oracle::random_graph(9, density(rng), rng);
            const Graph g(9, s.edges());
            if (max_clique(g).value != oracle::omega(s)) ++bad;
            if (chromatic_number(g).value != oracle::chi(s)) ++bad;
            if (max_independent_set(g).value != oracle::alpha(s)) ++bad;
        }
        return Outcome{bad == 0, "500 graphs on 9 vertices, " + std::to_string(bad) + " mismatches"};
    });

    criterion(10, "forbidden configuration probes", 60.0, [] {
        ProbeOptions opts;
        opts.restarts = 100;
        opts.margin = 0.1;
        opts.seed = kSeed;
        const auto hard = forbidden_config_residual(BipartiteSphericity{1, 1.0}, opts);
        const double floor = *std::min_element(hard.restart_stats.begin(), hard.restart_stats.end());
        const auto relaxed = forbidden_config_residual(BipartiteSphericity{1, 2.0}, opts);
        double grad = 0.0;
        grad = std::max(grad, fd_gradient_error(forbidden_config_model(BipartiteSphericity{1, 1.0}, 0.1, 1e3), 1, 1.5));
        grad = std::max(grad, fd_gradient_error(forbidden_config_model(ThreePoints{3, 0, 0.99}, 0.1, 1e3), 2, 1.5));
        grad = std::max(grad, fd_gradient_error(embedding_model(Graph::cycle(7), 2, 1.0, 1.6), 3, 2.0));
        const bool ok = hard.restart_stats.size() == 100 && floor >= 0.09 && relaxed.residual < 1e-6 && grad <= 1e-6;
        std::ostringstream os;
        os << "min restart residual " << floor << ", relaxed " << relaxed.residual << ", gradient rel. error "
           << grad;
        return Outcome{ok, os.str()};
    });

    std::printf("AC11 SKIP  %-34s  large-d exponential separations, the full non-inclusion proof and packing "
                "density limits are asymptotic; criteria 1-10 stand in for them\n",
                "asymptotic statements");

    std::printf("%s: %d failing criteria\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
