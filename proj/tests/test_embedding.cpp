#include "doctest.h"

#include "annulus/embedding.hpp"
#include "annulus/error.hpp"
#include "annulus/generators.hpp"

#include <algorithm>
#include <cmath>

using namespace annulus;

namespace {

using Kind = PairConstraint::Kind;

// Largest relative gap between an analytic gradient entry and its central
// difference, skipping coordinates whose stencil crosses a hinge kink.
double worst_gradient_error(const PenaltyModel& model, std::uint64_t seed, double spread) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-spread, spread);
    double worst = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
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
                if ((fp == 0.0) != (fm == 0.0)) continue;
                const double fd = (fp - fm) / (2 * h);
                worst = std::max(worst, std::abs(fd - grad[i]) / std::max(1.0, std::abs(grad[i])));
            }
        }
    }
    return worst;
}

} // namespace

TEST_SUITE("embedding_probe") {

TEST_CASE("penalty terms and violations") {
    // two points in 1D at distance 0.5
    const PenaltyModel m(2, 1,
                         {{Kind::AtLeast, 0, 1, 1.0, 0.0, 2.0, 0.0},
                          {Kind::AtMost, 0, 1, 0.0, 0.4, 1.0, 0.0},
                          {Kind::Outside, 0, 1, 0.3, 0.8, 1.0, 0.0}});
    const std::vector<double> x{0.0, 0.5};
    CHECK(m.term_value(0, x) == doctest::Approx(2.0 * 0.25));
    CHECK(m.term_value(1, x) == doctest::Approx(0.01));
    CHECK(m.term_value(2, x) == doctest::Approx(0.04));
    CHECK(m.violation(0, x) == doctest::Approx(0.5));
    CHECK(m.violation(1, x) == doctest::Approx(0.1));
    CHECK(m.violation(2, x) == doctest::Approx(0.2));
    CHECK(m.residual(x) == doctest::Approx(0.5));
    CHECK(m.value(x) == doctest::Approx(0.55));
    CHECK_THROWS_AS(PenaltyModel(2, 1, {{Kind::AtLeast, 0, 0, 1.0, 0.0, 1.0, 0.0}}), DomainError);
}

TEST_CASE("outside with zero lower radius pushes past the upper radius") {
    const PenaltyModel m(2, 2, {{Kind::Outside, 0, 1, 0.0, 1.0, 1.0, 0.0}});
    CHECK(m.violation(0, {0, 0, 0.25, 0}) == doctest::Approx(0.75));
    CHECK(m.violation(0, {0, 0, 1.5, 0}) == 0.0);
}

TEST_CASE("slack tightens the penalty but not the residual") {
    const PenaltyModel m(2, 1, {{Kind::AtMost, 0, 1, 0.0, 1.0, 1.0, 0.1}});
    const std::vector<double> x{0.0, 0.95};
    CHECK(m.term_value(0, x) == doctest::Approx(0.0025));
    CHECK(m.residual(x) == 0.0);
}

TEST_CASE("gradients match central differences") {
    CHECK(worst_gradient_error(embedding_model(Graph::cycle(6), 2, 1.0, 1.8), 1, 2.0) < 1e-6);
    CHECK(worst_gradient_error(embedding_model(Graph::complete(4), 3, 0.0, 1.0), 2, 1.0) < 1e-6);
    CHECK(worst_gradient_error(forbidden_config_model(BipartiteSphericity{1, 1.0}, 0.1, 1e3), 3, 1.5) < 1e-6);
    CHECK(worst_gradient_error(forbidden_config_model(ThreePoints{3, 0, 0.99}, 0.1, 1e3), 4, 1.5) < 1e-6);
}

TEST_CASE("gradient of the total equals the sum of terms") {
    const auto m = embedding_model(Graph::cycle(5), 2, 1.0, 2.0);
    std::vector<double> x{0.1, 0.2, 1.3, -0.4, 0.7, 0.9, -1.1, 0.3, 0.0, 1.7};
    std::vector<double> total;
    const double f = m.value_and_gradient(x, total);
    std::vector<double> sum(x.size(), 0.0);
    for (std::size_t t = 0; t < m.constraints().size(); ++t) m.add_term_gradient(t, x, sum);
    CHECK(f == doctest::Approx(m.value(x)));
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(total[i] == doctest::Approx(sum[i]));
}

TEST_CASE("embed_search examples") {
    EmbedProblem c5;
    c5.graph = Graph::cycle(5);
    c5.d = 1;
    c5.r1 = 1.0;
    c5.r2 = 2.0;
    const auto res = embed_search(c5);
    CHECK(res.residual < 1e-6);
    CHECK(res.is_witness());
    CHECK(build_graph(AnnulusInstance::from_points(1, 1.0, 2.0, res.coords)) == c5.graph);

    for (int d = 1; d <= 3; ++d) {
        for (auto [r1, r2] : {std::pair{0.0, 1.0}, std::pair{1.0, 2.0}, std::pair{0.5, 0.5}}) {
            EmbedProblem k2;
            k2.graph = Graph::complete(2);
            k2.d = d;
            k2.r1 = r1;
            k2.r2 = r2;
            k2.restarts = 4;
            // r1 = r2 leaves only a sphere of solutions, reached up to rounding
            if (r1 < r2) {
                CHECK(embed_search(k2).residual == 0.0);
            } else {
                CHECK(embed_search(k2).residual < 1e-12);
            }
        }
    }

    EmbedProblem k4;
    k4.graph = Graph::complete(4);
    k4.d = 1;
    k4.r1 = 1.0;
    k4.r2 = 1.5;
    const auto bad = embed_search(k4);
    CHECK(*std::min_element(bad.restart_stats.begin(), bad.restart_stats.end()) > 1e-3);
    CHECK_FALSE(bad.is_witness());
}

TEST_CASE("witnesses round-trip through build_graph") {
    std::size_t witnesses = 0;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const auto inst = gen_uniform_box(2, 8, 2.0, 0.6, 1.2, seed);
        EmbedProblem p;
        p.graph = build_graph(inst);
        p.d = 2;
        p.r1 = 0.6;
        p.r2 = 1.2;
        p.restarts = 8;
        p.seed = seed;
        const auto res = embed_search(p);
        if (!res.is_witness()) continue;
        ++witnesses;
        CHECK(build_graph(AnnulusInstance::from_points(2, 0.6, 1.2, res.coords)) == p.graph);
    }
    CHECK(witnesses >= 8);
}

TEST_CASE("restart determinism regardless of threads") {
    const auto model = forbidden_config_model(ThreePoints{2, 3, 0.99}, 0.1, 1e3);
    MinimizeOptions a;
    a.restarts = 12;
    a.max_iters = 500;
    a.seed = 7;
    a.threads = 1;
    MinimizeOptions b = a;
    b.threads = 4;
    const auto ra = minimize_penalty(model, a);
    const auto rb = minimize_penalty(model, b);
    CHECK(ra.restart_stats == rb.restart_stats);
    CHECK(ra.coords == rb.coords);
    CHECK(ra.best_restart == rb.best_restart);
    a.seed = 8;
    CHECK(minimize_penalty(model, a).restart_stats != ra.restart_stats);
}

TEST_CASE("forbidden configuration examples") {
    ProbeOptions opts;
    opts.restarts = 100;
    const auto bip = forbidden_config_residual(BipartiteSphericity{1, 1.0}, opts);
    REQUIRE(bip.restart_stats.size() == 100);
    for (double r : bip.restart_stats) CHECK(r >= 0.09);

    const auto three = forbidden_config_residual(ThreePoints{2, 3, 0.99}, opts);
    for (double r : three.restart_stats) CHECK(r > 0.0);

    const auto relaxed = forbidden_config_residual(BipartiteSphericity{1, 2.0}, opts);
    CHECK(relaxed.residual < 1e-6);

    CHECK_THROWS_AS(forbidden_config_model(BipartiteSphericity{1, 1.0}, 0.0, 1e3), DomainError);
    CHECK_THROWS_AS(forbidden_config_model(ThreePoints{1, 3, 0.99}, 0.1, 1e3), DomainError);
}

TEST_CASE("three points default count follows the witness size") {
    CHECK(forbidden_config_model(ThreePoints{2, 0, 0.99}, 0.1, 1e3).points() == 5);
    CHECK(forbidden_config_model(ThreePoints{3, 0, 0.99}, 0.1, 1e3).points() == 10);
}

TEST_CASE("embed_search budget and errors") {
    EmbedProblem p;
    p.graph = Graph(20);
    p.budget = 10;
    CHECK_THROWS_AS(embed_search(p), BudgetExceeded);
    p.budget = 100;
    p.r1 = 3.0;
    p.r2 = 1.0;
    CHECK_THROWS_AS(embed_search(p), DomainError);
}

} // TEST_SUITE
