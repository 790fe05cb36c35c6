#include "doctest.h"

#include "annulus/error.hpp"
#include "annulus/generators.hpp"
#include "annulus/solvers.hpp"

#include "support/oracle.hpp"

#include <cmath>
#include <numbers>

using namespace annulus;

namespace {

constexpr double kPi = std::numbers::pi;

bool has_triangle(const oracle::SmallGraph& g) {
    for (std::size_t u = 0; u < g.n; ++u) {
        for (std::size_t v = u + 1; v < g.n; ++v) {
            if (g.has(u, v) && (g.adj[u] & g.adj[v])) return true;
        }
    }
    return false;
}

bool hamiltonian_from(const Graph& g, std::vector<std::size_t>& path, std::vector<bool>& used) {
    if (path.size() == g.size()) return g.adjacent(path.back(), path.front());
    for (std::size_t w : g.neighbors(path.back())) {
        if (used[w]) continue;
        used[w] = true;
        path.push_back(w);
        if (hamiltonian_from(g, path, used)) return true;
        path.pop_back();
        used[w] = false;
    }
    return false;
}

bool has_hamiltonian_cycle(const Graph& g) {
    std::vector<std::size_t> path{0};
    std::vector<bool> used(g.size(), false);
    used[0] = true;
    return hamiltonian_from(g, path, used);
}

std::vector<double> coords_1d(const AnnulusInstance& inst) {
    std::vector<double> out;
    for (const auto& p : inst.points) out.push_back(p[0]);
    return out;
}

} // namespace

TEST_SUITE("generators") {

TEST_CASE("lattice examples") {
    LatticeSpec a;
    a.d = 1;
    a.eps = parse_rational("0.3");
    a.n = 1.0;
    const auto la = gen_lattice(a);
    REQUIRE(la.size() == 7);
    for (int i = 0; i < 7; ++i) CHECK(la.points[i][0] == doctest::Approx(-0.9 + 0.3 * i).epsilon(1e-15));
    CHECK(la.mode == ArithmeticMode::ExactInteger);

    LatticeSpec b;
    b.d = 2;
    b.eps = Rational(1);
    b.n = 1.0;
    b.x = 2.0;
    const auto lb = gen_lattice(b);
    CHECK(lb.size() == 5);
    CHECK(build_graph(lb) == Graph::complete(5));

    LatticeSpec c;
    c.d = 1;
    c.eps = Rational(1, 2);
    c.n = 2.0;
    c.x = 2.0;
    const auto lc = gen_lattice(c);
    CHECK(lc.size() == 9);
    CHECK(build_graph(lc).edges() == oracle::lattice_edges(lc.lattice->coords, 1, 2, 2, 1));
}

TEST_CASE("lattice against the integer oracle in higher dimension") {
    LatticeSpec s;
    s.d = 3;
    s.eps = Rational(2, 5);
    s.n = 1.3;
    s.x = 1.5;
    const auto inst = gen_lattice(s);
    // count |k|^2 <= floor(1.3^2 / 0.16) = 10 by hand
    std::size_t expect = 0;
    for (int i = -4; i <= 4; ++i) {
        for (int j = -4; j <= 4; ++j) {
            for (int k = -4; k <= 4; ++k) expect += (i * i + j * j + k * k <= 10);
        }
    }
    CHECK(inst.size() == expect);
    CHECK(build_graph(inst).edges() == oracle::lattice_edges(inst.lattice->coords, 2, 5, 3, 2));
    CHECK(count_boundary_pairs(inst, 1e-9) == 0);
}

TEST_CASE("lattice errors") {
    LatticeSpec s;
    s.d = 3;
    s.eps = Rational(1, 10);
    s.n = 5.0;
    s.max_points = 1000;
    CHECK_THROWS_AS(gen_lattice(s), BudgetExceeded);
    s.eps = Rational(0);
    CHECK_THROWS_AS(gen_lattice(s), DomainError);
    s.eps = Rational(3, 2);
    CHECK_THROWS_AS(gen_lattice(s), DomainError);
}

TEST_CASE("cycle1d examples") {
    const auto c2 = gen_cycle_1d(2.0);
    const std::vector<double> expect2{0.0, 2.0, 4.0, 2.99, 1.01};
    const auto xs2 = coords_1d(c2);
    REQUIRE(xs2.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(xs2[i] == doctest::Approx(expect2[i]).epsilon(1e-15));
    CHECK(build_graph(c2) == Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));

    const auto c15 = gen_cycle_1d(1.5);
    CHECK(cycle_1d_k(1.5) == 2);
    const auto xs = coords_1d(c15);
    const std::vector<double> expect{0, 1.5, 3, 2, 1};
    REQUIRE(xs.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(xs[i] == doctest::Approx(expect[i]).epsilon(1e-14));
    const Graph g15 = build_graph(c15);
    CHECK(g15.edge_count() == 5);
    CHECK(has_hamiltonian_cycle(g15));

    const auto c11 = gen_cycle_1d(1.1);
    CHECK(cycle_1d_k(1.1) == 10);
    CHECK(c11.size() == 21);
    const Graph g11 = build_graph(c11);
    CHECK(has_hamiltonian_cycle(g11));
    CHECK_FALSE(has_triangle(oracle::from_edges(21, g11.edges())));

    CHECK_THROWS_AS(gen_cycle_1d(1.0), DomainError);
}

TEST_CASE("cycle1d gives omega 2 and chi 3") {
    std::vector<double> xs;
    for (int i = 1; i <= 19; ++i) xs.push_back(1.0 + 0.05 * i);
    xs.push_back(2.0);
    xs.push_back(3.0);
    xs.push_back(1.37);
    xs.push_back(7.5);
    for (double x : xs) {
        CAPTURE(x);
        const auto inst = gen_cycle_1d(x);
        const Graph g = build_graph(inst);
        const auto small = oracle::from_edges(g.size(), g.edges());
        CHECK(max_clique(g).value == 2);
        CHECK(chromatic_number(g).value == 3);
        CHECK(g.size() % 2 == 1);
        CHECK(has_hamiltonian_cycle(g));
        if (x < 2.0) CHECK_FALSE(has_triangle(small));
        if (g.size() <= 20) CHECK(oracle::chi(small) == 3);
    }
}

TEST_CASE("sphere net examples") {
    SphereNetSpec s;
    s.d = 2;
    s.x = 1.5;
    s.method = GreedyNet{kPi / 8};
    const auto net = gen_sphere_net(s);
    REQUIRE(net.size() == 16);
    for (std::size_t i = 0; i < 16; ++i) {
        const std::size_t j = (i + 1) % 16;
        CHECK(spherical_distance(net.points[i], net.points[j]) == doctest::Approx(kPi / 8).epsilon(1e-12));
    }
    CHECK(net.r1 == doctest::Approx(2.0 / 1.5));
    CHECK(net.r2 == 2.0);
}

TEST_CASE("poisson cloud has the right mean") {
    const double lambda = 3.0;
    double total = 0.0;
    const int runs = 200;
    for (int seed = 1; seed <= runs; ++seed) {
        SphereNetSpec s;
        s.d = 3;
        s.method = PoissonCloud{lambda};
        s.seed = static_cast<std::uint64_t>(seed);
        const auto inst = gen_sphere_net(s);
        for (const auto& p : inst.points) CHECK(norm(p) == doctest::Approx(1.0).epsilon(1e-12));
        total += static_cast<double>(inst.size());
    }
    const double mean = lambda * 4 * kPi;
    // standard error of the sample mean is sqrt(mean / runs)
    CHECK(std::abs(total / runs - mean) < 4.0 * std::sqrt(mean / runs));
}

TEST_CASE("greedy sphere net covers and edges follow 2/x") {
    SphereNetSpec s;
    s.d = 3;
    s.x = 1.2;
    s.method = GreedyNet{kPi / 6};
    s.seed = 4;
    const auto net = gen_sphere_net(s);
    std::mt19937_64 rng(123);
    std::normal_distribution<double> gauss;
    double worst = 0.0;
    for (int i = 0; i < 20000; ++i) {
        Point q{gauss(rng), gauss(rng), gauss(rng)};
        const double nq = norm(q);
        for (double& v : q) v /= nq;
        double best = kPi;
        for (const auto& p : net.points) best = std::min(best, spherical_distance(q, p));
        worst = std::max(worst, best);
    }
    CHECK(worst <= kPi / 6);
    const auto edges = oracle::annulus_edges(net.points, 2.0 / 1.2, 1e9);
    CHECK(build_graph(net).edges() == edges);
}

TEST_CASE("sphere net verification failure is raised") {
    SphereNetSpec s;
    s.d = 4;
    s.method = GreedyNet{0.05};
    s.candidates = 50;
    s.probes = 2000;
    CHECK_THROWS_AS(gen_sphere_net(s), VerificationFailure);
}

TEST_CASE("easy lemma instance examples") {
    const auto e2 = gen_easy_lemma_instance(2);
    CHECK(e2.size() == 5);
    CHECK(build_graph(e2) == Graph::complete(5));

    const auto e3 = gen_easy_lemma_instance(3);
    CHECK(e3.size() == 8);
    CHECK(build_graph(e3) == Graph::complete(8));

    const auto e4 = gen_easy_lemma_instance(4);
    CHECK(e4.size() == 10);
    CHECK(build_graph(e4) == Graph::complete(10));
    // z points (indices 8, 9) against the a points (indices 0..3); frozen 0.99 sqrt(2)
    for (std::size_t z = 8; z < 10; ++z) {
        for (std::size_t a = 0; a < 4; ++a) {
            CHECK(std::abs(dist(e4.points[z], e4.points[a]) - 1.40007142674936409831) < 1e-12);
        }
    }
}

TEST_CASE("uniform box is seeded") {
    const auto a = gen_uniform_box(3, 20, 2.0, 0.5, 1.0, 8);
    const auto b = gen_uniform_box(3, 20, 2.0, 0.5, 1.0, 8);
    const auto c = gen_uniform_box(3, 20, 2.0, 0.5, 1.0, 9);
    CHECK(a.points == b.points);
    CHECK(a.points != c.points);
    for (const auto& p : a.points) {
        for (double v : p) CHECK((v >= 0.0 && v <= 2.0));
    }
}

} // TEST_SUITE
