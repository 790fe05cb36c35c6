#pragma once

#include "annulus/graph.hpp"

#include <cstdint>
#include <variant>

namespace annulus {

struct LatticeSpec {
    int d = 2;
    double x = 2.0;                  // instance radii are (1, x)
    Rational eps{1, 2};              // lattice spacing, 0 < eps <= 1
    double n = 2.0;                  // radius of the ball restricting the lattice
    std::size_t max_points = 100000;
};

/// eps * Z^d restricted to B(0, n), exact-integer arithmetic, radii (1, x).
AnnulusInstance gen_lattice(const LatticeSpec& spec);

/// 1D instance with radii (1, x) whose graph contains a spanning odd cycle:
/// five points 0, x, 2x, x+0.99, x-0.99 when x >= 2, otherwise the 2k+1 point
/// chain with k the smallest integer >= 2 such that kx >= k+1.
AnnulusInstance gen_cycle_1d(double x);

/// The k used by gen_cycle_1d for x < 2.
int cycle_1d_k(double x);

struct GreedyNet {
    double eps = 0.19634954084936207;  // pi/16
};

struct PoissonCloud {
    double lambda = 1.0;  // intensity per unit surface measure
};

struct SphereNetSpec {
    int d = 3;
    double x = 1.2;
    std::variant<GreedyNet, PoissonCloud> method = GreedyNet{};
    std::uint64_t seed = 1;
    std::size_t probes = 100000;
    std::size_t candidates = 20000;
};

/// Unit-sphere point sets with radii (2/x, 2). The greedy net is checked by
/// random probes (every probe within eps of the net) and raises
/// VerificationFailure otherwise.
AnnulusInstance gen_sphere_net(const SphereNetSpec& spec);

/// Largest spherical distance from `probes` random sphere points to the net.
double net_covering_radius_estimate(const std::vector<Point>& net, int d, std::size_t probes,
                                    std::uint64_t seed);

/// The explicit N_gamma witness at gamma = 0.99 with radii (1, 2): a clique.
AnnulusInstance gen_easy_lemma_instance(int d);

/// n uniform points in [0, side]^d with the given radii. Test and
/// verification workloads.
AnnulusInstance gen_uniform_box(int d, std::size_t n, double side, double r1, double r2, std::uint64_t seed);

} // namespace annulus
