#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace annulus {

using Point = std::vector<double>;

double dist(std::span<const double> p, std::span<const double> q);
double dist_squared(std::span<const double> p, std::span<const double> q);
double norm(std::span<const double> p);

/// Angle between two unit vectors, in [0, pi]. Inputs whose norm differs from 1
/// by more than `unit_tol` are rejected.
double spherical_distance(std::span<const double> u, std::span<const double> v,
                          double unit_tol = 1e-9);

/// Fraction of the measure of S^{d-1} covered by a cap of angular radius theta:
///   int_0^theta sin^{d-2} t dt / int_0^pi sin^{d-2} t dt.
/// Evaluated by adaptive Simpson on a log-rescaled integrand so that large d
/// (up to 1e4) does not underflow.
double cap_fraction(int d, double theta);

/// (d-1)-dimensional surface measure of the unit sphere S^{d-1}.
double sphere_surface_area(int d);

struct PackingWitness {
    std::vector<Point> centers;
    double radius = 0.0;
    double container_radius = 0.0;
    int dim = 0;

    std::size_t count() const { return centers.size(); }
    /// Pairwise centre distance >= 2*radius and every ball inside the container.
    bool valid() const;
};

struct CoveringWitness {
    std::vector<Point> centers;
    double small_radius = 0.0;
    double big_radius = 0.0;
    double ratio = 1.0;  // big_radius / small_radius
    int dim = 0;
    std::size_t probes_checked = 0;

    std::size_t count() const { return centers.size(); }
};

struct SphericalCode {
    std::vector<Point> points;
    double min_angle = 0.0;
    int dim = 0;

    std::size_t size() const { return points.size(); }
    bool valid(double tol = 1e-9) const;
};

struct PackingOptions {
    int starts = 8;
    int candidates = 4000;
};

/// Lower bound on the number of disjoint radius-r balls inside B(0,R): greedy
/// farthest-point insertion over a candidate cloud, best of several starts.
PackingWitness greedy_ball_packing(double container_radius, double ball_radius, int d,
                                   std::uint64_t seed, PackingOptions opts = {});

struct CoveringOptions {
    std::size_t probes = 100000;
    std::uint64_t seed = 1;
    std::size_t max_centers = 2000000;
};

/// Constructive covering of B(0, T*r) by balls of radius r. Centres come from a
/// cubic lattice whose cells have circumradius r; cells missing the big ball are
/// pruned. The result is checked against random probes of the big ball and a
/// miss raises VerificationFailure.
CoveringWitness covering_number_witness(double T, int d, double small_radius,
                                        CoveringOptions opts = {});

/// Points of B(0,gamma) pairwise more than 1 apart. gamma >= 0.99 uses the
/// explicit pentagon (d = 2) or the 2d+2 point a/b/z configuration (d >= 3);
/// smaller gamma falls back to greedy search.
std::vector<Point> n_gamma_witness(int d, double gamma, std::uint64_t seed = 1);

struct SphericalCodeOptions {
    int starts = 4;
    int candidates = 5000;
};

/// Unit vectors pairwise at angle >= min_angle; a lower bound on M(d, min_angle).
SphericalCode greedy_spherical_code(int d, double min_angle, std::uint64_t seed,
                                    SphericalCodeOptions opts = {});

// Sampling helpers shared by generators and probes.
Point random_unit_vector(int d, std::mt19937_64& rng);
Point random_in_ball(int d, double radius, std::mt19937_64& rng);
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0);

} // namespace annulus
