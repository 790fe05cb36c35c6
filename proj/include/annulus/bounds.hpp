#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace annulus {

/// Per-dimension exponent of the linear-programming bound on spherical codes of
/// minimal angle phi, in nats (o_d(1) terms dropped):
///   A ln A - B ln B,  s = sin phi, A = (1+s)/(2s), B = (1-s)/(2s).
/// Zero at phi = pi/2; +inf at phi = pi.
double kl_exponent(double phi);

/// Upper end of the analysis_function domain, arcsin(1/1.2).
double analysis_domain_end();

/// sin(theta) * exp(kl_exponent(2 theta)) for theta in (0, arcsin(1/1.2)].
double analysis_function(double theta);

struct GridMaximum {
    double argmax = 0.0;
    double value = 0.0;
    std::size_t samples = 0;
    bool at_right_endpoint = false;
};

/// Evaluates analysis_function on lo, lo+step, ... and always on hi itself.
GridMaximum analysis_grid_max(double lo, double hi, double step);

/// Per-dimension log of the chi/omega lower-bound ratio for sphere nets:
///   -ln sin(arcsin(1/x) + delta) - kl_exponent(2 arcsin(1/x)).
/// An asymptotic exponent, not a finite-d certificate.
double ratio_exponent(double x, double delta);

/// floor(((r2 + r1/2) / (r1/2))^d): the clique-size volume bound.
std::uint64_t clique_volume_bound(int d, double r1, double r2);

/// 7^d, throwing on 64-bit overflow.
std::uint64_t seven_pow(int d);

struct SweepBound {
    int d = 1;
    double r1 = 0.0;
    double r2 = 1.0;
    double T = 2.0;               // 2 + r1/r2
    std::uint64_t nu = 0;         // covering witness size for (T, d)
    std::uint64_t seven_pow_d = 1;
    std::uint64_t bound = 0;      // nu * 7^d
    std::string note;
};

/// max sweep colour <= nu(T,d) * 7^d * omega with T = 2 + r1/r2.
SweepBound sweep_chi_bound(int d, double r1, double r2, std::uint64_t seed = 1);

struct BoundReport {
    int d = 1;
    double r1 = 0.0;
    double r2 = 1.0;
    SweepBound sweep;
    double kl = 0.0;                          // at phi = 2 arcsin(r1/r2), NaN when r1 = 0
    std::vector<double> cap_fraction_thetas;  // arcsin(r1/r2) + delta grid
    std::vector<double> cap_fraction_values;
    double ratio = 0.0;                       // NaN unless r2/r1 >= 1.2
    std::vector<std::string> notes;
};

BoundReport bound_report(int d, double r1, double r2, double delta = 1e-4, std::uint64_t seed = 1);

} // namespace annulus
