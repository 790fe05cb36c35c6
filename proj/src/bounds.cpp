#include "annulus/bounds.hpp"

#include "annulus/error.hpp"
#include "annulus/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace annulus {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        throw BudgetExceeded("bound does not fit in 64 bits");
    }
    return a * b;
}

} // namespace

double kl_exponent(double phi) {
    if (!(phi > 0.0) || phi > kPi) throw DomainError("kl_exponent: phi must lie in (0, pi]");
    if (phi == kPi) return std::numeric_limits<double>::infinity();
    const double s = std::sin(phi);
    const double a = (1.0 + s) / (2.0 * s);
    const double b = (1.0 - s) / (2.0 * s);
    const double b_term = b > 0.0 ? b * std::log(b) : 0.0;
    return a * std::log(a) - b_term;
}

double analysis_domain_end() { return std::asin(1.0 / 1.2); }

double analysis_function(double theta) {
    if (!(theta > 0.0) || theta > analysis_domain_end() + 1e-15) {
        throw DomainError("analysis_function: theta must lie in (0, arcsin(1/1.2)]");
    }
    return std::sin(theta) * std::exp(kl_exponent(2.0 * theta));
}

GridMaximum analysis_grid_max(double lo, double hi, double step) {
    if (!(step > 0.0) || !(lo > 0.0) || hi < lo) throw DomainError("analysis_grid_max: bad grid");
    GridMaximum best;
    best.value = -std::numeric_limits<double>::infinity();
    auto visit = [&](double theta) {
        const double g = analysis_function(theta);
        ++best.samples;
        if (g > best.value) {
            best.value = g;
            best.argmax = theta;
        }
    };
    for (std::size_t i = 0;; ++i) {
        const double theta = lo + static_cast<double>(i) * step;
        if (theta >= hi) break;
        visit(theta);
    }
    visit(hi);
    best.at_right_endpoint = best.argmax == hi;
    return best;
}

double ratio_exponent(double x, double delta) {
    if (!(x >= 1.2)) throw DomainError("ratio_exponent: x must be >= 1.2");
    if (!(delta > 0.0)) throw DomainError("ratio_exponent: delta must be positive");
    const double base = std::asin(1.0 / x);
    if (!(base + delta < kPi / 2.0)) throw DomainError("ratio_exponent: arcsin(1/x) + delta must be < pi/2");
    return -std::log(std::sin(base + delta)) - kl_exponent(2.0 * base);
}

std::uint64_t clique_volume_bound(int d, double r1, double r2) {
    if (d < 1) throw DomainError("clique_volume_bound: d must be >= 1");
    if (!(r1 > 0.0)) throw DomainError("clique_volume_bound: r1 must be positive");
    if (r2 < r1) throw DomainError("clique_volume_bound: r2 must be >= r1");
    const long double base = (static_cast<long double>(r2) + r1 / 2.0L) / (r1 / 2.0L);
    const long double value = std::pow(base, d);
    if (value >= 1.8e19L) throw BudgetExceeded("clique_volume_bound: does not fit in 64 bits");
    // absorb rounding just below an exact integer, e.g. 2.9999999999 for 3
    return static_cast<std::uint64_t>(std::floor(value * (1.0L + 1e-15L)));
}

std::uint64_t seven_pow(int d) {
    if (d < 0) throw DomainError("seven_pow: negative exponent");
    std::uint64_t out = 1;
    for (int i = 0; i < d; ++i) out = checked_mul(out, 7);
    return out;
}

SweepBound sweep_chi_bound(int d, double r1, double r2, std::uint64_t seed) {
    if (d < 1) throw DomainError("sweep_chi_bound: d must be >= 1");
    if (!(r2 > 0.0) || r1 < 0.0 || r2 < r1) throw DomainError("sweep_chi_bound: need r2 >= r1 >= 0, r2 > 0");
    SweepBound out;
    out.d = d;
    out.r1 = r1;
    out.r2 = r2;
    out.T = 2.0 + r1 / r2;
    CoveringOptions opts;
    opts.seed = seed;
    out.nu = covering_number_witness(out.T, d, r2 / 2.0, opts).count();
    out.seven_pow_d = seven_pow(d);
    out.bound = checked_mul(out.nu, out.seven_pow_d);
    out.note = "asymptotically (21+o_d(1))^d; nu is a constructive covering count, an upper bound on the optimum";
    return out;
}

BoundReport bound_report(int d, double r1, double r2, double delta, std::uint64_t seed) {
    BoundReport rep;
    rep.d = d;
    rep.r1 = r1;
    rep.r2 = r2;
    rep.sweep = sweep_chi_bound(d, r1, r2, seed);
    rep.notes.push_back("sweep: " + rep.sweep.note);
    rep.kl = std::numeric_limits<double>::quiet_NaN();
    rep.ratio = std::numeric_limits<double>::quiet_NaN();
    if (r1 > 0.0) {
        const double x = r2 / r1;
        const double base = std::asin(1.0 / x);
        rep.kl = kl_exponent(2.0 * base);
        rep.notes.push_back("kl: asymptotic exponent (nats per dimension) at phi = 2 arcsin(r1/r2)");
        if (d >= 2) {
            for (double extra : {0.0, delta, 10.0 * delta}) {
                const double theta = base + extra;
                if (theta > kPi) continue;
                rep.cap_fraction_thetas.push_back(theta);
                rep.cap_fraction_values.push_back(cap_fraction(d, theta));
            }
        }
        if (x >= 1.2 && base + delta < kPi / 2.0) {
            rep.ratio = ratio_exponent(x, delta);
            rep.notes.push_back("ratio: asymptotic exponent, compare against ln(1.003)");
        }
    }
    return rep;
}

} // namespace annulus
