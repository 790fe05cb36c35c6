#include "annulus/geometry.hpp"

#include "annulus/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace annulus {

namespace {

constexpr double kPi = std::numbers::pi;

void require_same_dim(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw DimensionMismatch("dimension mismatch: " + std::to_string(p.size()) + " vs " +
                                std::to_string(q.size()));
    }
}

// ── adaptive Simpson ────────────────────────────────────────────

template <class F>
double simpson_step(const F& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth, int min_depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || (min_depth <= 0 && std::abs(delta) <= 15.0 * tol)) {
        return left + right + delta / 15.0;
    }
    return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, min_depth - 1) +
           simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, min_depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, 50, 6);
}

// Integral of exp((d-2) * (ln sin t - log_scale)) over [0, upper], upper <= pi/2.
double scaled_sine_power_integral(int d, double upper, double log_scale) {
    const double power = static_cast<double>(d - 2);
    auto f = [&](double t) {
        const double s = std::sin(t);
        if (s <= 0.0) return 0.0;
        return std::exp(power * (std::log(s) - log_scale));
    };
    return adaptive_simpson(f, 0.0, upper, 1e-12);
}

// Fraction for theta in (0, pi/2].
double cap_fraction_lower(int d, double theta) {
    const double power = static_cast<double>(d - 2);
    const double log_scale = std::log(std::sin(theta));
    const double numerator = scaled_sine_power_integral(d, theta, log_scale);
    const double half_sphere = scaled_sine_power_integral(d, kPi / 2.0, 0.0);
    // numerator carries a factor exp(power * log_scale)
    return std::exp(power * log_scale + std::log(numerator) - std::log(2.0 * half_sphere));
}

// ── farthest-point insertion ────────────────────────────────────

// Greedily grows a set from candidates[start]: repeatedly adds the candidate
// farthest from the current set while that distance clears the separation.
// Ties go to the lowest candidate index.
std::vector<std::size_t> farthest_point_insertion(const std::vector<Point>& candidates,
                                                  std::size_t start, double separation,
                                                  bool strict) {
    std::vector<std::size_t> chosen{start};
    std::vector<double> nearest(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        nearest[i] = dist(candidates[i], candidates[start]);
    }
    while (true) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < nearest.size(); ++i) {
            if (nearest[i] > nearest[best]) best = i;
        }
        const double gap = nearest[best];
        if (strict ? !(gap > separation) : !(gap >= separation)) break;
        chosen.push_back(best);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            nearest[i] = std::min(nearest[i], dist(candidates[i], candidates[best]));
        }
    }
    return chosen;
}

std::vector<Point> best_of_starts(const std::vector<Point>& candidates, std::size_t starts,
                                  double separation, bool strict) {
    std::vector<std::size_t> best;
    starts = std::min(starts, candidates.size());
    for (std::size_t s = 0; s < starts; ++s) {
        auto chosen = farthest_point_insertion(candidates, s, separation, strict);
        if (chosen.size() > best.size()) best = std::move(chosen);
    }
    std::vector<Point> out;
    out.reserve(best.size());
    for (std::size_t i : best) out.push_back(candidates[i]);
    return out;
}

Point axis_point(int d, int axis, double value) {
    Point p(static_cast<std::size_t>(d), 0.0);
    p[static_cast<std::size_t>(axis)] = value;
    return p;
}

} // namespace

double dist_squared(std::span<const double> p, std::span<const double> q) {
    require_same_dim(p, q);
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double diff = p[i] - q[i];
        acc += diff * diff;
    }
    return acc;
}

double dist(std::span<const double> p, std::span<const double> q) {
    return std::sqrt(dist_squared(p, q));
}

double norm(std::span<const double> p) {
    double acc = 0.0;
    for (double x : p) acc += x * x;
    return std::sqrt(acc);
}

double spherical_distance(std::span<const double> u, std::span<const double> v, double unit_tol) {
    require_same_dim(u, v);
    if (std::abs(norm(u) - 1.0) > unit_tol || std::abs(norm(v) - 1.0) > unit_tol) {
        throw DomainError("spherical_distance: input is not a unit vector");
    }
    const double dot = std::inner_product(u.begin(), u.end(), v.begin(), 0.0);
    return std::acos(std::clamp(dot, -1.0, 1.0));
}

double cap_fraction(int d, double theta) {
    if (d < 2) throw DomainError("cap_fraction: d must be >= 2");
    if (!(theta > 0.0) || theta > kPi) throw DomainError("cap_fraction: theta must lie in (0, pi]");
    if (d == 2) return theta / kPi;
    if (theta == kPi) return 1.0;
    if (theta <= kPi / 2.0) return cap_fraction_lower(d, theta);
    return 1.0 - cap_fraction_lower(d, kPi - theta);
}

double sphere_surface_area(int d) {
    if (d < 1) throw DomainError("sphere_surface_area: d must be >= 1");
    const double half = 0.5 * d;
    return 2.0 * std::pow(kPi, half) / std::tgamma(half);
}

// ── random sampling ─────────────────────────────────────────────

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

Point random_unit_vector(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Point p(static_cast<std::size_t>(d));
    double n = 0.0;
    do {
        for (double& x : p) x = normal(rng);
        n = norm(p);
    } while (n < 1e-12);
    for (double& x : p) x /= n;
    return p;
}

Point random_in_ball(int d, double radius, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Point p = random_unit_vector(d, rng);
    const double scale = radius * std::pow(unif(rng), 1.0 / d);
    for (double& x : p) x *= scale;
    return p;
}

// ── packing ─────────────────────────────────────────────────────

bool PackingWitness::valid() const {
    const double inner = container_radius - radius;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        if (norm(centers[i]) > inner + 1e-12) return false;
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            if (dist(centers[i], centers[j]) < 2.0 * radius) return false;
        }
    }
    return true;
}

PackingWitness greedy_ball_packing(double container_radius, double ball_radius, int d,
                                   std::uint64_t seed, PackingOptions opts) {
    if (d < 1) throw DomainError("greedy_ball_packing: d must be >= 1");
    if (!(ball_radius > 0.0) || container_radius < ball_radius) {
        throw DomainError("greedy_ball_packing: need R >= r > 0");
    }
    PackingWitness out;
    out.radius = ball_radius;
    out.container_radius = container_radius;
    out.dim = d;

    const double inner = container_radius - ball_radius;
    std::vector<Point> candidates;
    candidates.emplace_back(static_cast<std::size_t>(d), 0.0);
    if (inner > 0.0) {
        for (int axis = 0; axis < d; ++axis) {
            candidates.push_back(axis_point(d, axis, inner));
            candidates.push_back(axis_point(d, axis, -inner));
        }
        auto rng = make_rng(seed);
        for (int i = 0; i < opts.candidates; ++i) candidates.push_back(random_in_ball(d, inner, rng));
    }
    out.centers = best_of_starts(candidates, static_cast<std::size_t>(opts.starts),
                                 2.0 * ball_radius, false);
    return out;
}

// ── covering ────────────────────────────────────────────────────

CoveringWitness covering_number_witness(double T, int d, double small_radius, CoveringOptions opts) {
    if (d < 1) throw DomainError("covering_number_witness: d must be >= 1");
    if (!(T >= 1.0)) throw DomainError("covering_number_witness: T must be >= 1");
    if (!(small_radius > 0.0)) throw DomainError("covering_number_witness: radius must be > 0");

    CoveringWitness out;
    out.small_radius = small_radius;
    out.big_radius = T * small_radius;
    out.ratio = T;
    out.dim = d;

    if (T <= 1.0 + 1e-12) {
        out.centers.emplace_back(static_cast<std::size_t>(d), 0.0);
        out.probes_checked = 0;
        return out;
    }

    // Cubic cells of side h have circumradius r, so each cell sits inside the
    // ball around its centre.
    const double r = small_radius;
    const double R = out.big_radius;
    const double h = 2.0 * r / std::sqrt(static_cast<double>(d));
    const auto per_axis = static_cast<std::size_t>(std::ceil(T * std::sqrt(double(d)) - 1e-9));
    double total = std::pow(static_cast<double>(per_axis), d);
    if (total > 5e7) throw BudgetExceeded("covering_number_witness: lattice too large");
    const auto cells = static_cast<std::size_t>(total);

    auto coord = [&](std::size_t i) { return (static_cast<double>(i) - 0.5 * (per_axis - 1.0)) * h; };

    std::vector<std::int64_t> cell_to_center(cells, -1);
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    for (std::size_t flat = 0; flat < cells; ++flat) {
        std::size_t rem = flat;
        double near_sq = 0.0;
        Point c(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) {
            idx[k] = rem % per_axis;
            rem /= per_axis;
            c[k] = coord(idx[k]);
            const double gap = std::max(0.0, std::abs(c[k]) - 0.5 * h);
            near_sq += gap * gap;
        }
        if (near_sq <= R * R) {
            cell_to_center[flat] = static_cast<std::int64_t>(out.centers.size());
            out.centers.push_back(std::move(c));
            if (out.centers.size() > opts.max_centers) {
                throw BudgetExceeded("covering_number_witness: too many centres");
            }
        }
    }

    // Probe verification: locate the probe's cell, fall back to a full scan.
    auto rng = make_rng(opts.seed, 0xC0FEu);
    const double reach = r * (1.0 + 1e-12);
    for (std::size_t p = 0; p < opts.probes; ++p) {
        Point q = random_in_ball(d, R, rng);
        std::size_t flat = 0;
        std::size_t stride = 1;
        for (int k = 0; k < d; ++k) {
            double pos = std::round(q[k] / h + 0.5 * (per_axis - 1.0));
            pos = std::clamp(pos, 0.0, static_cast<double>(per_axis - 1));
            flat += static_cast<std::size_t>(pos) * stride;
            stride *= per_axis;
        }
        const auto hit = cell_to_center[flat];
        if (hit >= 0 && dist(q, out.centers[static_cast<std::size_t>(hit)]) <= reach) continue;
        const bool covered = std::any_of(out.centers.begin(), out.centers.end(),
                                         [&](const Point& c) { return dist(q, c) <= reach; });
        if (!covered) throw VerificationFailure("covering_number_witness: probe left uncovered");
    }
    out.probes_checked = opts.probes;
    return out;
}

// ── N_gamma witnesses ───────────────────────────────────────────

std::vector<Point> n_gamma_witness(int d, double gamma, std::uint64_t seed) {
    if (d < 2) throw DomainError("n_gamma_witness: d must be >= 2");
    if (!(gamma > 0.0) || !(gamma < 1.0)) throw DomainError("n_gamma_witness: gamma must lie in (0,1)");

    constexpr double radius = 0.99;
    std::vector<Point> pts;
    if (gamma >= radius) {
        if (d == 2) {
            for (int k = 0; k < 5; ++k) {
                const double a = 2.0 * kPi * k / 5.0;
                pts.push_back({radius * std::cos(a), radius * std::sin(a)});
            }
            return pts;
        }
        const double x = 0.6;
        const double y = std::sqrt(radius * radius - x * x);
        auto make = [&](int axis_a, double va, int axis_b, double vb) {
            Point p(static_cast<std::size_t>(d), 0.0);
            p[axis_a] = va;
            p[axis_b] = vb;
            pts.push_back(std::move(p));
        };
        // a_1..a_4 in the (e1,e2) plane, b_1..b_4 in the (e1,e3) plane
        make(0, x, 1, y);
        make(0, x, 1, -y);
        make(0, -x, 1, y);
        make(0, -x, 1, -y);
        make(0, x, 2, y);
        make(0, x, 2, -y);
        make(0, -x, 2, y);
        make(0, -x, 2, -y);
        // z points sit on the remaining axes, scaled into B(0, 0.99)
        for (int axis = 3; axis < d; ++axis) {
            pts.push_back(axis_point(d, axis, radius));
            pts.push_back(axis_point(d, axis, -radius));
        }
        return pts;
    }

    auto rng = make_rng(seed, 0x9A77u);
    std::vector<Point> candidates;
    for (int axis = 0; axis < d; ++axis) {
        candidates.push_back(axis_point(d, axis, gamma));
        candidates.push_back(axis_point(d, axis, -gamma));
    }
    for (int i = 0; i < 4000; ++i) {
        // half of the cloud on the boundary sphere, where separated points live
        Point p = (i % 2 == 0) ? random_unit_vector(d, rng) : random_in_ball(d, 1.0, rng);
        for (double& v : p) v *= gamma;
        candidates.push_back(std::move(p));
    }
    return best_of_starts(candidates, 8, 1.0, true);
}

// ── spherical codes ─────────────────────────────────────────────

bool SphericalCode::valid(double tol) const {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (std::abs(norm(points[i]) - 1.0) > tol) return false;
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (spherical_distance(points[i], points[j], tol) < min_angle - tol) return false;
        }
    }
    return true;
}

SphericalCode greedy_spherical_code(int d, double min_angle, std::uint64_t seed,
                                    SphericalCodeOptions opts) {
    if (d < 2) throw DomainError("greedy_spherical_code: d must be >= 2");
    if (!(min_angle > 0.0) || min_angle > kPi) {
        throw DomainError("greedy_spherical_code: angle must lie in (0, pi]");
    }
    SphericalCode out;
    out.min_angle = min_angle;
    out.dim = d;

    const double accept = min_angle - 1e-12;
    auto angle = [](const Point& a, const Point& b) {
        const double dot = std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
        return std::acos(std::clamp(dot, -1.0, 1.0));
    };
    auto fits = [&](const std::vector<Point>& set, const Point& p) {
        return std::all_of(set.begin(), set.end(), [&](const Point& q) { return angle(p, q) >= accept; });
    };

    std::vector<Point> candidates;
    for (int axis = 0; axis < d; ++axis) {
        candidates.push_back(axis_point(d, axis, 1.0));
        candidates.push_back(axis_point(d, axis, -1.0));
    }
    auto rng = make_rng(seed, 0x5C0Du);
    for (int i = 0; i < opts.candidates; ++i) candidates.push_back(random_unit_vector(d, rng));

    // Fill `set` from the candidate cloud by farthest-point insertion.
    auto fill = [&](std::vector<Point> set) {
        std::vector<double> nearest(candidates.size(), kPi);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            for (const auto& q : set) nearest[i] = std::min(nearest[i], angle(candidates[i], q));
        }
        while (true) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < nearest.size(); ++i) {
                if (nearest[i] > nearest[best]) best = i;
            }
            if (nearest[best] < accept) break;
            set.push_back(candidates[best]);
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                nearest[i] = std::min(nearest[i], angle(candidates[i], candidates[best]));
            }
        }
        return set;
    };

    // start 0: cross-polytope seed
    std::vector<Point> seeded;
    for (std::size_t i = 0; i < static_cast<std::size_t>(2 * d); ++i) {
        if (fits(seeded, candidates[i])) seeded.push_back(candidates[i]);
    }
    out.points = fill(std::move(seeded));

    for (int s = 1; s < opts.starts; ++s) {
        auto attempt = fill({candidates[static_cast<std::size_t>(2 * d + s - 1)]});
        if (attempt.size() > out.points.size()) out.points = std::move(attempt);
    }

    if (d == 2) {
        const auto n = static_cast<int>(std::floor(2.0 * kPi / min_angle + 1e-9));
        std::vector<Point> ring;
        for (int k = 0; k < n; ++k) {
            const double a = 2.0 * kPi * k / n;
            ring.push_back({std::cos(a), std::sin(a)});
        }
        if (ring.size() > out.points.size()) out.points = std::move(ring);
    }
    return out;
}

} // namespace annulus
