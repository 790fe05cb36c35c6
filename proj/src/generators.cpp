#include "annulus/generators.hpp"

#include "annulus/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace annulus {

namespace {

constexpr double kPi = std::numbers::pi;

void enumerate_lattice(int d, int axis, std::int64_t reach, std::int64_t budget_sq,
                       std::vector<std::int64_t>& current, std::vector<std::vector<std::int64_t>>& out,
                       std::size_t cap) {
    if (axis == d) {
        if (out.size() >= cap) throw BudgetExceeded("gen_lattice: point count exceeds cap");
        out.push_back(current);
        return;
    }
    for (std::int64_t k = -reach; k <= reach; ++k) {
        const std::int64_t sq = k * k;
        if (sq > budget_sq) continue;
        current[static_cast<std::size_t>(axis)] = k;
        enumerate_lattice(d, axis + 1, reach, budget_sq - sq, current, out, cap);
    }
}

double dot(const Point& a, const Point& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0.0); }

} // namespace

AnnulusInstance gen_lattice(const LatticeSpec& spec) {
    if (spec.d < 1) throw DomainError("gen_lattice: d must be >= 1");
    if (!(spec.x >= 1.0)) throw DomainError("gen_lattice: x must be >= 1");
    if (spec.eps <= 0 || spec.eps > 1) throw DomainError("gen_lattice: eps must lie in (0,1]");
    if (!(spec.n > 0.0) || !std::isfinite(spec.n)) throw DomainError("gen_lattice: n must be positive");

    // eps^2 |k|^2 <= n^2  <=>  |k|^2 <= floor(n^2 / eps^2)
    const Rational radius(spec.n);
    const Rational ratio = radius * radius / (spec.eps * spec.eps);
    const boost::multiprecision::cpp_int floor_sq =
        boost::multiprecision::numerator(ratio) / boost::multiprecision::denominator(ratio);
    if (floor_sq > boost::multiprecision::cpp_int(std::int64_t{1} << 60)) {
        throw BudgetExceeded("gen_lattice: lattice radius too large");
    }
    const auto budget_sq = static_cast<std::int64_t>(floor_sq);
    auto reach = static_cast<std::int64_t>(std::sqrt(static_cast<double>(budget_sq)));
    while (reach * reach > budget_sq) --reach;
    while ((reach + 1) * (reach + 1) <= budget_sq) ++reach;

    std::vector<std::vector<std::int64_t>> coords;
    std::vector<std::int64_t> current(static_cast<std::size_t>(spec.d), 0);
    enumerate_lattice(spec.d, 0, reach, budget_sq, current, coords, spec.max_points);
    return AnnulusInstance::from_lattice(spec.d, 1.0, spec.x, spec.eps, std::move(coords));
}

int cycle_1d_k(double x) {
    if (!(x > 1.0)) throw DomainError("gen_cycle_1d: x must be > 1");
    for (int k = 2; k < 10000000; ++k) {
        if (k * x >= k + 1) return k;
    }
    throw BudgetExceeded("gen_cycle_1d: x too close to 1");
}

AnnulusInstance gen_cycle_1d(double x) {
    if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("gen_cycle_1d: x must be > 1");
    std::vector<Point> pts;
    if (x >= 2.0) {
        pts = {{0.0}, {x}, {2.0 * x}, {x + 0.99}, {x - 0.99}};
    } else {
        const int k = cycle_1d_k(x);
        for (int i = 0; i <= k; ++i) pts.push_back({i * x});
        const double kk = k;
        for (int j = 1; j <= k; ++j) pts.push_back({(kk - j * kk / (kk + 1.0)) * x});
    }
    return AnnulusInstance::from_points(1, 1.0, x, std::move(pts));
}

double net_covering_radius_estimate(const std::vector<Point>& net, int d, std::size_t probes,
                                    std::uint64_t seed) {
    auto rng = make_rng(seed, 0x9E7Bu);
    double worst = 0.0;
    for (std::size_t p = 0; p < probes; ++p) {
        const Point q = random_unit_vector(d, rng);
        double best = -1.0;
        for (const auto& c : net) best = std::max(best, dot(q, c));
        worst = std::max(worst, std::acos(std::clamp(best, -1.0, 1.0)));
    }
    return worst;
}

AnnulusInstance gen_sphere_net(const SphereNetSpec& spec) {
    if (spec.d < 2) throw DomainError("gen_sphere_net: d must be >= 2");
    if (!(spec.x >= 1.0)) throw DomainError("gen_sphere_net: x must be >= 1");
    const int d = spec.d;
    std::vector<Point> pts;

    if (const auto* poisson = std::get_if<PoissonCloud>(&spec.method)) {
        if (!(poisson->lambda > 0.0)) throw DomainError("gen_sphere_net: lambda must be positive");
        auto rng = make_rng(spec.seed, 0x9015u);
        std::poisson_distribution<std::size_t> count(poisson->lambda * sphere_surface_area(d));
        const std::size_t n = count(rng);
        for (std::size_t i = 0; i < n; ++i) pts.push_back(random_unit_vector(d, rng));
        return AnnulusInstance::from_points(d, 2.0 / spec.x, 2.0, std::move(pts));
    }

    const double eps = std::get<GreedyNet>(spec.method).eps;
    if (!(eps > 0.0) || eps > kPi) throw DomainError("gen_sphere_net: eps must lie in (0, pi]");

    if (d == 2) {
        // maximal eps-separated set on the circle: uniform spacing <= eps
        const auto n = static_cast<int>(std::ceil(2.0 * kPi / eps - 1e-9));
        for (int k = 0; k < n; ++k) {
            const double a = 2.0 * kPi * k / n;
            pts.push_back({std::cos(a), std::sin(a)});
        }
    } else {
        // Farthest-point insertion over a dense candidate cloud, stopped early
        // enough that the gaps between candidates cannot open an eps hole.
        auto rng = make_rng(spec.seed, 0x4E7u);
        std::vector<Point> candidates;
        candidates.reserve(spec.candidates + 1);
        Point pole(static_cast<std::size_t>(d), 0.0);
        pole[0] = 1.0;
        candidates.push_back(pole);
        for (std::size_t i = 0; i < spec.candidates; ++i) candidates.push_back(random_unit_vector(d, rng));

        const double stop_cos = std::cos(0.7 * eps);
        std::vector<double> closest(candidates.size(), -2.0);
        std::size_t next = 0;
        while (true) {
            pts.push_back(candidates[next]);
            const Point& added = pts.back();
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                closest[i] = std::max(closest[i], dot(candidates[i], added));
            }
            next = static_cast<std::size_t>(std::min_element(closest.begin(), closest.end()) - closest.begin());
            if (closest[next] >= stop_cos) break;
        }
    }

    const double covering = net_covering_radius_estimate(pts, d, spec.probes, spec.seed);
    if (covering > eps) {
        throw VerificationFailure("gen_sphere_net: a probe lies farther than eps from the net");
    }
    return AnnulusInstance::from_points(d, 2.0 / spec.x, 2.0, std::move(pts));
}

AnnulusInstance gen_easy_lemma_instance(int d) {
    return AnnulusInstance::from_points(d, 1.0, 2.0, n_gamma_witness(d, 0.99));
}

AnnulusInstance gen_uniform_box(int d, std::size_t n, double side, double r1, double r2, std::uint64_t seed) {
    if (d < 1) throw DomainError("gen_uniform_box: d must be >= 1");
    if (!(side > 0.0)) throw DomainError("gen_uniform_box: side must be positive");
    auto rng = make_rng(seed, 0xB0Cu);
    std::uniform_real_distribution<double> unif(0.0, side);
    std::vector<Point> pts(n, Point(static_cast<std::size_t>(d)));
    for (auto& p : pts) {
        for (double& v : p) v = unif(rng);
    }
    return AnnulusInstance::from_points(d, r1, r2, std::move(pts));
}

} // namespace annulus
