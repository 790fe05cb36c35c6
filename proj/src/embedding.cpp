#include "annulus/embedding.hpp"

#include "annulus/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace annulus {

namespace {

using Kind = PairConstraint::Kind;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

struct RestartOutcome {
    std::vector<double> x;
    double residual = std::numeric_limits<double>::infinity();
};

// Gradient descent with Armijo backtracking; trial steps from the
// Barzilai-Borwein estimate of the previous iteration.
RestartOutcome descend(const PenaltyModel& model, std::vector<double> x, int max_iters) {
    const std::size_t n = x.size();
    std::vector<double> g(n), xn(n), gn(n);
    double f = model.value_and_gradient(x, g);
    double step = 1e-2;
    for (int it = 0; it < max_iters; ++it) {
        const double gg = dot(g, g);
        if (f < 1e-28 || gg < 1e-30) break;
        double t = step;
        double fn = 0.0;
        bool accepted = false;
        while (t > 1e-18) {
            for (std::size_t i = 0; i < n; ++i) xn[i] = x[i] - t * g[i];
            fn = model.value_and_gradient(xn, gn);
            if (fn <= f - 1e-4 * t * gg) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) break;
        double ss = 0.0;
        double sy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double s = xn[i] - x[i];
            ss += s * s;
            sy += s * (gn[i] - g[i]);
        }
        step = sy > 1e-300 ? ss / sy : 4.0 * t;
        step = std::clamp(step, 1e-10, 1e4);
        x.swap(xn);
        g.swap(gn);
        f = fn;
    }
    RestartOutcome out;
    out.residual = model.residual(x);
    out.x = std::move(x);
    return out;
}

std::vector<Point> unflatten(const std::vector<double>& x, std::size_t points, int dim) {
    std::vector<Point> out(points, Point(static_cast<std::size_t>(dim)));
    for (std::size_t p = 0; p < points; ++p) {
        for (int k = 0; k < dim; ++k) out[p][k] = x[p * dim + k];
    }
    return out;
}

} // namespace

// ── PenaltyModel ────────────────────────────────────────────────

PenaltyModel::PenaltyModel(std::size_t points, int dim, std::vector<PairConstraint> constraints)
    : points_(points), dim_(dim), constraints_(std::move(constraints)) {
    if (dim < 1) throw DomainError("penalty model: dim must be >= 1");
    for (const auto& c : constraints_) {
        if (c.u >= points_ || c.v >= points_ || c.u == c.v) throw DomainError("penalty model: bad point index");
    }
}

double PenaltyModel::distance(std::size_t i, const std::vector<double>& x) const {
    const auto& c = constraints_[i];
    double acc = 0.0;
    for (int k = 0; k < dim_; ++k) {
        const double diff = x[c.u * dim_ + k] - x[c.v * dim_ + k];
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

double PenaltyModel::hinge(const PairConstraint& c, double d, double& slope) const {
    slope = 0.0;
    switch (c.kind) {
    case Kind::AtLeast: {
        const double h = c.lo + c.slack - d;
        if (h <= 0.0) return 0.0;
        slope = -1.0;
        return h;
    }
    case Kind::AtMost: {
        const double h = d - (c.hi - c.slack);
        if (h <= 0.0) return 0.0;
        slope = 1.0;
        return h;
    }
    case Kind::Outside: {
        const double lo = c.lo - c.slack;
        const double hi = c.hi + c.slack;
        if (c.lo <= 0.0) {
            // nothing lies below a zero lower radius: push past hi
            if (d >= hi) return 0.0;
            slope = -1.0;
            return hi - d;
        }
        if (d <= lo || d >= hi) return 0.0;
        if (d - lo < hi - d) {
            slope = 1.0;
            return d - lo;
        }
        slope = -1.0;
        return hi - d;
    }
    }
    return 0.0;
}

double PenaltyModel::term_value(std::size_t i, const std::vector<double>& x) const {
    double slope = 0.0;
    const double h = hinge(constraints_[i], distance(i, x), slope);
    return constraints_[i].weight * h * h;
}

void PenaltyModel::add_term_gradient(std::size_t i, const std::vector<double>& x, std::vector<double>& grad) const {
    const auto& c = constraints_[i];
    const double d = distance(i, x);
    double slope = 0.0;
    const double h = hinge(c, d, slope);
    if (h == 0.0) return;
    const double coeff = 2.0 * c.weight * h * slope;
    if (d == 0.0) {
        // coincident points: use e_0 as the separating direction
        grad[c.u * dim_] += coeff;
        grad[c.v * dim_] -= coeff;
        return;
    }
    for (int k = 0; k < dim_; ++k) {
        const double unit = (x[c.u * dim_ + k] - x[c.v * dim_ + k]) / d;
        grad[c.u * dim_ + k] += coeff * unit;
        grad[c.v * dim_ + k] -= coeff * unit;
    }
}

double PenaltyModel::value(const std::vector<double>& x) const {
    double f = 0.0;
    for (std::size_t i = 0; i < constraints_.size(); ++i) f += term_value(i, x);
    return f;
}

double PenaltyModel::value_and_gradient(const std::vector<double>& x, std::vector<double>& grad) const {
    grad.assign(x.size(), 0.0);
    double f = 0.0;
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
        f += term_value(i, x);
        add_term_gradient(i, x, grad);
    }
    return f;
}

double PenaltyModel::violation(std::size_t i, const std::vector<double>& x) const {
    const auto& c = constraints_[i];
    const double d = distance(i, x);
    switch (c.kind) {
    case Kind::AtLeast:
        return std::max(0.0, c.lo - d);
    case Kind::AtMost:
        return std::max(0.0, d - c.hi);
    case Kind::Outside:
        if (d < c.lo || d > c.hi) return 0.0;
        return c.lo <= 0.0 ? c.hi - d : std::min(d - c.lo, c.hi - d);
    }
    return 0.0;
}

double PenaltyModel::residual(const std::vector<double>& x) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < constraints_.size(); ++i) worst = std::max(worst, violation(i, x));
    return worst;
}

// ── multi-start driver ──────────────────────────────────────────

EmbedResult minimize_penalty(const PenaltyModel& model, const MinimizeOptions& opts) {
    if (opts.restarts < 1) throw DomainError("minimize_penalty: need at least one restart");
    const auto restarts = static_cast<std::size_t>(opts.restarts);
    std::vector<RestartOutcome> outcomes(restarts);

    auto run = [&](std::size_t r) {
        auto rng = make_rng(opts.seed, r);
        std::uniform_real_distribution<double> unif(-opts.init_half_width, opts.init_half_width);
        std::vector<double> x(model.variables());
        for (double& v : x) v = unif(rng);
        outcomes[r] = descend(model, std::move(x), opts.max_iters);
    };

    unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(restarts));
    if (threads <= 1) {
        for (std::size_t r = 0; r < restarts; ++r) run(r);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t r = next++; r < restarts; r = next++) run(r);
            });
        }
    }

    EmbedResult out;
    out.restart_stats.reserve(restarts);
    for (std::size_t r = 0; r < restarts; ++r) {
        out.restart_stats.push_back(outcomes[r].residual);
        if (outcomes[r].residual < outcomes[out.best_restart].residual) out.best_restart = r;
    }
    out.residual = outcomes[out.best_restart].residual;
    out.coords = unflatten(outcomes[out.best_restart].x, model.points(), model.dim());
    return out;
}

// ── annulus embedding search ────────────────────────────────────

PenaltyModel embedding_model(const Graph& g, int d, double r1, double r2) {
    if (!(r2 > 0.0) || r1 < 0.0 || r2 < r1) throw DomainError("embed_search: need r2 >= r1 >= 0, r2 > 0");
    const double edge_slack = std::min(1e-3 * r2, (r2 - r1) / 4.0);
    const double gap_slack = 1e-3 * r2;
    std::vector<PairConstraint> cs;
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = u + 1; v < g.size(); ++v) {
            if (g.adjacent(u, v)) {
                if (r1 > 0.0) cs.push_back({Kind::AtLeast, u, v, r1, 0.0, 1.0, edge_slack});
                cs.push_back({Kind::AtMost, u, v, 0.0, r2, 1.0, edge_slack});
            } else {
                cs.push_back({Kind::Outside, u, v, r1, r2, 1.0, gap_slack});
            }
        }
    }
    return PenaltyModel(g.size(), d, std::move(cs));
}

EmbedResult embed_search(const EmbedProblem& p) {
    if (p.graph.size() > p.budget) {
        throw BudgetExceeded("embed_search: " + std::to_string(p.graph.size()) + " vertices exceeds budget " +
                             std::to_string(p.budget));
    }
    if (p.d < 1) throw DomainError("embed_search: d must be >= 1");
    if (p.graph.size() == 0) return {};
    const PenaltyModel model = embedding_model(p.graph, p.d, p.r1, p.r2);
    MinimizeOptions opts;
    opts.restarts = p.restarts;
    opts.max_iters = p.max_iters;
    opts.seed = p.seed;
    opts.init_half_width =
        p.r2 * (0.5 * std::pow(static_cast<double>(p.graph.size()), 1.0 / p.d) + 0.5);
    return minimize_penalty(model, opts);
}

// ── forbidden configurations ────────────────────────────────────

PenaltyModel forbidden_config_model(const ForbiddenConfig& kind, double margin, double separation_weight) {
    if (!(margin > 0.0)) {
        throw DomainError("forbidden_config_residual: margin must be positive (the zero-margin infimum is 0)");
    }
    constexpr double slack = 1e-5;
    const double apart = 1.0 + margin;
    std::vector<PairConstraint> cs;

    if (const auto* tp = std::get_if<ThreePoints>(&kind)) {
        if (tp->d < 2) throw DomainError("three-points probe: d must be >= 2");
        std::size_t count = tp->count;
        if (count == 0) count = tp->d == 2 ? 3 : n_gamma_witness(tp->d, tp->gamma).size();
        // point 0 = a, point 1 = b, points 2.. = the separated set
        cs.push_back({Kind::AtLeast, 0, 1, apart, 0.0, separation_weight, slack});
        for (std::size_t i = 2; i < count + 2; ++i) {
            cs.push_back({Kind::AtMost, i, 0, 0.0, 1.0, 1.0, slack});
            cs.push_back({Kind::AtMost, i, 1, 0.0, 1.0, 1.0, slack});
            for (std::size_t j = i + 1; j < count + 2; ++j) {
                cs.push_back({Kind::AtLeast, i, j, apart, 0.0, separation_weight, slack});
            }
        }
        return PenaltyModel(count + 2, tp->d, std::move(cs));
    }

    const auto& bs = std::get<BipartiteSphericity>(kind);
    if (bs.d < 1) throw DomainError("bipartite-sphericity probe: d must be >= 1");
    if (!(bs.cross_limit > 0.0)) throw DomainError("bipartite-sphericity probe: cross limit must be positive");
    const auto part = static_cast<std::size_t>(bs.d + 1);
    for (std::size_t i = 0; i < 2 * part; ++i) {
        for (std::size_t j = i + 1; j < 2 * part; ++j) {
            const bool same_part = (i < part) == (j < part);
            if (same_part) {
                cs.push_back({Kind::AtLeast, i, j, apart, 0.0, separation_weight, slack});
            } else {
                cs.push_back({Kind::AtMost, i, j, 0.0, bs.cross_limit, 1.0, slack});
            }
        }
    }
    return PenaltyModel(2 * part, bs.d, std::move(cs));
}

EmbedResult forbidden_config_residual(const ForbiddenConfig& kind, const ProbeOptions& opts) {
    const PenaltyModel model = forbidden_config_model(kind, opts.margin, opts.separation_weight);
    MinimizeOptions mo;
    mo.restarts = opts.restarts;
    mo.max_iters = opts.max_iters;
    mo.seed = opts.seed;
    mo.init_half_width = 1.5;
    mo.threads = opts.threads;
    return minimize_penalty(model, mo);
}

} // namespace annulus
