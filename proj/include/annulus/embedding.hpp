#pragma once

#include "annulus/graph.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace annulus {

inline constexpr double kFeasibilityTolerance = 1e-6;

/// One pairwise distance constraint between points u and v.
///   AtLeast: |p_u - p_v| >= lo
///   AtMost:  |p_u - p_v| <= hi
///   Outside: |p_u - p_v| not in [lo, hi]   (non-edges of an annulus graph)
struct PairConstraint {
    enum class Kind { AtLeast, AtMost, Outside };
    Kind kind = Kind::AtLeast;
    std::size_t u = 0;
    std::size_t v = 0;
    double lo = 0.0;
    double hi = 0.0;
    double weight = 1.0;
    double slack = 0.0;  // the penalty targets the constraint tightened by this much
};

/// Sum over constraints of weight * hinge(distance)^2, where the hinge is the
/// violation of the constraint tightened by its slack. The reported residual
/// is the unweighted maximum violation of the untightened constraints.
class PenaltyModel {
public:
    PenaltyModel(std::size_t points, int dim, std::vector<PairConstraint> constraints);

    std::size_t points() const { return points_; }
    int dim() const { return dim_; }
    std::size_t variables() const { return points_ * static_cast<std::size_t>(dim_); }
    const std::vector<PairConstraint>& constraints() const { return constraints_; }

    double value(const std::vector<double>& x) const;
    double value_and_gradient(const std::vector<double>& x, std::vector<double>& grad) const;

    double term_value(std::size_t i, const std::vector<double>& x) const;
    /// Adds the gradient of term i into `grad`.
    void add_term_gradient(std::size_t i, const std::vector<double>& x, std::vector<double>& grad) const;

    double violation(std::size_t i, const std::vector<double>& x) const;
    double residual(const std::vector<double>& x) const;

private:
    double distance(std::size_t i, const std::vector<double>& x) const;
    double hinge(const PairConstraint& c, double d, double& slope) const;

    std::size_t points_;
    int dim_;
    std::vector<PairConstraint> constraints_;
};

struct EmbedResult {
    std::vector<Point> coords;
    double residual = 0.0;
    std::vector<double> restart_stats;  // best residual of each restart, by index
    std::size_t best_restart = 0;

    bool is_witness() const { return residual < kFeasibilityTolerance; }
};

struct MinimizeOptions {
    int restarts = 20;
    int max_iters = 3000;
    std::uint64_t seed = 1;
    double init_half_width = 1.0;  // restarts start uniform in [-w, w]^d
    unsigned threads = 0;          // 0: hardware concurrency
};

/// Multi-start gradient descent on the penalty. Restart r draws its start from
/// make_rng(seed, r), so results do not depend on thread count.
EmbedResult minimize_penalty(const PenaltyModel& model, const MinimizeOptions& opts);

struct EmbedProblem {
    Graph graph;
    int d = 2;
    double r1 = 1.0;
    double r2 = 2.0;
    double margin = 0.1;  // unused by embed_search
    int restarts = 20;
    int max_iters = 3000;
    std::uint64_t seed = 1;
    std::size_t budget = 100;
};

/// Searches for coordinates whose (r1,r2)-annulus graph is the given graph.
/// A residual below kFeasibilityTolerance is a witness; anything above is
/// evidence only.
EmbedResult embed_search(const EmbedProblem& p);

PenaltyModel embedding_model(const Graph& g, int d, double r1, double r2);

/// `count` points in B(a,1) ∩ B(b,1), |a-b| >= 1+margin, pairwise >= 1+margin.
/// count = 0 picks 3 for d = 2 and |n_gamma_witness(d, gamma)| otherwise.
struct ThreePoints {
    int d = 2;
    std::size_t count = 0;
    double gamma = 0.99;
};

/// 2d+2 points in two parts of d+1: within-part distances >= 1+margin,
/// cross-part distances <= cross_limit.
struct BipartiteSphericity {
    int d = 1;
    double cross_limit = 1.0;
};

using ForbiddenConfig = std::variant<ThreePoints, BipartiteSphericity>;

struct ProbeOptions {
    double margin = 0.1;
    int restarts = 100;
    int max_iters = 3000;
    std::uint64_t seed = 1;
    double separation_weight = 1e3;  // separation constraints are near-hard
    unsigned threads = 0;
};

PenaltyModel forbidden_config_model(const ForbiddenConfig& kind, double margin, double separation_weight);

/// Minimises the violation of the configuration's closed constraints while the
/// margin-separated constraints are held (heavily weighted).
EmbedResult forbidden_config_residual(const ForbiddenConfig& kind, const ProbeOptions& opts);

} // namespace annulus
