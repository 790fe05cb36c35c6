#pragma once

#include "annulus/geometry.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace annulus {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "3/10", "0.3", "2", "-1.25e-3" into an exact rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

enum class ArithmeticMode { Float, ExactInteger };

std::string to_string(ArithmeticMode mode);
ArithmeticMode parse_mode(const std::string& text);

/// Integer lattice coordinates together with the rational spacing that maps
/// them to Euclidean positions.
struct ExactLattice {
    Rational scale;
    std::vector<std::vector<std::int64_t>> coords;
};

struct AnnulusInstance {
    int dim = 1;
    double r1 = 0.0;
    double r2 = 1.0;
    std::vector<Point> points;
    ArithmeticMode mode = ArithmeticMode::Float;
    std::optional<ExactLattice> lattice;  // set iff mode == ExactInteger

    std::size_t size() const { return points.size(); }

    /// Throws DomainError when any type invariant fails.
    void validate() const;

    static AnnulusInstance from_points(int dim, double r1, double r2, std::vector<Point> points);
    static AnnulusInstance from_lattice(int dim, double r1, double r2, Rational scale,
                                        std::vector<std::vector<std::int64_t>> coords);
};

/// Simple undirected graph: sorted adjacency lists plus dense bit rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t size() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const;
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].size(); }

    /// Lexicographically sorted (u < v) edge list.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    Graph complement() const;

    bool operator==(const Graph& other) const;

    static Graph complete(std::size_t n);
    static Graph cycle(std::size_t n);

private:
    std::size_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::vector<bool>> matrix_;
};

struct BuildOptions {
    double tolerance = 1e-9;
    bool strict_boundaries = false;
};

/// Edge (u,v) iff r1 <= |p_u - p_v| <= r2. Float mode widens the interval by
/// the tolerance; exact mode compares squared distances as rationals.
Graph build_graph(const AnnulusInstance& inst, BuildOptions opts = {});

/// Number of pairs whose distance lies within `tolerance` of r1 or r2 (float
/// mode); always 0 in exact mode.
std::size_t count_boundary_pairs(const AnnulusInstance& inst, double tolerance);

} // namespace annulus
