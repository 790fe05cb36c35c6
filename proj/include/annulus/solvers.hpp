#pragma once

#include "annulus/graph.hpp"

#include <cstddef>
#include <vector>

namespace annulus {

inline constexpr std::size_t kDefaultCliqueBudget = 200;
inline constexpr std::size_t kDefaultChromaticBudget = 80;

struct CliqueResult {
    std::size_t value = 0;
    std::vector<std::size_t> witness;  // sorted vertex indices
};

struct IndependentSetResult {
    std::size_t value = 0;
    std::vector<std::size_t> witness;
};

struct ColoringResult {
    std::size_t value = 0;
    std::vector<int> colors;  // 1-based, uses exactly 1..value
};

/// Exact maximum clique by colour-bounded branch and bound. Throws
/// BudgetExceeded when the graph has more than `budget` vertices.
CliqueResult max_clique(const Graph& g, std::size_t budget = kDefaultCliqueBudget);

/// Exact chromatic number: iterative deepening on k between the clique number
/// and a DSATUR upper bound, each step a DSATUR k-colourability search seeded
/// with the maximum clique.
ColoringResult chromatic_number(const Graph& g, std::size_t budget = kDefaultChromaticBudget);

/// Exact independence number via the maximum clique of the complement.
IndependentSetResult max_independent_set(const Graph& g, std::size_t budget = kDefaultCliqueBudget);

/// Greedy DSATUR colouring (no backtracking), 1-based colours.
std::vector<int> dsatur_coloring(const Graph& g);

/// True iff no edge is monochromatic. Throws DomainError if a vertex has no
/// colour (size mismatch or non-positive entry).
bool is_proper(const Graph& g, const std::vector<int>& colors);

int max_color(const std::vector<int>& colors);

} // namespace annulus
