#pragma once

#include "annulus/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace annulus {

struct SweepColoring {
    std::vector<int> colors;          // 1-based colour per vertex
    std::vector<std::size_t> tokens;  // t(u) per vertex
    std::vector<std::size_t> order;   // vertices by ascending last coordinate

    int max_color() const;
    std::size_t token_count() const;
};

/// Ascending last coordinate, ties broken lexicographically on the remaining
/// coordinates (then by index). Simulates a generic infinitesimal rotation.
std::vector<std::size_t> sweep_order(const AnnulusInstance& inst);

/// Sweep-hyperplane batch colouring. When the sweep meets an uncoloured vertex
/// v, every uncoloured vertex within r1/2 of v joins v's batch (in sweep order,
/// skipping vertices adjacent to a batch member) and the whole batch takes the
/// smallest colour not used by any coloured neighbour of the batch. With
/// r1 = 0 each batch is a singleton.
SweepColoring sweep_color(const AnnulusInstance& inst, BuildOptions opts = {});
SweepColoring sweep_color(const AnnulusInstance& inst, const Graph& g);

struct TokenReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks properness, |u - t(u)| <= r1/2, equal colours per token, token
/// precedes its batch in sweep order, and distinct tokens more than r1/2 apart
/// (a later token closer than that must be adjacent to the earlier batch).
TokenReport verify_token_invariants(const AnnulusInstance& inst, const SweepColoring& col,
                                    BuildOptions opts = {});

/// Number of distinct colours among vertices within `radius` of vertex `center`.
std::size_t colors_in_ball(const AnnulusInstance& inst, const SweepColoring& col, std::size_t center,
                           double radius);

} // namespace annulus
