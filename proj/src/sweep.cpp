#include "annulus/sweep.hpp"

#include "annulus/error.hpp"
#include "annulus/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace annulus {

int SweepColoring::max_color() const { return annulus::max_color(colors); }

std::size_t SweepColoring::token_count() const {
    return std::set<std::size_t>(tokens.begin(), tokens.end()).size();
}

std::vector<std::size_t> sweep_order(const AnnulusInstance& inst) {
    std::vector<std::size_t> order(inst.size());
    std::iota(order.begin(), order.end(), 0);
    const auto last = static_cast<std::size_t>(inst.dim - 1);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Point& p = inst.points[a];
        const Point& q = inst.points[b];
        if (p[last] != q[last]) return p[last] < q[last];
        return std::lexicographical_compare(p.begin(), p.begin() + static_cast<long>(last), q.begin(),
                                            q.begin() + static_cast<long>(last));
    });
    return order;
}

SweepColoring sweep_color(const AnnulusInstance& inst, BuildOptions opts) {
    return sweep_color(inst, build_graph(inst, opts));
}

SweepColoring sweep_color(const AnnulusInstance& inst, const Graph& g) {
    inst.validate();
    if (g.size() != inst.size()) throw DomainError("sweep_color: graph and instance sizes differ");
    const std::size_t n = inst.size();
    SweepColoring out;
    out.order = sweep_order(inst);
    out.colors.assign(n, 0);
    out.tokens.assign(n, 0);

    const double reach = inst.r1 / 2.0;
    std::vector<std::size_t> batch;
    std::vector<bool> blocked;
    for (std::size_t v : out.order) {
        if (out.colors[v] != 0) continue;
        batch.assign(1, v);
        for (std::size_t u : out.order) {
            if (u == v || out.colors[u] != 0) continue;
            if (dist(inst.points[u], inst.points[v]) > reach) continue;
            const bool clash = std::any_of(batch.begin(), batch.end(),
                                           [&](std::size_t w) { return g.adjacent(u, w); });
            if (!clash) batch.push_back(u);
        }

        blocked.assign(n + 2, false);
        for (std::size_t member : batch) {
            for (std::size_t w : g.neighbors(member)) {
                const auto c = static_cast<std::size_t>(out.colors[w]);
                if (c != 0 && c < blocked.size()) blocked[c] = true;
            }
        }
        int colour = 1;
        while (blocked[static_cast<std::size_t>(colour)]) ++colour;
        for (std::size_t member : batch) {
            out.colors[member] = colour;
            out.tokens[member] = v;
        }
    }
    return out;
}

TokenReport verify_token_invariants(const AnnulusInstance& inst, const SweepColoring& col, BuildOptions opts) {
    TokenReport report;
    const std::size_t n = inst.size();
    auto fail = [&](std::string what) {
        report.ok = false;
        report.violations.push_back(std::move(what));
    };
    if (col.colors.size() != n || col.tokens.size() != n || col.order.size() != n) {
        fail("coverage: colouring does not cover every vertex");
        return report;
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (col.colors[v] <= 0) {
            fail("coverage: vertex " + std::to_string(v) + " has no colour");
            return report;
        }
        if (col.tokens[v] >= n) {
            fail("coverage: vertex " + std::to_string(v) + " has an invalid token");
            return report;
        }
    }

    const Graph g = build_graph(inst, opts);
    if (!is_proper(g, col.colors)) fail("proper: an edge is monochromatic");

    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[col.order[i]] = i;

    const double half = inst.r1 / 2.0;
    std::set<std::size_t> tokens;
    for (std::size_t u = 0; u < n; ++u) {
        const std::size_t t = col.tokens[u];
        tokens.insert(t);
        if (dist(inst.points[u], inst.points[t]) > half) {
            fail("token-distance: vertex " + std::to_string(u) + " is farther than r1/2 from its token");
        }
        if (col.colors[u] != col.colors[t]) {
            fail("token-colour: vertex " + std::to_string(u) + " differs in colour from its token");
        }
        if (position[t] > position[u]) {
            fail("token-order: token of vertex " + std::to_string(u) + " comes later in the sweep");
        }
        if (col.tokens[t] != t) {
            fail("token-order: token " + std::to_string(t) + " is not its own token");
        }
    }
    const std::vector<std::size_t> list(tokens.begin(), tokens.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
            if (dist(inst.points[list[i]], inst.points[list[j]]) > half) continue;
            // a later token may sit within r1/2 only if it was kept out of the
            // earlier batch for being adjacent to one of its members
            const bool i_first = position[list[i]] < position[list[j]];
            const std::size_t early = i_first ? list[i] : list[j];
            const std::size_t late = i_first ? list[j] : list[i];
            bool excluded = false;
            for (std::size_t u = 0; u < n && !excluded; ++u) {
                excluded = col.tokens[u] == early && g.adjacent(u, late);
            }
            if (!excluded) {
                fail("token-separation: tokens " + std::to_string(list[i]) + " and " + std::to_string(list[j]) +
                     " are within r1/2");
            }
        }
    }
    return report;
}

std::size_t colors_in_ball(const AnnulusInstance& inst, const SweepColoring& col, std::size_t center,
                           double radius) {
    if (center >= inst.size()) throw DomainError("colors_in_ball: centre is not a vertex");
    std::set<int> seen;
    for (std::size_t u = 0; u < inst.size(); ++u) {
        if (dist(inst.points[u], inst.points[center]) <= radius) seen.insert(col.colors[u]);
    }
    return seen.size();
}

} // namespace annulus
