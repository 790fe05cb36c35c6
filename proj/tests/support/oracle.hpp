#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// library's graph construction or solvers.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

struct SmallGraph {
    std::size_t n = 0;
    std::vector<std::uint32_t> adj;  // bit rows, n <= 20

    explicit SmallGraph(std::size_t n_) : n(n_), adj(n_, 0) {}

    void add(std::size_t u, std::size_t v) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    bool has(std::size_t u, std::size_t v) const { return (adj[u] >> v) & 1u; }

    Edges edges() const {
        Edges out;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                if (has(u, v)) out.emplace_back(u, v);
            }
        }
        return out;
    }
};

inline SmallGraph from_edges(std::size_t n, const Edges& edges) {
    SmallGraph g(n);
    for (auto [u, v] : edges) g.add(u, v);
    return g;
}

inline SmallGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    SmallGraph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add(u, v);
        }
    }
    return g;
}

inline bool is_clique(const SmallGraph& g, std::uint32_t mask) {
    for (std::size_t u = 0; u < g.n; ++u) {
        if (((mask >> u) & 1u) && (mask & ~(1u << u) & ~g.adj[u])) return false;
    }
    return true;
}

inline bool is_independent(const SmallGraph& g, std::uint32_t mask) {
    for (std::size_t u = 0; u < g.n; ++u) {
        if (((mask >> u) & 1u) && (mask & g.adj[u])) return false;
    }
    return true;
}

inline std::size_t omega(const SmallGraph& g) {
    std::size_t best = 0;
    for (std::uint32_t m = 0; m < (1u << g.n); ++m) {
        if (is_clique(g, m)) best = std::max<std::size_t>(best, std::popcount(m));
    }
    return best;
}

inline std::size_t alpha(const SmallGraph& g) {
    std::size_t best = 0;
    for (std::uint32_t m = 0; m < (1u << g.n); ++m) {
        if (is_independent(g, m)) best = std::max<std::size_t>(best, std::popcount(m));
    }
    return best;
}

// Minimum number of independent sets covering the vertex set, by DP over subsets.
inline std::size_t chi(const SmallGraph& g) {
    if (g.n == 0) return 0;
    const std::uint32_t full = (1u << g.n) - 1;
    std::vector<std::uint8_t> best(full + 1, 0xff);
    best[0] = 0;
    for (std::uint32_t m = 1; m <= full; ++m) {
        const std::uint32_t low = m & (~m + 1);
        for (std::uint32_t s = m; s; s = (s - 1) & m) {
            if ((s & low) && is_independent(g, s)) {
                best[m] = std::min<std::uint8_t>(best[m], static_cast<std::uint8_t>(best[m ^ s] + 1));
            }
        }
    }
    return best[full];
}

// Annulus adjacency from coordinates, straight from the definition.
inline Edges annulus_edges(const std::vector<std::vector<double>>& pts, double r1, double r2, double tol = 1e-9) {
    Edges out;
    for (std::size_t u = 0; u < pts.size(); ++u) {
        for (std::size_t v = u + 1; v < pts.size(); ++v) {
            long double s = 0.0L;
            for (std::size_t k = 0; k < pts[u].size(); ++k) {
                const long double t = static_cast<long double>(pts[u][k]) - pts[v][k];
                s += t * t;
            }
            const long double d = std::sqrt(s);
            if (d >= r1 - tol && d <= r2 + tol) out.emplace_back(u, v);
        }
    }
    return out;
}

// Annulus adjacency on a lattice with spacing p/q and radii (1, xn/xd), all in
// integers: edge iff q^2 <= p^2 |k|^2 and p^2 xd^2 |k|^2 <= xn^2 q^2.
inline Edges lattice_edges(const std::vector<std::vector<std::int64_t>>& coords, std::int64_t p, std::int64_t q,
                           std::int64_t xn, std::int64_t xd) {
    Edges out;
    for (std::size_t u = 0; u < coords.size(); ++u) {
        for (std::size_t v = u + 1; v < coords.size(); ++v) {
            __int128 s = 0;
            for (std::size_t k = 0; k < coords[u].size(); ++k) {
                const __int128 t = coords[u][k] - coords[v][k];
                s += t * t;
            }
            const __int128 lhs = static_cast<__int128>(p) * p * s;
            if (static_cast<__int128>(q) * q <= lhs &&
                lhs * xd * xd <= static_cast<__int128>(xn) * xn * q * q) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

} // namespace oracle
