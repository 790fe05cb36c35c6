#include "annulus/solvers.hpp"

#include "annulus/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace annulus {

namespace {

// Fixed-width dynamic bitset over vertex indices.
class VertexSet {
public:
    explicit VertexSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
    void reset(std::size_t v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    std::size_t lowest() const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        }
        return static_cast<std::size_t>(-1);
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    void subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    }

private:
    std::vector<std::uint64_t> words_;
};

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : n_(g.size()) {
        rows_.reserve(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            VertexSet row(n_);
            for (std::size_t u : g.neighbors(v)) row.set(u);
            rows_.push_back(std::move(row));
        }
    }

    std::vector<std::size_t> run() {
        VertexSet all(n_);
        for (std::size_t v = 0; v < n_; ++v) all.set(v);
        std::vector<std::size_t> current;
        if (n_ > 0) expand(current, all);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    // Greedy colour classes in vertex order give an upper bound on the clique
    // size reachable from each prefix.
    void colour_sort(VertexSet pool, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
        std::size_t colour = 0;
        while (!pool.empty()) {
            ++colour;
            VertexSet q = pool;
            while (!q.empty()) {
                const std::size_t v = q.lowest();
                q.reset(v);
                pool.reset(v);
                q.subtract(rows_[v]);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
    }

    void expand(std::vector<std::size_t>& current, VertexSet pool) {
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        colour_sort(pool, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best_.size()) return;
            const std::size_t v = order[i];
            current.push_back(v);
            VertexSet next = pool;
            next &= rows_[v];
            if (next.empty()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
            pool.reset(v);
        }
    }

    std::size_t n_;
    std::vector<VertexSet> rows_;
    std::vector<std::size_t> best_;
};

class KColouring {
public:
    KColouring(const Graph& g, std::size_t k) : g_(g), k_(k), colour_(g.size(), -1),
                                                forbid_(g.size(), std::vector<int>(k, 0)),
                                                saturation_(g.size(), 0) {}

    bool solve(const std::vector<std::size_t>& clique) {
        if (clique.size() > k_) return false;
        int c = 0;
        for (std::size_t v : clique) assign(v, c++);
        used_ = clique.size();
        coloured_ = clique.size();
        return search();
    }

    std::vector<int> colours() const {
        std::vector<int> out(colour_.size());
        for (std::size_t v = 0; v < colour_.size(); ++v) out[v] = colour_[v] + 1;
        return out;
    }

private:
    void assign(std::size_t v, int c) {
        colour_[v] = c;
        for (std::size_t u : g_.neighbors(v)) {
            if (forbid_[u][c]++ == 0) ++saturation_[u];
        }
    }

    void unassign(std::size_t v) {
        const int c = colour_[v];
        colour_[v] = -1;
        for (std::size_t u : g_.neighbors(v)) {
            if (--forbid_[u][c] == 0) --saturation_[u];
        }
    }

    std::size_t pick() const {
        std::size_t best = g_.size();
        std::size_t best_sat = 0;
        std::size_t best_deg = 0;
        for (std::size_t v = 0; v < g_.size(); ++v) {
            if (colour_[v] >= 0) continue;
            std::size_t deg = 0;
            for (std::size_t u : g_.neighbors(v)) deg += colour_[u] < 0 ? 1 : 0;
            if (best == g_.size() || saturation_[v] > best_sat ||
                (saturation_[v] == best_sat && deg > best_deg)) {
                best = v;
                best_sat = saturation_[v];
                best_deg = deg;
            }
        }
        return best;
    }

    bool search() {
        if (coloured_ == g_.size()) return true;
        const std::size_t v = pick();
        if (saturation_[v] >= k_) return false;
        const std::size_t limit = std::min(k_, used_ + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (forbid_[v][c] != 0) continue;
            const std::size_t saved_used = used_;
            used_ = std::max(used_, c + 1);
            assign(v, static_cast<int>(c));
            ++coloured_;
            if (search()) return true;
            --coloured_;
            unassign(v);
            used_ = saved_used;
        }
        return false;
    }

    const Graph& g_;
    std::size_t k_;
    std::vector<int> colour_;
    std::vector<std::vector<int>> forbid_;
    std::vector<std::size_t> saturation_;
    std::size_t used_ = 0;
    std::size_t coloured_ = 0;
};

void check_budget(const Graph& g, std::size_t budget, const char* what) {
    if (g.size() > budget) {
        throw BudgetExceeded(std::string(what) + ": " + std::to_string(g.size()) +
                             " vertices exceeds budget " + std::to_string(budget));
    }
}

} // namespace

CliqueResult max_clique(const Graph& g, std::size_t budget) {
    check_budget(g, budget, "max_clique");
    CliqueResult out;
    out.witness = CliqueSearch(g).run();
    out.value = out.witness.size();
    return out;
}

IndependentSetResult max_independent_set(const Graph& g, std::size_t budget) {
    check_budget(g, budget, "max_independent_set");
    const CliqueResult c = max_clique(g.complement(), budget);
    return {c.value, c.witness};
}

std::vector<int> dsatur_coloring(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<int> colour(n, 0);
    std::vector<std::vector<bool>> seen(n);
    std::vector<std::size_t> saturation(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t v = n;
        for (std::size_t u = 0; u < n; ++u) {
            if (colour[u] != 0) continue;
            if (v == n || saturation[u] > saturation[v] ||
                (saturation[u] == saturation[v] && g.degree(u) > g.degree(v))) {
                v = u;
            }
        }
        int c = 1;
        while (static_cast<std::size_t>(c) < seen[v].size() && seen[v][c]) ++c;
        colour[v] = c;
        for (std::size_t u : g.neighbors(v)) {
            if (seen[u].size() <= static_cast<std::size_t>(c)) seen[u].resize(c + 1, false);
            if (!seen[u][c]) {
                seen[u][c] = true;
                ++saturation[u];
            }
        }
    }
    return colour;
}

ColoringResult chromatic_number(const Graph& g, std::size_t budget) {
    check_budget(g, budget, "chromatic_number");
    ColoringResult out;
    if (g.size() == 0) return out;

    const CliqueResult clique = max_clique(g, std::max(budget, g.size()));
    std::vector<int> upper = dsatur_coloring(g);
    const auto upper_k = static_cast<std::size_t>(max_color(upper));

    for (std::size_t k = clique.value; k < upper_k; ++k) {
        KColouring attempt(g, k);
        if (attempt.solve(clique.witness)) {
            out.value = k;
            out.colors = attempt.colours();
            return out;
        }
    }
    out.value = upper_k;
    out.colors = std::move(upper);
    return out;
}

bool is_proper(const Graph& g, const std::vector<int>& colors) {
    if (colors.size() != g.size()) throw DomainError("is_proper: colour assignment does not cover all vertices");
    for (int c : colors) {
        if (c <= 0) throw DomainError("is_proper: vertex without a colour");
    }
    for (auto [u, v] : g.edges()) {
        if (colors[u] == colors[v]) return false;
    }
    return true;
}

int max_color(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

} // namespace annulus
