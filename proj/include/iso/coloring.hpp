#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "iso/errors.hpp"
#include "iso/graph.hpp"

namespace iso {

/// Vertex coloring with colors 1..k; 0 marks an unassigned vertex. k is
/// carried explicitly so that "color k unused" is representable (the bad-edge
/// logic needs it).
struct Coloring {
    int k = 0;
    std::vector<int> color;

    Coloring() = default;
    Coloring(int k, std::vector<int> assignment) : k(k), color(std::move(assignment)) {}

    int n() const { return static_cast<int>(color.size()); }

    bool is_total() const {
        return std::all_of(color.begin(), color.end(), [](int c) { return c != 0; });
    }

    bool in_range() const {
        return k >= 1 && std::all_of(color.begin(), color.end(),
                                     [this](int c) { return c >= 0 && c <= k; });
    }

    bool is_proper(const Graph& g) const {
        for (auto [u, v] : g.edges())
            if (color[u] != 0 && color[u] == color[v]) return false;
        return true;
    }

    VertexSet color_class(int c) const {
        VertexSet s(n());
        for (int v = 0; v < n(); ++v)
            if (color[v] == c) s.add(v);
        return s;
    }

    int colors_used() const {
        int mx = 0;
        for (int c : color) mx = std::max(mx, c);
        return mx;
    }

    bool operator==(const Coloring& o) const { return k == o.k && color == o.color; }
};

/// Every vertex of class m has a neighbor in each class below m.
inline bool has_grundy_property(const Graph& g, const Coloring& c) {
    for (int v = 0; v < g.order(); ++v) {
        for (int j = 1; j < c.color[v]; ++j) {
            bool found = false;
            for (int u : g.neighbors(v))
                if (c.color[u] == j) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    }
    return true;
}

/// First-fit over ascending vertex ids: each vertex gets the smallest color
/// absent from its neighborhood. The result has the Grundy property.
inline Coloring greedy_grundy_coloring(const Graph& g) {
    int n = g.order();
    Coloring c(1, std::vector<int>(n, 0));
    for (int v = 0; v < n; ++v) {
        std::vector<char> used(n + 2, 0);
        for (int u : g.neighbors(v))
            if (u < v) used[c.color[u]] = 1;
        int col = 1;
        while (used[col]) ++col;
        c.color[v] = col;
        c.k = std::max(c.k, col);
    }
    if (n == 0) c.k = 1;
    return c;
}

/// Repair an arbitrary total proper coloring into one with the Grundy
/// property: sweep vertices in ascending id, moving any vertex that lacks a
/// neighbor in some lower class down into the smallest such class, until a
/// full pass makes no move. The sum of color indices strictly decreases per
/// move, so this terminates. Never uses more colors than the input.
inline Coloring grundify(const Graph& g, const Coloring& input) {
    if (!input.is_total() || !input.in_range() || !input.is_proper(g))
        throw Error(errc::improper_input, "grundify requires a total proper coloring");
    Coloring c = input;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < g.order(); ++v) {
            if (c.color[v] == 1) continue;
            std::vector<char> present(c.color[v], 0);
            for (int u : g.neighbors(v)) {
                int cu = c.color[u];
                if (cu < c.color[v]) present[cu] = 1;
            }
            for (int j = 1; j < c.color[v]; ++j) {
                if (!present[j]) {
                    c.color[v] = j;
                    moved = true;
                    break;
                }
            }
        }
    }
    c.k = std::max(1, c.colors_used());
    return c;
}

/// Greedy maximal independent set over ascending ids; maximal independent
/// means independent dominating.
inline VertexSet independent_dominating_set(const Graph& g) {
    int n = g.order();
    VertexSet s(n);
    VertexSet blocked(n);
    for (int v = 0; v < n; ++v) {
        if (blocked.contains(v)) continue;
        s.add(v);
        blocked |= g.closed_neighbor_set(v);
    }
    return s;
}

namespace detail {

/// DSATUR-style feasibility search: can g be properly colored with at most
/// k colors? Branches on the uncolored vertex with the most distinctly
/// colored neighbors (ties: higher degree, then lower id); palette is capped
/// at one more than the largest color used so far, which breaks color
/// symmetry. Counts decisions against *nodes.
inline bool try_k_coloring(const Graph& g, int k, std::vector<int>& color,
                           std::uint64_t budget, std::uint64_t* nodes) {
    int n = g.order();
    std::vector<std::vector<int>> neighbor_color_count(n, std::vector<int>(k + 1, 0));

    auto pick = [&]() -> int {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != 0) continue;
            int sat = 0;
            for (int c = 1; c <= k; ++c)
                if (neighbor_color_count[v][c] > 0) ++sat;
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = g.degree(v);
            }
        }
        return best;
    };

    int max_used = 0;
    std::function<bool(int)> rec = [&](int colored) -> bool {
        if (colored == n) return true;
        int v = pick();
        int cap = std::min(k, max_used + 1);
        for (int c = 1; c <= cap; ++c) {
            if (neighbor_color_count[v][c] > 0) continue;
            if (++*nodes > budget)
                throw BudgetError("k-coloring search", *nodes, 0, std::nullopt);
            color[v] = c;
            int prev_max = max_used;
            max_used = std::max(max_used, c);
            for (int u : g.neighbors(v)) ++neighbor_color_count[u][c];
            if (rec(colored + 1)) return true;
            for (int u : g.neighbors(v)) --neighbor_color_count[u][c];
            color[v] = 0;
            max_used = prev_max;
        }
        return false;
    };
    return rec(0);
}

inline int greedy_clique_lower_bound(const Graph& g) {
    // Grow a clique greedily from each vertex in degree order; cheap and
    // good enough to anchor the chromatic search at desk scale.
    int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b)
                                                                    : a < b; });
    int best = n > 0 ? 1 : 0;
    for (int s : order) {
        std::vector<int> clique{s};
        VertexSet common = g.neighbor_set(s);
        for (int v = common.next(0); v >= 0; v = common.next(v + 1)) {
            clique.push_back(v);
            common &= g.neighbor_set(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

}  // namespace detail

struct ChromaticOptions {
    std::uint64_t node_budget = 100'000'000;
};

/// Exact chromatic number by iterated k-feasibility between a greedy clique
/// lower bound and the first-fit upper bound.
inline int chromatic_number(const Graph& g, const ChromaticOptions& opt = {}) {
    int n = g.order();
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    int ub = greedy_grundy_coloring(g).colors_used();
    int lb = detail::greedy_clique_lower_bound(g);
    std::uint64_t nodes = 0;
    for (int k = lb; k < ub; ++k) {
        std::vector<int> color(n, 0);
        if (detail::try_k_coloring(g, k, color, opt.node_budget, &nodes)) return k;
    }
    return ub;
}

/// A proper k-coloring if one exists within budget, else nullopt.
inline std::optional<Coloring> find_k_coloring(const Graph& g, int k,
                                               const ChromaticOptions& opt = {}) {
    if (k < 1) throw Error(errc::bad_parameter, "k must be >= 1");
    std::vector<int> color(g.order(), 0);
    std::uint64_t nodes = 0;
    if (!detail::try_k_coloring(g, k, color, opt.node_budget, &nodes)) return std::nullopt;
    return Coloring(k, std::move(color));
}

}  // namespace iso
