#pragma once

#include <array>
#include <vector>

#include "iso/coloring.hpp"
#include "iso/graph.hpp"

namespace iso {

inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out(g.order());
    for (int v = s.next(0); v >= 0; v = s.next(v + 1)) out |= g.closed_neighbor_set(v);
    return out;
}

/// S is isolating iff deleting N[S] leaves no edge, i.e. every edge has an
/// endpoint inside N[S]. The empty set is isolating exactly on edgeless
/// graphs.
inline bool is_isolating(const Graph& g, const VertexSet& s) {
    VertexSet covered = closed_neighborhood(g, s);
    for (auto [u, v] : g.edges())
        if (!covered.contains(u) && !covered.contains(v)) return false;
    return true;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
    for (int v = s.next(0); v >= 0; v = s.next(v + 1))
        if (g.neighbor_set(v).intersects(s)) return false;
    return true;
}

inline bool is_independent_isolating(const Graph& g, const VertexSet& s) {
    return is_independent(g, s) && is_isolating(g, s);
}

/// Every vertex outside s has a neighbor in s, and s is independent.
inline bool is_independent_dominating(const Graph& g, const VertexSet& s) {
    if (!is_independent(g, s)) return false;
    VertexSet covered = closed_neighborhood(g, s);
    return covered == VertexSet::full(g.order());
}

/// Vertices whose closed neighborhood contains every color 1..k. Unassigned
/// vertices contribute no color.
inline VertexSet fully_dominated_vertices(const Graph& g, const Coloring& c) {
    if (!c.in_range() || c.n() != g.order())
        throw Error(errc::improper_input, "coloring does not fit the graph");
    VertexSet out(g.order());
    for (int v = 0; v < g.order(); ++v) {
        std::vector<char> present(c.k + 1, 0);
        present[c.color[v]] = 1;
        for (int u : g.neighbors(v)) present[c.color[u]] = 1;
        bool all = true;
        for (int col = 1; col <= c.k; ++col)
            if (!present[col]) {
                all = false;
                break;
            }
        if (all) out.add(v);
    }
    return out;
}

struct BadEdge {
    int u, v;           // u < v
    int missing_color;  // the color absent from {c(u), c(v)}
};

/// For a total proper 3-coloring: an edge is bad when its missing color
/// appears on no neighbor of either end; otherwise good. Class m is
/// isolating exactly when no bad edge misses m.
struct BadEdgeReport {
    std::vector<BadEdge> edges;              // canonical (min,max) ascending order
    std::array<bool, 3> class_isolating{};   // index by color-1
};

inline BadEdgeReport bad_edges(const Graph& g, const Coloring& c) {
    if (c.k != 3) throw Error(errc::wrong_k, "bad-edge analysis needs k=3");
    if (c.n() != g.order() || !c.is_total() || !c.in_range() || !c.is_proper(g))
        throw Error(errc::improper_input, "need a total proper 3-coloring");
    BadEdgeReport report;
    report.class_isolating = {true, true, true};
    for (auto [u, v] : g.edges()) {
        int missing = 6 - c.color[u] - c.color[v];
        bool found = false;
        for (int w : g.neighbors(u))
            if (c.color[w] == missing) {
                found = true;
                break;
            }
        if (!found)
            for (int w : g.neighbors(v))
                if (c.color[w] == missing) {
                    found = true;
                    break;
                }
        if (!found) {
            report.edges.push_back({u, v, missing});
            report.class_isolating[missing - 1] = false;
        }
    }
    return report;
}

/// Per color 1..k: is that color class an isolating set? (A color class of a
/// proper coloring is automatically independent.)
inline std::vector<bool> classes_are_isolating(const Graph& g, const Coloring& c) {
    if (c.n() != g.order() || !c.is_total() || !c.in_range() || !c.is_proper(g))
        throw Error(errc::improper_input, "need a total proper coloring");
    std::vector<bool> out;
    out.reserve(c.k);
    for (int col = 1; col <= c.k; ++col) out.push_back(is_isolating(g, c.color_class(col)));
    return out;
}

}  // namespace iso
