#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "iso/certificate.hpp"
#include "iso/coloring.hpp"
#include "iso/errors.hpp"
#include "iso/graph.hpp"
#include "iso/isolation.hpp"

namespace iso {

// Rotation-sweep machinery for total proper 3-colorings. A bad edge is one
// whose missing color appears on no neighbor of either end. A sweep grows a
// region from the lower-colored end of a bad edge and cyclically decrements
// every color in the region; repeating this drives the coloring to one where
// all bad edges (if any) share a single vertex.

inline int next_color(int c) { return c % 3 + 1; }
inline int prev_color(int c) { return (c + 1) % 3 + 1; }

inline bool edge_is_bad(const Graph& g, const Coloring& c, int u, int v) {
    int missing = 6 - c.color[u] - c.color[v];
    for (int w : g.neighbors(u))
        if (c.color[w] == missing) return false;
    for (int w : g.neighbors(v))
        if (c.color[w] == missing) return false;
    return true;
}

inline std::vector<Edge> list_bad_edges(const Graph& g, const Coloring& c) {
    std::vector<Edge> out;
    for (auto [u, v] : g.edges())
        if (edge_is_bad(g, c, u, v)) out.emplace_back(u, v);
    return out;  // g.edges() is already lex sorted
}

/// One sweep out of a bad edge: the grown region, the root it grew from, and
/// the arcs recorded at each insertion.
struct SweepStep {
    Edge edge;                // (root, other) with color(other) = color(root)+1
    int root = -1;
    VertexSet region;         // every member is rotated by this sweep
    std::vector<Edge> arcs;   // (from, to), recorded when `to` joins the region
    int bad_edges_after = -1; // filled in by eliminate_bad_edges
};

/// Cyclic decrement (1->3, 3->2, 2->1) of exactly the vertices in s.
inline Coloring rotate(const Coloring& c, const VertexSet& s) {
    Coloring out = c;
    for (int v = s.next(0); v >= 0; v = s.next(v + 1)) {
        if (v >= c.n() || c.color[v] == 0)
            throw Error(errc::unassigned_vertex, "vertex " + std::to_string(v));
        if (c.color[v] > 3) throw Error(errc::improper_input, "rotation needs colors in 1..3");
        out.color[v] = prev_color(c.color[v]);
    }
    return out;
}

/// Grow the sweep region out of bad edge e. Starting from the lower-colored
/// end v, a vertex y joins when (i) it has a region neighbor in G-e, (ii)
/// every region neighbor has color c(y)-1, and (iii) every neighbor outside
/// the region has color c(y)+1. Candidates are scanned in ascending id until
/// a full pass adds nothing; the resulting region does not depend on the
/// scan order, but the arc list does, so the order is part of the contract.
inline SweepStep build_sweep(const Graph& g, const Coloring& c, Edge e) {
    if (c.n() != g.order() || !c.is_total() || c.k != 3 || !c.in_range() || !c.is_proper(g))
        throw Error(errc::improper_input, "need a total proper 3-coloring");
    auto [a, b] = e;
    if (!g.has_edge(a, b))
        throw Error(errc::bad_parameter,
                    "no edge " + std::to_string(a) + "-" + std::to_string(b));
    if (!edge_is_bad(g, c, a, b))
        throw Error(errc::not_bad_edge,
                    "edge " + std::to_string(a) + "-" + std::to_string(b) + " is good");

    SweepStep step;
    int v, w;
    if (c.color[b] == next_color(c.color[a])) {
        v = a;
        w = b;
    } else {
        v = b;
        w = a;
    }
    step.edge = {v, w};
    step.root = v;
    step.region = VertexSet(g.order());
    step.region.add(v);

    bool grew = true;
    while (grew) {
        grew = false;
        for (int y = 0; y < g.order(); ++y) {
            if (step.region.contains(y)) continue;
            bool has_region_neighbor = false;  // in G-e
            bool ok = true;
            for (int x : g.neighbors(y)) {
                bool via_e = (y == w && x == v) || (y == v && x == w);
                if (step.region.contains(x)) {
                    if (!via_e) has_region_neighbor = true;
                    if (c.color[x] != prev_color(c.color[y])) {
                        ok = false;
                        break;
                    }
                } else if (c.color[x] != next_color(c.color[y])) {
                    ok = false;
                    break;
                }
            }
            if (!ok || !has_region_neighbor) continue;
            for (int x : g.neighbors(y)) {
                bool via_e = (y == w && x == v) || (y == v && x == w);
                if (step.region.contains(x) && !via_e) step.arcs.emplace_back(x, y);
            }
            step.region.add(y);
            grew = true;
        }
    }
    return step;
}

struct SweepResult {
    Coloring coloring;             // final 3-coloring
    std::optional<int> pivot;      // set when a sweep region reached all of V
    std::vector<SweepStep> steps;
    std::array<VertexSet, 3> sets; // three independent isolating sets covering V
};

inline std::string format_trace(const std::vector<SweepStep>& steps) {
    std::ostringstream out;
    for (std::size_t i = 0; i < steps.size(); ++i)
        out << "sweep " << i + 1 << ": edge " << steps[i].edge.first << "-"
            << steps[i].edge.second << " |region| " << steps[i].region.count()
            << " bad-after " << steps[i].bad_edges_after << "\n";
    return out.str();
}

namespace detail {

inline void checked_sweep_asserts(const Graph& g, const Coloring& before, const Coloring& after,
                                  const SweepStep& step, const std::vector<SweepStep>& steps) {
    auto stall = [&](const std::string& msg) {
        throw StallError(msg, format_trace(steps));
    };
    if (!after.is_proper(g)) stall("coloring not proper after rotation");

    // Arc endpoints stay one color apart before the rotation.
    for (auto [x, y] : step.arcs)
        if (before.color[y] != next_color(before.color[x]))
            stall("arc violates ascending-color invariant");

    // Every region member with both an in- and an out-arc is fully dominated.
    VertexSet has_in(g.order()), has_out(g.order());
    for (auto [x, y] : step.arcs) {
        has_out.add(x);
        has_in.add(y);
    }
    VertexSet fully = fully_dominated_vertices(g, after);
    for (int x = 0; x < g.order(); ++x)
        if (has_in.contains(x) && has_out.contains(x) && !fully.contains(x))
            stall("interior region vertex not fully dominated");

    // Every outside vertex with a region neighbor is fully dominated, except
    // the far end of the swept edge when its only region neighbor is the
    // root (that adjacency is the one excluded from the growth rule).
    int v = step.edge.first, w = step.edge.second;
    for (int y = 0; y < g.order(); ++y) {
        if (step.region.contains(y)) continue;
        VertexSet rn = g.neighbor_set(y) & step.region;
        if (rn.empty()) continue;
        if (y == w && rn.count() == 1 && rn.contains(v)) continue;
        if (!fully.contains(y)) stall("region boundary vertex not fully dominated");
    }

    // Edges not incident to N[region] keep their bad/good status.
    VertexSet touched = closed_neighborhood(g, step.region);
    for (auto [p, q] : g.edges())
        if (!touched.contains(p) && !touched.contains(q))
            if (edge_is_bad(g, before, p, q) != edge_is_bad(g, after, p, q))
                stall("edge status changed outside the swept neighborhood");
}

}  // namespace detail

/// Repeated rotation-sweeps until no bad edge remains or one sweep region
/// covers all of V (then every remaining bad edge is incident to that
/// sweep's root, the pivot). Progress is guarded: the bad-edge count must
/// strictly drop between outer rounds, repeat sweeps out of the same edge
/// must either strictly shrink the region or strictly reduce the bad edges
/// incident to the first region's closed neighborhood, and the total sweep
/// count is capped at m*n. Any violation raises StallError with the trace
/// rather than looping.
///
/// The returned sets are the three color classes, with the pivot (when
/// present) also added to the class of the smallest color missing from its
/// closed neighborhood.
inline SweepResult eliminate_bad_edges(const Graph& g, const Coloring& input,
                                       bool checked = true) {
    if (g.order() < 3) throw Error(errc::too_small, "need at least 3 vertices");
    if (!is_connected(g)) throw Error(errc::disconnected, "graph is not connected");
    if (input.n() != g.order() || !input.is_total() || input.k != 3 || !input.in_range() ||
        !input.is_proper(g))
        throw Error(errc::improper_input, "need a total proper 3-coloring");

    SweepResult result;
    result.coloring = input;
    Coloring& c = result.coloring;
    const long sweep_cap = std::max<long>(1, g.edge_count() * std::max(1, g.order())) + 8;

    auto stall = [&](const std::string& msg) {
        throw StallError(msg, format_trace(result.steps));
    };

    while (true) {
        std::vector<Edge> bad = list_bad_edges(g, c);
        if (bad.empty()) break;
        const int before = static_cast<int>(bad.size());
        const Edge e = bad.front();

        std::optional<VertexSet> first_closed;  // N[region] of this round's first sweep
        std::optional<VertexSet> prev_region;
        int prev_root = -1;
        bool prev_had_root_neighborhood = false;
        int prev_incident = -1;
        bool reached_pivot = false;

        while (true) {
            if (static_cast<long>(result.steps.size()) >= sweep_cap)
                stall("sweep cap exceeded");
            if (!edge_is_bad(g, c, e.first, e.second)) {
                if (first_closed) {
                    for (auto [p, q] : list_bad_edges(g, c))
                        if (first_closed->contains(p) || first_closed->contains(q))
                            stall("swept edge resolved while incident bad edges remain");
                }
                break;
            }
            SweepStep step = build_sweep(g, c, e);
            if (prev_region && prev_had_root_neighborhood && step.root != prev_root)
                stall("root changed while the region held the root neighborhood");

            Coloring prev_coloring = c;
            c = rotate(c, step.region);
            if (checked) detail::checked_sweep_asserts(g, prev_coloring, c, step, result.steps);

            bool full = step.region == VertexSet::full(g.order());
            if (!first_closed) first_closed = closed_neighborhood(g, step.region);

            int incident = 0;
            for (auto [p, q] : list_bad_edges(g, c))
                if (first_closed->contains(p) || first_closed->contains(q)) ++incident;
            step.bad_edges_after = static_cast<int>(list_bad_edges(g, c).size());
            result.steps.push_back(step);

            if (full) {
                result.pivot = step.root;
                reached_pivot = true;
                break;
            }
            if (incident == 0) break;
            if (prev_region) {
                bool shrank = step.region.is_subset_of(*prev_region) &&
                              step.region != *prev_region;
                if (!shrank && !(incident < prev_incident))
                    stall("repeat sweep made no progress");
            }
            prev_region = step.region;
            prev_root = step.root;
            prev_had_root_neighborhood = g.neighbor_set(step.root).is_subset_of(step.region);
            prev_incident = incident;
        }
        if (reached_pivot) break;
        if (static_cast<int>(list_bad_edges(g, c).size()) >= before)
            stall("bad-edge count did not decrease");
    }

    for (int col = 1; col <= 3; ++col) result.sets[col - 1] = c.color_class(col);
    std::vector<Edge> remaining = list_bad_edges(g, c);
    if (result.pivot) {
        for (auto [p, q] : remaining)
            if (p != *result.pivot && q != *result.pivot)
                stall("leftover bad edge misses the pivot");
        std::array<bool, 4> present{};
        present[c.color[*result.pivot]] = true;
        for (int u : g.neighbors(*result.pivot)) present[c.color[u]] = true;
        for (int col = 1; col <= 3; ++col)
            if (!present[col]) {
                result.sets[col - 1].add(*result.pivot);
                break;
            }
    } else if (!remaining.empty()) {
        stall("bad edges remain without a pivot");
    }

    VertexSet covered(g.order());
    for (const auto& s : result.sets) {
        if (!is_independent_isolating(g, s)) stall("output class failed verification");
        covered |= s;
    }
    if (covered != VertexSet::full(g.order())) stall("output classes do not cover V");
    return result;
}

/// Smallest of the three sets produced by eliminate_bad_edges; at most
/// floor((n+1)/3) vertices. Computes a proper 3-coloring when none is given.
inline Certificate tripartite_bound(const Graph& g, std::optional<Coloring> coloring = {},
                                    bool checked = true) {
    if (g.order() < 3) throw Error(errc::too_small, "need at least 3 vertices");
    if (!is_connected(g)) throw Error(errc::disconnected, "graph is not connected");
    Coloring c3;
    if (coloring) {
        c3 = *coloring;
        if (c3.n() != g.order() || !c3.is_total() || !c3.in_range() || c3.colors_used() > 3 ||
            !c3.is_proper(g))
            throw Error(errc::improper_input, "need a total proper coloring on <= 3 colors");
        c3.k = 3;
    } else {
        auto found = find_k_coloring(g, 3);
        if (!found) throw Error(errc::not_three_colorable, "chromatic number exceeds 3");
        c3 = *found;
        c3.k = 3;
    }
    SweepResult swept = eliminate_bad_edges(g, c3, checked);
    Certificate cert;
    cert.sets.assign(swept.sets.begin(), swept.sets.end());
    cert.witness = swept.sets[0];
    for (const auto& s : swept.sets)
        if (s.count() < cert.witness.count()) cert.witness = s;
    cert.bound = Rational(g.order() + 1, 3);
    cert.method = "rotation-sweep";
    cert.verified =
        is_independent_isolating(g, cert.witness) && cert.bound.admits(cert.witness.count());
    if (!cert.verified) throw Error(errc::bound_violated, "sweep witness exceeded (n+1)/3");
    return cert;
}

}  // namespace iso
