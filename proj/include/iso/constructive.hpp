#pragma once

#include <array>
#include <utility>

#include "iso/certificate.hpp"
#include "iso/coloring.hpp"
#include "iso/errors.hpp"
#include "iso/graph.hpp"
#include "iso/isolation.hpp"

namespace iso {

/// Two disjoint independent isolating sets: X is a greedy maximal
/// independent set (hence independent dominating, hence isolating), and Y is
/// a greedy maximal independent set of g - X. Every edge has an end outside
/// X, and that end is in Y or adjacent to it, so Y isolates g as well.
inline std::pair<VertexSet, VertexSet> two_disjoint(const Graph& g) {
    int n = g.order();
    VertexSet x = independent_dominating_set(g);
    VertexSet y(n);
    VertexSet blocked = x;
    for (int v = 0; v < n; ++v) {
        if (blocked.contains(v)) continue;
        y.add(v);
        for (int u : g.neighbors(v))
            if (!x.contains(u)) blocked.add(u);
        blocked.add(v);
    }
    return {x, y};
}

/// The smaller of the two sets from two_disjoint (ties go to the first).
/// Size is at most half the graph's order.
inline VertexSet smaller_disjoint_half(const Graph& g) {
    auto [x, y] = two_disjoint(g);
    return y.count() < x.count() ? y : x;
}

/// Partition of a connected bipartite graph (n >= 3) into three independent
/// isolating sets: root at the smallest-id end-vertex if one exists (then no
/// neighbor of the root is an end-vertex), else at vertex 0, and split
/// vertices by BFS distance mod 3. Adjacent vertices sit in consecutive
/// layers, so each part is independent; every vertex either sees both a
/// nearer and a farther layer or is handled by the root choice, which makes
/// each part isolating. The smallest part has at most floor(n/3) vertices.
inline std::array<VertexSet, 3> bipartite_partition3(const Graph& g) {
    int n = g.order();
    if (n < 3) throw Error(errc::too_small, "need at least 3 vertices");
    if (!is_connected(g)) throw Error(errc::disconnected, "graph is not connected");
    if (!bipartition(g)) throw Error(errc::not_bipartite, "graph has an odd cycle");

    int root = end_vertices(g).next(0);
    if (root < 0) root = 0;
    BfsLayers layers = bfs_layers(g, root);
    std::array<VertexSet, 3> parts{VertexSet(n), VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v) parts[layers.dist[v] % 3].add(v);
    for (const auto& p : parts)
        if (!is_independent_isolating(g, p))
            throw Error(errc::bound_violated, "distance-layer class failed verification");
    return parts;
}

/// Certificate form of bipartite_partition3: the smallest class, bound n/3.
inline Certificate bipartite_bound(const Graph& g) {
    auto parts = bipartite_partition3(g);
    Certificate cert;
    cert.sets.assign(parts.begin(), parts.end());
    cert.witness = parts[0];
    for (const auto& p : parts)
        if (p.count() < cert.witness.count()) cert.witness = p;
    cert.bound = Rational(g.order(), 3);
    cert.method = "bipartite-layers";
    cert.verified = is_independent_isolating(g, cert.witness) && cert.bound.admits(cert.witness.count());
    if (!cert.verified)
        throw Error(errc::bound_violated, "bipartite class exceeded n/3");
    return cert;
}

}  // namespace iso
