#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iso/errors.hpp"
#include "iso/graph.hpp"

namespace iso {

/// Where the pieces of a hardness-gadget graph landed. Images are disjoint
/// and jointly exhaust the new vertex set: originals keep their ids, then
/// one adjacent pair per edge (in canonical edge order), then a trio of
/// leaves per vertex.
struct GadgetMap {
    std::vector<int> base_vertices;               // original id -> new id (identity)
    std::vector<std::pair<int, int>> pair_ids;    // per edge: the two attached vertices
    std::vector<std::array<int, 3>> trio_ids;     // per vertex: its three leaves
};

/// Parameter values known for a generated family, checked against the exact
/// solver wherever it is feasible.
struct KnownValues {
    std::optional<int> iota_independent;
    std::optional<int> iota;
    std::optional<VertexSet> witness;  // a set achieving the known value
    std::string source;
};

/// Hardness gadget: for each edge uv, two adjacent new vertices, one tied to
/// u and one to v; for each vertex w, three leaves on w. The result has
/// three disjoint independent isolating sets exactly when the base graph is
/// 4-colorable.
inline std::pair<Graph, GadgetMap> build_J(const Graph& g) {
    int n = g.order();
    auto base_edges = g.edges();
    int m = static_cast<int>(base_edges.size());
    int total = 4 * n + 2 * m;

    GadgetMap map;
    map.base_vertices.resize(n);
    for (int v = 0; v < n; ++v) map.base_vertices[v] = v;

    std::vector<Edge> edges = base_edges;
    int next = n;
    for (auto [u, v] : base_edges) {
        int p = next++, q = next++;
        map.pair_ids.emplace_back(p, q);
        edges.emplace_back(p, q);
        edges.emplace_back(u, p);
        edges.emplace_back(v, q);
    }
    for (int w = 0; w < n; ++w) {
        std::array<int, 3> trio{next, next + 1, next + 2};
        next += 3;
        map.trio_ids.push_back(trio);
        for (int leaf : trio) edges.emplace_back(w, leaf);
    }
    return {Graph::from_edge_list(total, edges), map};
}

/// Clone the neighborhood of x into a new vertex x' (nonadjacent to x) and
/// join x to x' by a path through two fresh vertices. New ids: x' = n,
/// then the path interior n+1 (next to x) and n+2 (next to x'). Raises the
/// minimum independent isolating set size by exactly one.
inline Graph operation_O(const Graph& g, int x) {
    int n = g.order();
    if (x < 0 || x >= n) throw Error(errc::vertex_out_of_range, "vertex " + std::to_string(x));
    int clone = n, mid1 = n + 1, mid2 = n + 2;
    std::vector<Edge> edges = g.edges();
    for (int u : g.neighbors(x)) edges.emplace_back(u, clone);
    edges.emplace_back(x, mid1);
    edges.emplace_back(mid1, mid2);
    edges.emplace_back(mid2, clone);
    return Graph::from_edge_list(n + 3, edges);
}

/// Clique K_r with r subdivided feet on every clique vertex. Order 2r^2 + r;
/// the minimum independent isolating set has r(r-1) + 1 vertices (one clique
/// vertex plus the subdivision vertex of every foot of the other clique
/// vertices, which is also the attached witness).
inline std::pair<Graph, KnownValues> gen_M(int r) {
    if (r < 2) throw Error(errc::bad_parameter, "need r >= 2");
    int n = r + 2 * r * r;
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) edges.emplace_back(i, j);
    auto sub_id = [&](int i, int j) { return r + 2 * (i * r + j); };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int s = sub_id(i, j), leaf = s + 1;
            edges.emplace_back(i, s);
            edges.emplace_back(s, leaf);
        }
    KnownValues known;
    known.iota_independent = r * (r - 1) + 1;
    known.source = "clique-with-subdivided-feet formula";
    VertexSet witness(n);
    witness.add(0);
    for (int i = 1; i < r; ++i)
        for (int j = 0; j < r; ++j) witness.add(sub_id(i, j));
    known.witness = witness;
    return {Graph::from_edge_list(n, edges), known};
}

/// Attach a pendant vertex to every vertex, then subdivide each pendant
/// edge. Order triples; for a connected base the minimum isolating set has
/// exactly one-third of the new order (the subdivision vertices witness it).
inline std::pair<Graph, KnownValues> gen_p2_corona(const Graph& g) {
    int n = g.order();
    std::vector<Edge> edges = g.edges();
    VertexSet witness(3 * n);
    for (int v = 0; v < n; ++v) {
        int s = n + 2 * v, leaf = s + 1;
        edges.emplace_back(v, s);
        edges.emplace_back(s, leaf);
        witness.add(s);
    }
    KnownValues known;
    if (is_connected(g) && n > 0) {
        known.iota = n;
        known.witness = witness;
        known.source = "corona one-third-order formula";
    }
    return {Graph::from_edge_list(3 * n, edges), known};
}

/// Jewel graph: K2, then the neighborhood-clone operation applied m-1 times
/// along a chain. Order 3m - 1, minimum independent isolating set size m.
/// Vertex layout per step i (1-based): clone 3i-1, chain interior 3i
/// (the next operation target) and 3i+1 (joins the witness).
inline std::pair<Graph, KnownValues> gen_jewel(int m) {
    if (m < 1) throw Error(errc::bad_parameter, "need m >= 1");
    Graph g = Graph::from_edge_list(2, {{0, 1}});
    VertexSet witness(3 * m - 1);
    witness.add(0);
    int target = 0;
    for (int i = 1; i < m; ++i) {
        g = operation_O(g, target);
        target = g.order() - 2;       // the path vertex adjacent to the old target
        witness.add(g.order() - 1);   // the path vertex adjacent to the clone
    }
    KnownValues known;
    known.iota_independent = m;
    known.witness = witness;
    known.source = "one-per-clone-operation formula";
    return {g, known};
}

}  // namespace iso
