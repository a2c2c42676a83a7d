#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "iso/errors.hpp"
#include "iso/vertex_set.hpp"

namespace iso {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph. Vertex ids are 0..n-1, neighbor lists
/// are kept sorted, and a closed-neighborhood bitmask per vertex backs the
/// set-heavy algorithms.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, const std::vector<Edge>& edges) {
        if (n < 0) throw Error(errc::bad_parameter, "negative vertex count");
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, {});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n)
                throw Error(errc::vertex_out_of_range, "vertex " + std::to_string(u));
            if (v < 0 || v >= n)
                throw Error(errc::vertex_out_of_range, "vertex " + std::to_string(v));
            if (u == v) throw Error(errc::self_loop, "at vertex " + std::to_string(u));
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (int v = 0; v < n; ++v) {
            auto& a = g.adj_[v];
            std::sort(a.begin(), a.end());
            auto dup = std::adjacent_find(a.begin(), a.end());
            if (dup != a.end())
                throw Error(errc::duplicate_edge, "edge " + std::to_string(std::min(v, *dup)) +
                                                      " " + std::to_string(std::max(v, *dup)));
        }
        g.m_ = static_cast<long>(edges.size());
        g.nbr_.assign(n, VertexSet(n));
        g.closed_.assign(n, VertexSet(n));
        for (int v = 0; v < n; ++v) {
            for (int u : g.adj_[v]) g.nbr_[v].add(u);
            g.closed_[v] = g.nbr_[v];
            g.closed_[v].add(v);
        }
        return g;
    }

    int order() const { return n_; }
    long edge_count() const { return m_; }

    int degree(int v) const {
        check(v);
        return static_cast<int>(adj_[v].size());
    }

    const std::vector<int>& neighbors(int v) const {
        check(v);
        return adj_[v];
    }

    /// Open neighborhood N(v) as a bitmask.
    const VertexSet& neighbor_set(int v) const {
        check(v);
        return nbr_[v];
    }

    /// Closed neighborhood N[v].
    const VertexSet& closed_neighbor_set(int v) const {
        check(v);
        return closed_[v];
    }

    bool has_edge(int u, int v) const {
        check(u);
        return nbr_[u].contains(v);
    }

    /// All edges as (min, max) pairs in ascending order; this ordering is the
    /// canonical edge enumeration used by gadget construction and reports.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check(int v) const {
        if (v < 0 || v >= n_)
            throw Error(errc::vertex_out_of_range, "vertex " + std::to_string(v));
    }

    int n_ = 0;
    long m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> nbr_;
    std::vector<VertexSet> closed_;
};

struct BfsLayers {
    int root = 0;
    std::vector<int> dist;  // hops from root; valid only if every vertex reachable
};

inline bool is_connected(const Graph& g) {
    int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                q.push(u);
            }
    }
    return reached == n;
}

inline BfsLayers bfs_layers(const Graph& g, int root) {
    if (root < 0 || root >= g.order())
        throw Error(errc::vertex_out_of_range, "root " + std::to_string(root));
    BfsLayers out;
    out.root = root;
    out.dist.assign(g.order(), -1);
    out.dist[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v))
            if (out.dist[u] < 0) {
                out.dist[u] = out.dist[v] + 1;
                q.push(u);
            }
    }
    for (int v = 0; v < g.order(); ++v)
        if (out.dist[v] < 0)
            throw Error(errc::disconnected, "vertex " + std::to_string(v) + " unreachable from " +
                                                std::to_string(root));
    return out;
}

/// Two sides of a proper 2-coloring, or nullopt if some component is odd.
/// Per component the side containing its smallest vertex id is side A.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    int n = g.order();
    std::vector<int> side(n, -1);
    VertexSet a(n), b(n);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (side[u] < 0) {
                    side[u] = side[v] ^ 1;
                    q.push(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) (side[v] == 0 ? a : b).add(v);
    return std::make_pair(a, b);
}

inline VertexSet end_vertices(const Graph& g) {
    VertexSet s(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) s.add(v);
    return s;
}

/// Vertex sets of connected components, listed by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
    int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp(n);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.add(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    q.push(u);
                }
        }
        out.push_back(comp);
    }
    return out;
}

/// Induced subgraph on the given vertices plus the map new id -> old id
/// (old ids in ascending order).
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& verts) {
    std::vector<int> old_ids = verts.to_vector();
    std::vector<int> new_id(g.order(), -1);
    for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int u : old_ids)
        for (int v : g.neighbors(u))
            if (u < v && verts.contains(v)) edges.emplace_back(new_id[u], new_id[v]);
    return {Graph::from_edge_list(static_cast<int>(old_ids.size()), edges), old_ids};
}

}  // namespace iso
