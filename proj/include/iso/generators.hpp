#pragma once

#include <functional>
#include <string>
#include <vector>

#include "iso/errors.hpp"
#include "iso/graph.hpp"
#include "iso/rng.hpp"

namespace iso {

enum class GraphFamily { tree, bipartite, kpartite, gnp, triangulated_polygon };

inline const char* family_name(GraphFamily f) {
    switch (f) {
        case GraphFamily::tree: return "tree";
        case GraphFamily::bipartite: return "bipartite";
        case GraphFamily::kpartite: return "kpartite";
        case GraphFamily::gnp: return "gnp";
        case GraphFamily::triangulated_polygon: return "triangulated_polygon";
    }
    return "?";
}

inline GraphFamily family_from_name(const std::string& s) {
    if (s == "tree") return GraphFamily::tree;
    if (s == "bipartite") return GraphFamily::bipartite;
    if (s == "kpartite") return GraphFamily::kpartite;
    if (s == "gnp") return GraphFamily::gnp;
    if (s == "triangulated_polygon" || s == "triangulated") return GraphFamily::triangulated_polygon;
    throw Error(errc::bad_parameter, "unknown family '" + s + "'");
}

struct GenParams {
    int n = 0;                    // tree, gnp, triangulated_polygon
    double p = 0.5;               // cross-edge probability
    std::vector<int> part_sizes;  // bipartite (2 parts) / kpartite (>= 2 parts)
    bool connected = true;        // rejection-resample until connected
    int max_retries = 1000;
};

namespace detail {

inline Graph random_tree(int n, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.below_int(v), v);
    return Graph::from_edge_list(n, edges);
}

inline Graph random_partite(const std::vector<int>& sizes, double p, SplitMix64& rng) {
    int n = 0;
    std::vector<int> part;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        for (int j = 0; j < sizes[i]; ++j) part.push_back(static_cast<int>(i));
        n += sizes[i];
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[u] != part[v] && rng.chance(p)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline Graph random_gnp(int n, double p, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

/// Random triangulation of the n-gon 0..n-1: split recursively on a random
/// apex per base edge. Every maximal outerplanar graph on a fixed hull is
/// reachable; m = 2n - 3.
inline Graph random_triangulated_polygon(int n, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(std::min(v, (v + 1) % n),
                                                   std::max(v, (v + 1) % n));
    std::function<void(int, int)> split = [&](int a, int b) {
        if (b - a < 2) return;
        int apex = a + 1 + rng.below_int(b - a - 1);
        if (apex - a > 1) edges.emplace_back(a, apex);
        if (b - apex > 1) edges.emplace_back(apex, b);
        split(a, apex);
        split(apex, b);
    };
    split(0, n - 1);
    return Graph::from_edge_list(n, edges);
}

}  // namespace detail

/// Deterministic: identical (family, params, seed) gives an identical edge
/// list. Families that are not connected by construction are resampled from
/// the same stream until connected (when params.connected), up to
/// params.max_retries draws.
inline Graph gen_random(GraphFamily family, const GenParams& params, std::uint64_t seed) {
    SplitMix64 rng(seed);
    switch (family) {
        case GraphFamily::tree:
            if (params.n < 1) throw Error(errc::bad_parameter, "tree needs n >= 1");
            return detail::random_tree(params.n, rng);
        case GraphFamily::triangulated_polygon:
            if (params.n < 3) throw Error(errc::bad_parameter, "polygon needs n >= 3");
            return detail::random_triangulated_polygon(params.n, rng);
        case GraphFamily::bipartite:
        case GraphFamily::kpartite:
        case GraphFamily::gnp: {
            if (params.p < 0.0 || params.p > 1.0)
                throw Error(errc::bad_parameter, "p outside [0,1]");
            std::size_t want_parts = family == GraphFamily::bipartite ? 2 : 0;
            if (family != GraphFamily::gnp) {
                if (params.part_sizes.size() < 2 ||
                    (want_parts && params.part_sizes.size() != want_parts))
                    throw Error(errc::bad_parameter, "bad part sizes");
                for (int s : params.part_sizes)
                    if (s < 1) throw Error(errc::bad_parameter, "part sizes must be positive");
            } else if (params.n < 0) {
                throw Error(errc::bad_parameter, "gnp needs n >= 0");
            }
            for (int attempt = 0; attempt < std::max(1, params.max_retries); ++attempt) {
                Graph g = family == GraphFamily::gnp
                              ? detail::random_gnp(params.n, params.p, rng)
                              : detail::random_partite(params.part_sizes, params.p, rng);
                if (!params.connected || is_connected(g)) return g;
            }
            throw Error(errc::retries_exhausted,
                        std::string("no connected ") + family_name(family) + " sample in " +
                            std::to_string(params.max_retries) + " draws");
        }
    }
    throw Error(errc::bad_parameter, "unknown family");
}

/// All connected graphs on 1..max_n labeled vertices, by brute force over
/// edge subsets. No isomorphism reduction; intended for max_n <= 5.
inline std::vector<Graph> all_connected_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Edge> all_edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
        int m = static_cast<int>(all_edges.size());
        for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
            std::vector<Edge> edges;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1ULL) edges.push_back(all_edges[i]);
            Graph g = Graph::from_edge_list(n, edges);
            if (is_connected(g)) out.push_back(g);
        }
    }
    return out;
}

}  // namespace iso
