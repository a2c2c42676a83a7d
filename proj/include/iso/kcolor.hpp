#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "iso/certificate.hpp"
#include "iso/coloring.hpp"
#include "iso/constructive.hpp"
#include "iso/errors.hpp"
#include "iso/graph.hpp"
#include "iso/isolation.hpp"
#include "iso/sweep.hpp"

namespace iso {

/// Bookkeeping behind the k-colorable bound. class_sizes come from the
/// grundified coloring; low_two_total is |A1| + |A2|; core_size is the order
/// of the union of the components of G[A1 u A2] with at least 3 vertices.
/// The three candidate sets are absent when the instance dispatched to a
/// <=3-color method.
struct KColorBoundStats {
    std::vector<int> class_sizes;
    int low_two_total = 0;
    int core_size = 0;

    std::optional<VertexSet> cand_low_class;  // smaller of the two lowest classes
    std::optional<VertexSet> cand_mid;        // best expansion of a class A_m, m >= 3
    int best_mid = -1;
    std::vector<int> mid_sizes;               // expansion sizes for m = 3..k
    std::optional<VertexSet> cand_core;       // bipartite-core expansion
};

struct KColorBoundResult {
    Certificate certificate;
    KColorBoundStats stats;
    int k = 0;  // colors used after grundify
};

namespace detail {

/// Map a set in an induced subgraph back to original vertex ids.
inline VertexSet map_back(const VertexSet& local, const std::vector<int>& old_ids, int n) {
    VertexSet out(n);
    for (int v = local.next(0); v >= 0; v = local.next(v + 1)) out.add(old_ids[v]);
    return out;
}

/// For every component of g - N[base] with at least one edge, add the
/// smaller of its two greedy disjoint halves.
inline VertexSet expand_over_remainder(const Graph& g, VertexSet base) {
    VertexSet rest = closed_neighborhood(g, base).complement();
    auto [sub, old_ids] = induced_subgraph(g, rest);
    for (const auto& comp : components(sub)) {
        if (comp.count() < 2) continue;
        auto [csub, cids] = induced_subgraph(sub, comp);
        if (csub.edge_count() == 0) continue;
        VertexSet half = smaller_disjoint_half(csub);
        base |= map_back(map_back(half, cids, sub.order()), old_ids, g.order());
    }
    return base;
}

}  // namespace detail

/// Constructive upper bound for a connected graph via a Grundy coloring on k
/// classes. For k <= 3 this falls through to the bipartite or rotation-sweep
/// bound. For k >= 4 it builds three candidates - the smaller of the two
/// lowest classes, the best single-class expansion, and the bipartite-core
/// expansion - and returns the smallest, which stays within (k+2)n/(2k+6).
inline KColorBoundResult k_colorable_bound(const Graph& g, std::optional<Coloring> coloring = {},
                                           bool checked = true) {
    int n = g.order();
    if (n < 3) throw Error(errc::too_small, "need at least 3 vertices");
    if (!is_connected(g)) throw Error(errc::disconnected, "graph is not connected");

    Coloring base;
    if (coloring) {
        base = *coloring;
        if (base.n() != n || !base.is_total() || !base.in_range() || !base.is_proper(g))
            throw Error(errc::improper_input, "need a total proper coloring");
    } else {
        base = greedy_grundy_coloring(g);
    }
    Coloring grundy = grundify(g, base);
    int k = grundy.colors_used();

    KColorBoundResult result;
    result.k = k;
    auto& stats = result.stats;
    for (int c = 1; c <= k; ++c) stats.class_sizes.push_back(grundy.color_class(c).count());

    VertexSet low = grundy.color_class(1) | grundy.color_class(2);
    stats.low_two_total = low.count();
    auto [h_sub, h_ids] = induced_subgraph(g, low);
    std::vector<VertexSet> core_components;  // components of the low subgraph, order >= 3
    for (const auto& comp : components(h_sub)) {
        if (comp.count() >= 3) {
            core_components.push_back(comp);
            stats.core_size += comp.count();
        }
    }

    if (k <= 2) {
        result.certificate = bipartite_bound(g);
        return result;
    }
    if (k == 3) {
        result.certificate = tripartite_bound(g, grundy, checked);
        return result;
    }

    // Claim candidates, k >= 4. Empty candidate sets are skipped rather than
    // treated as size-0 witnesses (an empty set does not isolate a graph
    // with edges).
    std::vector<std::pair<VertexSet, const char*>> candidates;

    VertexSet a1 = grundy.color_class(1), a2 = grundy.color_class(2);
    stats.cand_low_class = a2.count() < a1.count() ? a2 : a1;
    candidates.emplace_back(*stats.cand_low_class, "low-class");

    for (int m = 3; m <= k; ++m) {
        VertexSet jm = detail::expand_over_remainder(g, grundy.color_class(m));
        stats.mid_sizes.push_back(jm.count());
        if (!stats.cand_mid || jm.count() < stats.cand_mid->count()) {
            stats.cand_mid = jm;
            stats.best_mid = m;
        }
    }
    candidates.emplace_back(*stats.cand_mid, "mid-class-expansion");

    VertexSet core_seed(n);
    for (const auto& comp : core_components) {
        auto [csub, cids] = induced_subgraph(h_sub, comp);
        auto parts = bipartite_partition3(csub);
        VertexSet smallest = parts[0];
        for (const auto& p : parts)
            if (p.count() < smallest.count()) smallest = p;
        core_seed |= detail::map_back(detail::map_back(smallest, cids, h_sub.order()), h_ids, n);
    }
    stats.cand_core = detail::expand_over_remainder(g, core_seed);
    if (!stats.cand_core->empty())
        candidates.emplace_back(*stats.cand_core, "bipartite-core-expansion");

    const VertexSet* best = nullptr;
    const char* best_name = "";
    for (const auto& [set, name] : candidates) {
        if (set.empty()) continue;
        if (!best || set.count() < best->count()) {
            best = &set;
            best_name = name;
        }
    }
    if (!best) throw Error(errc::bound_violated, "no nonempty candidate produced");

    Certificate cert;
    cert.witness = *best;
    cert.method = std::string("grundy-") + best_name;
    cert.bound = Rational(static_cast<long long>(k + 2) * n, 2 * k + 6);
    cert.verified =
        is_independent_isolating(g, cert.witness) && cert.bound.admits(cert.witness.count());
    if (!cert.verified)
        throw Error(errc::bound_violated, "candidate " + std::string(best_name) +
                                              " of size " + std::to_string(best->count()) +
                                              " breaks (k+2)n/(2k+6) = " + cert.bound.str());
    result.certificate = cert;
    return result;
}

/// Cross-check the per-claim size bounds recorded in stats:
///   smaller low class        <= h/2
///   average class expansion  <= n/2 + (n - 2h + x) / (2k - 4)
///   core expansion           <= n/2 - x/6
/// and the smallest candidate <= (k+2)n/(2k+6).
/// All comparisons in integer cross-multiplied form. Absent candidates are
/// vacuously fine (the dispatched methods assert their own bounds).
inline bool verify_claim_bounds(const Graph& g, const KColorBoundStats& stats) {
    long long n = g.order();
    long long k = static_cast<long long>(stats.class_sizes.size());
    long long h = stats.low_two_total;
    long long x = stats.core_size;

    if (stats.cand_low_class && 2LL * stats.cand_low_class->count() > h) return false;

    if (!stats.mid_sizes.empty()) {
        long long total = 0;
        for (int s : stats.mid_sizes) total += s;
        // mean <= n/2 + (n - 2h + x)/(2k - 4)  <=>  2*total <= (k-2)*n + n - 2h + x
        if (2 * total > (k - 2) * n + n - 2 * h + x) return false;
    }

    if (stats.cand_core && 6LL * stats.cand_core->count() > 3 * n - x) return false;

    long long smallest = -1;
    for (const auto* cand : {&stats.cand_low_class, &stats.cand_mid, &stats.cand_core}) {
        if (!cand->has_value() || (*cand)->empty()) continue;
        long long sz = (*cand)->count();
        if (smallest < 0 || sz < smallest) smallest = sz;
    }
    if (smallest >= 0 && k >= 4 && smallest * (2 * k + 6) > (k + 2) * n) return false;
    return true;
}

}  // namespace iso
