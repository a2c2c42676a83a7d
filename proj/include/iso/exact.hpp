#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iso/coloring.hpp"
#include "iso/errors.hpp"
#include "iso/graph.hpp"
#include "iso/isolation.hpp"

namespace iso {

struct ExactOptions {
    std::uint64_t node_budget = 100'000'000;
};

struct ExactResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    bool budget_hit = false;  // always false on a completed solve
};

namespace detail {

// Minimum hitting set: find the smallest S hitting every requirement mask,
// optionally with S independent in g. Iterative deepening over the target
// size with a lexicographic DFS, so the first solution found at the smallest
// feasible size is the lexicographically least optimal witness. Prunes on
//   - remaining picks * best per-vertex coverage < uncovered requirements,
//   - some uncovered requirement has no hitter among the still-allowed ids.
// Both prunes only discard subtrees without solutions of the current size,
// which preserves the lex-first property.
inline ExactResult min_hitting_set(const Graph& g, const std::vector<VertexSet>& reqs,
                                   bool independent, std::uint64_t budget,
                                   std::optional<int> upper_bound_hint,
                                   const std::string& what) {
    const int n = g.order();
    const int nreq = static_cast<int>(reqs.size());
    ExactResult result;
    if (nreq == 0) {
        result.witness = VertexSet(n);
        return result;
    }

    std::vector<VertexSet> covers(n, VertexSet(nreq));  // requirement ids hit by v
    for (int j = 0; j < nreq; ++j)
        for (int v = reqs[j].next(0); v >= 0; v = reqs[j].next(v + 1)) covers[v].add(j);
    int max_cover = 0;
    for (int v = 0; v < n; ++v) max_cover = std::max(max_cover, covers[v].count());
    if (max_cover == 0)
        throw Error(errc::bad_parameter, what + ": unsatisfiable requirement");

    std::vector<VertexSet> suffix(n + 1, VertexSet(n));  // suffix[i] = {i..n-1}
    for (int i = n - 1; i >= 0; --i) {
        suffix[i] = suffix[i + 1];
        suffix[i].add(i);
    }

    std::uint64_t nodes = 0;
    std::vector<int> chosen;
    VertexSet blocked(n);  // neighbors of chosen, when independence is required

    std::function<bool(int, const VertexSet&, int)> dfs = [&](int next, const VertexSet& uncovered,
                                                              int remaining) -> bool {
        int uc = uncovered.count();
        if (uc == 0) return true;
        if (remaining == 0) return false;
        if ((uc + max_cover - 1) / max_cover > remaining) return false;

        VertexSet allowed = suffix[next];
        if (independent) allowed.subtract(blocked);
        for (int j = uncovered.next(0); j >= 0; j = uncovered.next(j + 1))
            if (!reqs[j].intersects(allowed)) return false;

        for (int v = allowed.next(next); v >= 0; v = allowed.next(v + 1)) {
            if (++nodes > budget)
                throw BudgetError(what + ": node budget exhausted", nodes, 0, upper_bound_hint);
            VertexSet rest = uncovered;
            rest.subtract(covers[v]);
            chosen.push_back(v);
            VertexSet saved_blocked = blocked;
            if (independent) blocked |= g.neighbor_set(v);
            if (dfs(v + 1, rest, remaining - 1)) return true;
            blocked = saved_blocked;
            chosen.pop_back();
        }
        return false;
    };

    VertexSet all(nreq);
    for (int j = 0; j < nreq; ++j) all.add(j);
    int lower = std::max(1, (nreq + max_cover - 1) / max_cover);
    for (int size = lower; size <= n; ++size) {
        chosen.clear();
        blocked = VertexSet(n);
        bool found;
        try {
            found = dfs(0, all, size);
        } catch (BudgetError& e) {
            // All sizes below `size` are exhausted.
            throw BudgetError(what + ": node budget exhausted", e.nodes, size - 1,
                              upper_bound_hint);
        }
        if (found) {
            result.value = static_cast<int>(chosen.size());
            result.witness = VertexSet(n);
            for (int v : chosen) result.witness.add(v);
            result.nodes_explored = nodes;
            return result;
        }
    }
    throw Error(errc::bad_parameter, what + ": no hitting set exists");
}

inline std::vector<VertexSet> edge_cover_requirements(const Graph& g) {
    std::vector<VertexSet> reqs;
    reqs.reserve(static_cast<std::size_t>(g.edge_count()));
    for (auto [u, v] : g.edges())
        reqs.push_back(g.closed_neighbor_set(u) | g.closed_neighbor_set(v));
    return reqs;
}

}  // namespace detail

/// Minimum independent isolating set.
inline ExactResult iota_independent(const Graph& g, const ExactOptions& opt = {}) {
    int ub = independent_dominating_set(g).count();
    return detail::min_hitting_set(g, detail::edge_cover_requirements(g), true,
                                   opt.node_budget, ub, "iota_independent");
}

/// Minimum isolating set (no independence constraint).
inline ExactResult iota(const Graph& g, const ExactOptions& opt = {}) {
    int ub = independent_dominating_set(g).count();
    return detail::min_hitting_set(g, detail::edge_cover_requirements(g), false,
                                   opt.node_budget, ub, "iota");
}

/// Minimum total dominating set: every vertex must have a neighbor inside.
inline ExactResult total_domination_number(const Graph& g, const ExactOptions& opt = {}) {
    std::vector<VertexSet> reqs;
    reqs.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0)
            throw Error(errc::isolated_vertex, "vertex " + std::to_string(v));
        reqs.push_back(g.neighbor_set(v));
    }
    return detail::min_hitting_set(g, reqs, false, opt.node_budget, g.order(),
                                   "total_domination_number");
}

namespace detail {

// Backtracking label assignment for k pairwise-disjoint independent
// isolating sets. Vertices take a class 0..k-1 or (unless a partition is
// required) stay out. For every edge e and class c, class c must eventually
// contain a vertex of N[u] union N[v]; the search propagates empty and
// singleton supports of these constraints to a fixpoint before branching.
// Classes are interchangeable, so branching tries used classes plus one
// fresh class only. Exhausting the search space is a proof of absence,
// distinct from running out of budget.
class DisjointSetsSearch {
public:
    DisjointSetsSearch(const Graph& g, int k, bool partition, std::uint64_t budget)
        : g_(g), k_(k), partition_(partition), budget_(budget), nreq_(0) {
        for (auto [u, v] : g.edges())
            cover_.push_back(g.closed_neighbor_set(u) | g.closed_neighbor_set(v));
        nreq_ = static_cast<int>(cover_.size());
    }

    std::optional<std::vector<VertexSet>> run() {
        State s;
        s.label.assign(g_.order(), kUnassigned);
        s.dom.assign(g_.order(), static_cast<std::uint32_t>((1u << k_) - 1));
        s.members.assign(k_, VertexSet(g_.order()));
        if (!propagate(s)) return std::nullopt;
        if (search(s)) {
            std::vector<VertexSet> out(solution_.begin(), solution_.end());
            return out;
        }
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    static constexpr int kUnassigned = -2;
    static constexpr int kNone = -1;

    struct State {
        std::vector<int> label;
        std::vector<std::uint32_t> dom;  // class bits still open per vertex
        std::vector<VertexSet> members;
    };

    bool assign(State& s, int v, int c) {
        if (++nodes_ > budget_)
            throw BudgetError("disjoint-sets search: node budget exhausted", nodes_, 0,
                              std::nullopt);
        s.label[v] = c;
        if (c >= 0) {
            if (!(s.dom[v] >> c & 1u)) return false;
            s.members[c].add(v);
            for (int u : g_.neighbors(v)) s.dom[u] &= ~(1u << c);
        }
        return true;
    }

    // Returns false on contradiction. Applies forced assignments to fixpoint.
    bool propagate(State& s) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g_.order(); ++v) {
                if (s.label[v] != kUnassigned) continue;
                if (s.dom[v] == 0) {
                    if (partition_) return false;
                    s.label[v] = kNone;  // cannot join any class
                }
            }
            for (int j = 0; j < nreq_; ++j) {
                for (int c = 0; c < k_; ++c) {
                    if (s.members[c].intersects(cover_[j])) continue;
                    int support = -1;
                    int count = 0;
                    for (int w = cover_[j].next(0); w >= 0 && count < 2;
                         w = cover_[j].next(w + 1)) {
                        if (s.label[w] == kUnassigned && (s.dom[w] >> c & 1u)) {
                            support = w;
                            ++count;
                        }
                    }
                    if (count == 0) return false;
                    if (count == 1) {
                        if (!assign(s, support, c)) return false;
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    bool search(State& s) {
        int v = -1;
        for (int i = 0; i < g_.order(); ++i)
            if (s.label[i] == kUnassigned) {
                v = i;
                break;
            }
        if (v < 0) return finish(s);

        for (int c = 0; c < k_; ++c) {
            bool fresh = s.members[c].empty();
            if (s.dom[v] >> c & 1u) {
                State child = s;
                if (assign(child, v, c) && propagate(child) && search(child)) return true;
            }
            if (fresh) break;  // further empty classes are symmetric
        }
        if (!partition_) {
            State child = s;
            child.label[v] = kNone;
            if (propagate(child) && search(child)) return true;
        }
        return false;
    }

    bool finish(State& s) {
        for (int j = 0; j < nreq_; ++j)
            for (int c = 0; c < k_; ++c)
                if (!s.members[c].intersects(cover_[j])) return false;
        solution_ = s.members;
        return true;
    }

    const Graph& g_;
    int k_;
    bool partition_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int nreq_;
    std::vector<VertexSet> cover_;
    std::vector<VertexSet> solution_;
};

}  // namespace detail

/// k pairwise-disjoint independent isolating sets (covering every vertex
/// when require_partition). nullopt means proven absent; running out of
/// budget raises BudgetError instead, so the two outcomes stay distinct.
inline std::optional<std::vector<VertexSet>> disjoint_independent_isolating_sets(
    const Graph& g, int k, bool require_partition, const ExactOptions& opt = {}) {
    if (k < 1) throw Error(errc::bad_parameter, "need k >= 1");
    detail::DisjointSetsSearch search(g, k, require_partition, opt.node_budget);
    auto result = search.run();
    if (result) {
        for (const auto& s : *result)
            if (!is_independent_isolating(g, s))
                throw Error(errc::bound_violated, "disjoint-sets witness failed verification");
        if (require_partition) {
            VertexSet all(g.order());
            for (const auto& s : *result) all |= s;
            if (all != VertexSet::full(g.order()))
                throw Error(errc::bound_violated, "claimed partition does not cover V");
        }
    }
    return result;
}

}  // namespace iso
