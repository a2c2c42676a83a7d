#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "iso/errors.hpp"

namespace iso {

/// Fixed-universe bitset over vertex ids 0..n-1. Also used for edge-index
/// sets inside the exact solvers. Iteration and to_vector always yield
/// ascending ids, which is what makes witnesses canonical.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

    VertexSet(int universe, std::initializer_list<int> ids) : VertexSet(universe) {
        for (int v : ids) add(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (std::size_t w = 0; w < s.bits_.size(); ++w) s.bits_[w] = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        return v >= 0 && v < n_ && (bits_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void add(int v) {
        check(v);
        bits_[v >> 6] |= 1ULL << (v & 63);
    }

    void remove(int v) {
        check(v);
        bits_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : bits_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : bits_) if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= o.bits_[w];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= o.bits_[w];
        return *this;
    }

    /// this \ o
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= ~o.bits_[w];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t w = 0; w < bits_.size(); ++w) s.bits_[w] = ~bits_[w];
        s.trim();
        return s;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & o.bits_[w]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & ~o.bits_[w]) return false;
        return true;
    }

    /// Smallest member >= from, or -1.
    int next(int from = 0) const {
        if (from < 0) from = 0;
        for (int w = from >> 6; w < static_cast<int>(bits_.size()); ++w) {
            std::uint64_t word = bits_[w];
            if (w == from >> 6) word &= ~0ULL << (from & 63);
            if (word) return (w << 6) + std::countr_zero(word);
        }
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// Order by ascending-id sequence; shorter prefix wins on tie.
    bool lex_less(const VertexSet& o) const {
        int a = next(0), b = o.next(0);
        while (a >= 0 && b >= 0) {
            if (a != b) return a < b;
            a = next(a + 1);
            b = o.next(b + 1);
        }
        return b >= 0;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int v = next(0); v >= 0; v = next(v + 1)) {
            if (!first) s += ", ";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_)
            throw Error(errc::vertex_out_of_range, "id " + std::to_string(v) +
                                                       " outside universe of size " +
                                                       std::to_string(n_));
    }

    void trim() {
        if (n_ % 64 && !bits_.empty()) bits_.back() &= (1ULL << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace iso
