#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "iso/vertex_set.hpp"

namespace iso {

/// Exact fraction for bound values; avoids any rounding dispute in reports.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    /// value <= num/den, by cross multiplication.
    bool admits(long long value) const { return value * den <= num; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

/// A claimed witness together with how it was produced and whether it
/// re-verified against the definitions. Reports must never carry an
/// unverified claim.
struct Certificate {
    VertexSet witness;              // the claimed independent isolating set
    std::vector<VertexSet> sets;    // the full family, when the method yields one
    Rational bound;                 // the applicable upper-bound value
    std::string method;             // which algorithm produced it
    bool verified = false;
};

}  // namespace iso
