#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace svmod {

/// Element of the monoid of almost-everywhere-zero maps Z_+ -> N.
/// Stored sparsely as (position, exponent) pairs, positions strictly
/// increasing, exponents strictly positive.
class MultiIndex {
public:
    using entry = std::pair<uint32_t, uint32_t>;

    MultiIndex() = default;

    static MultiIndex eps(uint32_t pos, uint32_t mult = 1) {
        MultiIndex m;
        if (pos == 0) throw std::invalid_argument("MultiIndex: positions start at 1");
        if (mult > 0) m.e_.emplace_back(pos, mult);
        return m;
    }

    bool is_zero() const { return e_.empty(); }
    const std::vector<entry>& entries() const { return e_; }

    uint32_t at(uint32_t pos) const {
        for (const auto& [p, v] : e_)
            if (p == pos) return v;
        return 0;
    }

    /// w(i) = sum_s s*i_s.
    uint64_t weight() const {
        uint64_t w = 0;
        for (const auto& [p, v] : e_) w += static_cast<uint64_t>(p) * v;
        return w;
    }

    /// Sum of all exponents.
    uint64_t total() const {
        uint64_t n = 0;
        for (const auto& [p, v] : e_) n += v;
        return n;
    }

    uint32_t min_pos() const {
        if (e_.empty()) throw std::domain_error("MultiIndex: zero element has no positions");
        return e_.front().first;
    }
    uint32_t max_pos() const {
        if (e_.empty()) throw std::domain_error("MultiIndex: zero element has no positions");
        return e_.back().first;
    }

    MultiIndex& bump(uint32_t pos, int32_t delta);

    MultiIndex plus(uint32_t pos, int32_t delta = 1) const {
        MultiIndex m = *this;
        m.bump(pos, delta);
        return m;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

private:
    std::vector<entry> e_;
};

/// i' = i - eps_p with p the largest nonzero position. Rejects the zero element.
MultiIndex prime_drop(const MultiIndex& i);
/// i'' = i - eps_q with q the smallest nonzero position. Rejects the zero element.
MultiIndex dprime_drop(const MultiIndex& i);

/// Lexicographical total order: j > i iff the largest differing position
/// carries the bigger exponent in j.
bool lex_gt(const MultiIndex& j, const MultiIndex& i);

/// Reverse lexicographical total order: j > i iff the smallest differing
/// position carries the bigger exponent in j.
bool revlex_succ(const MultiIndex& j, const MultiIndex& i);

/// The pair order behind the principal total orders: weight first, then
/// reverse lexicographic on equal weights.
std::strong_ordering weight_revlex_cmp(const MultiIndex& a, const MultiIndex& b);

struct TripleIndex {
    MultiIndex m, y, l;
    friend bool operator==(const TripleIndex& a, const TripleIndex& b) {
        return a.m == b.m && a.y == b.y && a.l == b.l;
    }
    bool all_zero() const { return m.is_zero() && y.is_zero() && l.is_zero(); }
    uint64_t total() const { return m.total() + y.total() + l.total(); }
    uint64_t weight() const { return m.weight() + y.weight() + l.weight(); }
};

struct PairIndex {
    MultiIndex w, l;
    friend bool operator==(const PairIndex& a, const PairIndex& b) { return a.w == b.w && a.l == b.l; }
    bool all_zero() const { return w.is_zero() && l.is_zero(); }
    uint64_t total() const { return w.total() + l.total(); }
    uint64_t weight() const { return w.weight() + l.weight(); }
};

/// Principal total order on M x M x M, comparing (l, w(l)) then (y, w(y))
/// under the weight-revlex pair order, then m lexicographically. Components
/// are named (m, y, l) after the monomial families whose exponents they hold;
/// the L slot carries the highest precedence.
std::strong_ordering principal_cmp_sv(const TripleIndex& a, const TripleIndex& b);

/// Principal total order on M x M: (l, w(l)) under weight-revlex, then w lex.
std::strong_ordering principal_cmp_w22(const PairIndex& a, const PairIndex& b);

/// Fixed-length exponent tuple for the quotient-module bases.
using FiniteTuple = std::vector<uint32_t>;

/// Position-1-first lexicographic order on equal-length tuples.
bool q_tuple_gt(const FiniteTuple& i, const FiniteTuple& j);

/// All multi-indices of the given weight (the partitions of w).
std::vector<MultiIndex> multi_indices_of_weight(uint32_t w);

std::string to_string(const MultiIndex& m);
std::string to_string(const TripleIndex& t);
std::string to_string(const PairIndex& p);

}  // namespace svmod
