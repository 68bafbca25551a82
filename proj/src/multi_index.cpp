#include "svmod/multi_index.hpp"

#include <algorithm>
#include <string>

namespace svmod {

MultiIndex& MultiIndex::bump(uint32_t pos, int32_t delta) {
    if (pos == 0) throw std::invalid_argument("MultiIndex: positions start at 1");
    if (delta == 0) return *this;
    auto it = std::lower_bound(e_.begin(), e_.end(), pos,
                               [](const entry& a, uint32_t p) { return a.first < p; });
    if (it != e_.end() && it->first == pos) {
        int64_t v = static_cast<int64_t>(it->second) + delta;
        if (v < 0) throw std::domain_error("MultiIndex: exponent would become negative");
        if (v == 0)
            e_.erase(it);
        else
            it->second = static_cast<uint32_t>(v);
    } else {
        if (delta < 0) throw std::domain_error("MultiIndex: exponent would become negative");
        e_.insert(it, {pos, static_cast<uint32_t>(delta)});
    }
    return *this;
}

MultiIndex prime_drop(const MultiIndex& i) {
    return i.plus(i.max_pos(), -1);
}

MultiIndex dprime_drop(const MultiIndex& i) {
    return i.plus(i.min_pos(), -1);
}

bool lex_gt(const MultiIndex& j, const MultiIndex& i) {
    // largest differing position decides; entries are sorted ascending
    auto jt = j.entries().rbegin(), je = j.entries().rend();
    auto it = i.entries().rbegin(), ie = i.entries().rend();
    while (jt != je || it != ie) {
        uint32_t jp = jt == je ? 0 : jt->first;
        uint32_t ip = it == ie ? 0 : it->first;
        if (jp > ip) return true;
        if (ip > jp) return false;
        if (jt->second != it->second) return jt->second > it->second;
        ++jt;
        ++it;
    }
    return false;
}

bool revlex_succ(const MultiIndex& j, const MultiIndex& i) {
    // smallest differing position decides
    auto jt = j.entries().begin(), je = j.entries().end();
    auto it = i.entries().begin(), ie = i.entries().end();
    while (jt != je || it != ie) {
        uint32_t jp = jt == je ? UINT32_MAX : jt->first;
        uint32_t ip = it == ie ? UINT32_MAX : it->first;
        if (jp < ip) return true;   // j has an entry where i has zero
        if (ip < jp) return false;  // i has an entry where j has zero
        if (jt->second != it->second) return jt->second > it->second;
        ++jt;
        ++it;
    }
    return false;
}

std::strong_ordering weight_revlex_cmp(const MultiIndex& a, const MultiIndex& b) {
    uint64_t wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa <=> wb;
    if (a == b) return std::strong_ordering::equal;
    return revlex_succ(a, b) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering principal_cmp_sv(const TripleIndex& a, const TripleIndex& b) {
    if (auto c = weight_revlex_cmp(a.l, b.l); c != 0) return c;
    if (auto c = weight_revlex_cmp(a.y, b.y); c != 0) return c;
    if (a.m == b.m) return std::strong_ordering::equal;
    return lex_gt(a.m, b.m) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering principal_cmp_w22(const PairIndex& a, const PairIndex& b) {
    if (auto c = weight_revlex_cmp(a.l, b.l); c != 0) return c;
    if (a.w == b.w) return std::strong_ordering::equal;
    return lex_gt(a.w, b.w) ? std::strong_ordering::greater : std::strong_ordering::less;
}

bool q_tuple_gt(const FiniteTuple& i, const FiniteTuple& j) {
    if (i.size() != j.size()) throw std::invalid_argument("q_tuple_gt: length mismatch");
    for (size_t s = 0; s < i.size(); ++s)
        if (i[s] != j[s]) return i[s] > j[s];
    return false;
}

namespace {
void partitions_rec(uint32_t remaining, uint32_t max_part, MultiIndex cur, std::vector<MultiIndex>& out) {
    if (remaining == 0) {
        out.push_back(std::move(cur));
        return;
    }
    for (uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
        MultiIndex next = cur;
        next.bump(part, 1);
        partitions_rec(remaining - part, part, std::move(next), out);
    }
}
}  // namespace

std::vector<MultiIndex> multi_indices_of_weight(uint32_t w) {
    std::vector<MultiIndex> out;
    partitions_rec(w, w == 0 ? 1 : w, MultiIndex(), out);
    return out;
}

std::string to_string(const MultiIndex& m) {
    if (m.is_zero()) return "0";
    std::string s;
    for (const auto& [p, v] : m.entries()) {
        if (!s.empty()) s += "+";
        if (v != 1) s += std::to_string(v) + "*";
        s += "e" + std::to_string(p);
    }
    return s;
}

std::string to_string(const TripleIndex& t) {
    return "(" + to_string(t.m) + ", " + to_string(t.y) + ", " + to_string(t.l) + ")";
}

std::string to_string(const PairIndex& p) {
    return "(" + to_string(p.w) + ", " + to_string(p.l) + ")";
}

}  // namespace svmod
