#pragma once

#include "svmod/scalar.hpp"

#include <map>
#include <utility>

namespace svmod {

/// Finite linear combination over a totally ordered key type.
/// Canonical form is maintained at all times: no stored coefficient is zero,
/// so two combinations are equal iff their term maps are identical.
template <class K>
class LinComb {
public:
    using map_type = std::map<K, Scalar>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;

    static LinComb single(K k, Scalar c) {
        LinComb v;
        v.add(std::move(k), std::move(c));
        return v;
    }

    void add(const K& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    LinComb& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Scalar& s) { return a *= s; }
    friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
    LinComb operator-() const {
        LinComb r(*this);
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    bool zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    /// Coefficient of k (zero if absent).
    Scalar coeff(const K& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

private:
    map_type terms_;
};

/// Strips zero entries from a raw term map; idempotent. LinComb values built
/// through the public interface are already canonical.
template <class K>
LinComb<K> lincomb_canonicalize(const typename LinComb<K>::map_type& raw) {
    LinComb<K> v;
    for (const auto& [k, c] : raw) v.add(k, c);
    return v;
}

}  // namespace svmod
