#pragma once

#include "svmod/bracket.hpp"
#include "svmod/generator.hpp"
#include "svmod/lincomb.hpp"
#include "svmod/pbw.hpp"

#include <stdexcept>
#include <utility>

namespace svmod::detail {

/// A generator is FREE (lives in normal monomials at its canonical slot),
/// BOUNDARY (commutes rightward and lands on the base module), or CENTRAL
/// (replaced by a scalar immediately).
enum class GenClass : uint8_t { Free, Boundary, Central };

/// Base-key placeholder for engines whose vectors carry no deeper module.
struct Unit {
    friend bool operator<(const Unit&, const Unit&) { return false; }
    friend bool operator==(const Unit&, const Unit&) { return true; }
};

struct EngineLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxDepth = 200000;

/// Normal-ordering engine shared by the pure PBW rewriter and every module
/// action. A Universe policy provides:
///   using Key = ...;                          totally ordered base key
///   GenClass cls(const Generator&) const;
///   std::pair<int,int64_t> rank(const Generator&) const;   // for Free
///   Scalar central_scalar(const Generator&) const;
///   LinComb<Key> act_boundary(const Generator&, const Key&) const;
///
/// engine_act accumulates coeff * g * (mono (x) key) in normal form into out.
/// mono factors are ascending in the universe rank. Rewriting follows
/// x*y -> y*x + [x,y]; each bracket strictly shortens the word, which bounds
/// the recursion.
template <class U>
void engine_act(const U& u, const Generator& g, const Mono& mono,
                const typename U::Key& key, const Scalar& coeff,
                LinComb<std::pair<Mono, typename U::Key>>& out, int depth = 0) {
    using TermKey = std::pair<Mono, typename U::Key>;
    if (coeff.is_zero()) return;
    if (depth > kMaxDepth) throw EngineLimit("engine_act: recursion limit exceeded");

    switch (u.cls(g)) {
        case GenClass::Central: {
            out.add(TermKey(mono, key), coeff * u.central_scalar(g));
            return;
        }
        case GenClass::Free: {
            if (mono.empty() || u.rank(g) <= u.rank(mono.front().first)) {
                Mono m2 = mono;
                if (!m2.empty() && m2.front().first == g)
                    ++m2.front().second;
                else
                    m2.insert(m2.begin(), {g, 1});
                out.add(TermKey(std::move(m2), key), coeff);
                return;
            }
            break;
        }
        case GenClass::Boundary: {
            if (mono.empty()) {
                for (const auto& [k2, c2] : u.act_boundary(g, key))
                    out.add(TermKey(Mono{}, k2), coeff * c2);
                return;
            }
            break;
        }
    }

    // g must move right past the leading factor f: g f rest = f (g rest) + [g,f] rest
    const Generator f = mono.front().first;
    Mono rest = mono;
    if (rest.front().second > 1)
        --rest.front().second;
    else
        rest.erase(rest.begin());

    LinComb<TermKey> inner;
    engine_act(u, g, rest, key, Scalar(1), inner, depth + 1);
    for (const auto& [tk, c] : inner)
        engine_act(u, f, tk.first, tk.second, coeff * c, out, depth + 1);

    for (const auto& [h, ch] : lie_bracket(g, f))
        engine_act(u, h, rest, key, coeff * ch, out, depth + 1);
}

/// Applies g to every term of a vector.
template <class U>
LinComb<std::pair<Mono, typename U::Key>> engine_apply(
    const U& u, const Generator& g,
    const LinComb<std::pair<Mono, typename U::Key>>& v) {
    LinComb<std::pair<Mono, typename U::Key>> out;
    for (const auto& [tk, c] : v) engine_act(u, g, tk.first, tk.second, c, out);
    return out;
}

}  // namespace svmod::detail
