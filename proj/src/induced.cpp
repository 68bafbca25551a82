#include "svmod/induced.hpp"

#include "svmod/engine.hpp"
#include "svmod/linalg.hpp"
#include "svmod/pbw.hpp"

#include <algorithm>
#include <map>

namespace svmod {

namespace {

struct IndUniverse {
    using Key = BaseKey;
    const BaseModule* V;
    int d1, d2e;

    detail::GenClass cls(const Generator& g) const {
        switch (g.fam) {
            case Family::C: return detail::GenClass::Central;
            case Family::M: return g.index <= -d1 - 1 ? detail::GenClass::Free : detail::GenClass::Boundary;
            case Family::Y: return g.index <= -d2e - 1 ? detail::GenClass::Free : detail::GenClass::Boundary;
            case Family::L: return g.index <= -1 ? detail::GenClass::Free : detail::GenClass::Boundary;
            default: throw std::invalid_argument("act: W family in SV module");
        }
    }
    std::pair<int, int64_t> rank(const Generator& g) const { return gen_rank(g, GenOrder::SvInd); }
    Scalar central_scalar(const Generator&) const { return V->params().c; }
    LinComb<Key> act_boundary(const Generator& g, const Key& k) const { return V->act_sub(g, k); }
};

Mono ind_decode(const IndUniverse& u, const TripleIndex& t) {
    Mono m;
    const auto& me = t.m.entries();
    for (auto it = me.rbegin(); it != me.rend(); ++it)
        m.push_back({Generator::M(-u.d1 - static_cast<int>(it->first)), it->second});
    const auto& ye = t.y.entries();
    for (auto it = ye.rbegin(); it != ye.rend(); ++it)
        m.push_back({Generator::Y(-u.d2e - static_cast<int>(it->first)), it->second});
    const auto& le = t.l.entries();
    for (auto it = le.rbegin(); it != le.rend(); ++it)
        m.push_back({Generator::L(-static_cast<int>(it->first)), it->second});
    return m;
}

TripleIndex ind_encode(const IndUniverse& u, const Mono& m) {
    TripleIndex t;
    for (const auto& [g, e] : m) {
        switch (g.fam) {
            case Family::M: t.m.bump(static_cast<uint32_t>(-g.index - u.d1), static_cast<int32_t>(e)); break;
            case Family::Y: t.y.bump(static_cast<uint32_t>(-g.index - u.d2e), static_cast<int32_t>(e)); break;
            case Family::L: t.l.bump(static_cast<uint32_t>(-g.index), static_cast<int32_t>(e)); break;
            default: throw invariant_violation("ind_encode: central factor in a module monomial");
        }
    }
    return t;
}

IndUniverse universe_of(const BaseModule& V) {
    return IndUniverse{&V, static_cast<int>(V.params().d1), static_cast<int>(V.params().d2)};
}

}  // namespace

IndVector ind_term(const TripleIndex& t, const BaseKey& b, Scalar c) {
    return IndVector::single(IndKey{t, b}, std::move(c));
}

IndVector act(const Generator& g, const IndVector& v, const BaseModule& V) {
    if (g.alg != Algebra::SV) throw std::invalid_argument("act: generator not tagged SV");
    IndUniverse u = universe_of(V);
    IndVector out;
    for (const auto& [key, c] : v) {
        LinComb<std::pair<Mono, BaseKey>> terms;
        detail::engine_act(u, g, ind_decode(u, key.idx), key.v, c, terms);
        for (const auto& [tk, c2] : terms) out.add(IndKey{ind_encode(u, tk.first), tk.second}, c2);
    }
    return out;
}

std::vector<TripleIndex> supp(const IndVector& v) {
    std::vector<TripleIndex> out;
    for (const auto& [key, c] : v) {
        (void)c;
        if (out.empty() || !(out.back() == key.idx)) out.push_back(key.idx);
    }
    return out;
}

TripleIndex deg(const IndVector& v) {
    if (v.zero()) throw std::domain_error("deg: the zero element does not have a degree");
    return std::prev(v.terms().end())->first.idx;  // map order is principal-first
}

DescentStep descent_step(const IndVector& v, const BaseModule& V) {
    const TripleIndex d = deg(v);
    if (d.all_zero()) throw std::invalid_argument("descent_step: vector already lies in the V part");
    const int t = static_cast<int>(V.params().t);
    const int d1 = static_cast<int>(V.params().d1);
    const int d2e = static_cast<int>(V.params().d2);

    DescentStep st;
    if (!d.l.is_zero()) {
        const uint32_t khat = d.l.min_pos();
        st.applied = Generator::M(static_cast<int>(khat) + t);
        st.predicted = {d.m, d.y, dprime_drop(d.l)};
    } else if (!d.y.is_zero()) {
        const uint32_t jhat = d.y.min_pos();
        st.applied = Generator::Y(static_cast<int>(jhat) + t + d2e - 1);
        st.predicted = {d.m, dprime_drop(d.y), MultiIndex{}};
    } else {
        const uint32_t ihat = d.m.max_pos();
        st.applied = Generator::L(static_cast<int>(ihat) + t + d1);
        st.predicted = {prime_drop(d.m), MultiIndex{}, MultiIndex{}};
    }
    st.result = act(st.applied, v, V);
    if (st.result.zero())
        throw invariant_violation("descent_step: " + st.applied.str() + " annihilated a vector of degree " +
                                  to_string(d));
    if (!(deg(st.result) == st.predicted))
        throw invariant_violation("descent_step: predicted " + to_string(st.predicted) + " but got " +
                                  to_string(deg(st.result)) + " applying " + st.applied.str());
    return st;
}

ReduceResult reduce_to_base(const IndVector& v, const BaseModule& V) {
    if (v.zero()) throw std::invalid_argument("reduce_to_base: zero vector");
    ReduceResult res;
    IndVector cur = v;
    const uint64_t bound = deg(cur).total();
    uint64_t steps = 0;
    while (!deg(cur).all_zero()) {
        if (++steps > bound) throw invariant_violation("reduce_to_base: step bound exceeded");
        DescentStep st = descent_step(cur, V);
        res.trace.push_back({st.applied, st.predicted, deg(st.result)});
        cur = std::move(st.result);
    }
    for (const auto& [key, c] : cur) res.terminal.add(key.v, c);
    if (res.terminal.zero()) throw invariant_violation("reduce_to_base: terminal V-vector is zero");
    return res;
}

std::optional<unsigned> nilpotency_probe(const Generator& g, const IndVector& v,
                                         const BaseModule& V, unsigned maxN) {
    IndVector cur = v;
    for (unsigned n = 1; n <= maxN; ++n) {
        cur = act(g, cur, V);
        if (cur.zero()) return n;
    }
    return std::nullopt;
}

std::vector<TripleIndex> graded_piece_basis(const BaseModule& V, uint32_t w) {
    (void)V;
    std::vector<TripleIndex> out;
    for (uint32_t wm = 0; wm <= w; ++wm) {
        for (uint32_t wy = 0; wy + wm <= w; ++wy) {
            uint32_t wl = w - wm - wy;
            for (const auto& im : multi_indices_of_weight(wm))
                for (const auto& iy : multi_indices_of_weight(wy))
                    for (const auto& il : multi_indices_of_weight(wl)) out.push_back({im, iy, il});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const TripleIndex& a, const TripleIndex& b) { return principal_cmp_sv(a, b) < 0; });
    return out;
}

SingularSpace singular_space(const BaseModule& V, uint32_t wmax) {
    if (!V.one_dimensional())
        throw std::invalid_argument("singular_space: supported for one-dimensional base modules only");
    const int t = static_cast<int>(V.params().t);
    const int d1 = static_cast<int>(V.params().d1);
    const int d2e = static_cast<int>(V.params().d2);
    const BaseKey cyc = V.cyclic();

    SingularSpace out;
    for (uint32_t w = 0; w <= wmax; ++w) {
        std::vector<TripleIndex> keys = graded_piece_basis(V, w);

        // annihilators that can act nontrivially on this piece: degree <= w
        std::vector<Generator> ops;
        for (int i = t + 1; i <= t + static_cast<int>(w); ++i) ops.push_back(Generator::M(i));
        for (int a = t + d2e; a <= t + d2e + static_cast<int>(w) - 1; ++a) ops.push_back(Generator::Y(a));
        for (int k = t + d1 + 1; k <= t + d1 + static_cast<int>(w); ++k) ops.push_back(Generator::L(k));

        std::vector<std::vector<IndVector>> images(keys.size());
        std::map<IndKey, size_t> rows;
        for (size_t c = 0; c < keys.size(); ++c) {
            for (const auto& g : ops) {
                IndVector img = act(g, ind_term(keys[c], cyc), V);
                for (const auto& [k, s] : img) {
                    (void)s;
                    rows.try_emplace(k, rows.size());
                }
                images[c].push_back(std::move(img));
            }
        }
        // one row per (operator, result key)
        RatMatrix full(ops.size() * rows.size(), std::vector<Scalar>(keys.size(), Scalar(0)));
        for (size_t c = 0; c < keys.size(); ++c)
            for (size_t oi = 0; oi < ops.size(); ++oi)
                for (const auto& [k, s] : images[c][oi]) full[oi * rows.size() + rows.at(k)][c] = s;

        auto kernel = kernel_basis(full, keys.size());
        out.piece_kernel_dim.push_back(kernel.size());
        for (const auto& coeffs : kernel) {
            IndVector vec;
            for (size_t c = 0; c < keys.size(); ++c) vec.add(IndKey{keys[c], cyc}, coeffs[c]);
            out.basis.push_back(std::move(vec));
        }
    }
    return out;
}

}  // namespace svmod
