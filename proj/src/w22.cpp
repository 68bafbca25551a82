#include "svmod/w22.hpp"

#include "svmod/engine.hpp"
#include "svmod/linalg.hpp"
#include "svmod/pbw.hpp"

#include <algorithm>

namespace svmod {

std::optional<long> t0_condition_check(const Scalar& hW, const Scalar& cW) {
    if (cW.is_zero()) {
        if (hW.is_zero()) return 1;
        return std::nullopt;
    }
    // 2 hW + (n^2-1)/12 cW = 0  <=>  n^2 = 1 - 24 hW / cW
    Scalar q = Scalar(1) - Scalar(24) * hW / cW;
    const mpq_class& r = q.raw();
    if (r <= 0) return std::nullopt;  // n = 0 is excluded from the quantifier
    if (r.get_den() != 1) return std::nullopt;
    mpz_class num = r.get_num();
    if (!mpz_perfect_square_p(num.get_mpz_t())) return std::nullopt;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), num.get_mpz_t());
    return mpz_get_si(root.get_mpz_t());
}

// ---------------------------------------------------------------- bases

BaseVector WOneDimModule::act_sub(const Generator& g, const BaseKey& k) const {
    if (!in_subalgebra(g)) throw std::invalid_argument("WOneDimModule: " + g.str() + " outside W_0");
    if (!k.blocks.empty()) throw std::invalid_argument("WOneDimModule: foreign base key");
    Scalar s(0);
    if (g.fam == Family::C)
        s = params_.cW;
    else if (g.fam == Family::L && g.index == 0)
        s = xi_l0_;
    else if (g.fam == Family::W && g.index == 0)
        s = params_.hW;
    BaseVector out;
    out.add(k, s);
    return out;
}

WWhittakerModule::WWhittakerModule(unsigned d, unsigned t, std::map<int, Scalar> lambda, Scalar omega_t,
                                   Scalar hW, Scalar cW)
    : WBaseModule(WSubalgebraParams(d, t, std::move(hW), std::move(cW))),
      lambda_(std::move(lambda)),
      omega_t_(std::move(omega_t)) {
    if (t == 0) throw std::invalid_argument("WWhittakerModule: t >= 1 required");
    if (omega_t_.is_zero()) throw std::invalid_argument("WWhittakerModule: omega_t must be nonzero");
    const int tdi = static_cast<int>(t + d);
    for (const auto& [i, v] : lambda_) {
        (void)v;
        if (i < 1 || i > tdi) throw std::invalid_argument("WWhittakerModule: lambda index out of range");
    }
    // [L_i, L_j] = (j-i) L_{i+j} forces lambda_{i+j} = 0 for distinct pinned i, j
    for (int i = 1; i <= tdi; ++i)
        for (int j = i + 1; j <= tdi; ++j)
            if (i + j <= tdi && !lambda_scalar(i + j).is_zero())
                throw std::invalid_argument("WWhittakerModule: lambda_" + std::to_string(i + j) +
                                            " must vanish (bracket consistency)");
}

Scalar WWhittakerModule::lambda_scalar(int i) const {
    auto it = lambda_.find(i);
    return it == lambda_.end() ? Scalar(0) : it->second;
}

BaseKey WWhittakerModule::monomial(const FiniteTuple& wexp, uint32_t l0exp) const {
    if (wexp.size() != params_.d + params_.t)
        throw std::invalid_argument("WWhittakerModule: W exponent tuple has wrong length");
    return BaseKey{{wexp, FiniteTuple(1, l0exp)}};
}

namespace {

struct WWhitUniverse {
    using Key = detail::Unit;
    const WWhittakerModule* Q;

    detail::GenClass cls(const Generator& g) const {
        const auto& p = Q->params();
        const int d = static_cast<int>(p.d), t = static_cast<int>(p.t);
        switch (g.fam) {
            case Family::C:
                return detail::GenClass::Central;
            case Family::W:
                if (g.index >= -d && g.index <= t - 1) return detail::GenClass::Free;
                if (g.index >= -d) return detail::GenClass::Boundary;
                break;
            case Family::L:
                if (g.index == 0) return detail::GenClass::Free;
                if (g.index > 0) return detail::GenClass::Boundary;
                break;
            default:
                break;
        }
        throw std::invalid_argument("WWhittakerModule: " + g.str() + " outside W_d");
    }
    std::pair<int, int64_t> rank(const Generator& g) const { return gen_rank(g, GenOrder::W22Ind); }
    Scalar central_scalar(const Generator&) const { return Q->params().cW; }
    LinComb<Key> act_boundary(const Generator& g, const Key&) const {
        const int t = static_cast<int>(Q->params().t);
        Scalar v(0);
        if (g.fam == Family::W)
            v = g.index == t ? Q->omega_t() : Scalar(0);
        else if (g.fam == Family::L)
            v = Q->lambda_scalar(g.index);
        LinComb<Key> out;
        out.add(detail::Unit{}, v);
        return out;
    }
};

Mono wwhit_decode(const WWhittakerModule& Q, const BaseKey& k) {
    const int d = static_cast<int>(Q.params().d);
    Mono m;
    for (size_t i = 0; i < k.blocks[0].size(); ++i)
        if (k.blocks[0][i]) m.push_back({Generator::WW(static_cast<int>(i) - d), k.blocks[0][i]});
    if (k.blocks[1][0]) m.push_back({Generator::WL(0), k.blocks[1][0]});
    return m;
}

BaseKey wwhit_encode(const WWhittakerModule& Q, const Mono& m) {
    const auto& p = Q.params();
    FiniteTuple wexp(p.d + p.t, 0);
    uint32_t l0 = 0;
    for (const auto& [g, e] : m) {
        if (g.fam == Family::W)
            wexp[static_cast<size_t>(g.index + static_cast<int>(p.d))] += e;
        else
            l0 += e;
    }
    return BaseKey{{wexp, FiniteTuple(1, l0)}};
}

}  // namespace

BaseVector WWhittakerModule::act_sub(const Generator& g, const BaseKey& k) const {
    WWhitUniverse u{this};
    u.cls(g);
    LinComb<std::pair<Mono, detail::Unit>> out;
    detail::engine_act(u, g, wwhit_decode(*this, k), detail::Unit{}, Scalar(1), out);
    BaseVector res;
    for (const auto& [tk, c] : out) res.add(wwhit_encode(*this, tk.first), c);
    return res;
}

std::shared_ptr<WOneDimModule> make_w_onedim(Scalar xi_l0, Scalar hW, Scalar cW) {
    return std::make_shared<WOneDimModule>(std::move(xi_l0), std::move(hW), std::move(cW));
}

std::shared_ptr<WWhittakerModule> make_w_whittaker(unsigned d, unsigned t, std::map<int, Scalar> lambda,
                                                   Scalar omega_t, Scalar cW) {
    return std::make_shared<WWhittakerModule>(d, t, std::move(lambda), std::move(omega_t), Scalar(0),
                                              std::move(cW));
}

ProbeResult wt_injectivity_probe(const WBaseModule& V, const std::vector<BaseVector>& sample) {
    const Generator wt = Generator::WW(static_cast<int>(V.params().t));
    std::vector<BaseVector> images;
    for (const auto& v : sample) {
        BaseVector img = V.act_sub(wt, v);
        if (!v.zero() && img.zero()) return {false, "W_t kills a nonzero sample vector"};
        images.push_back(std::move(img));
    }
    auto coordinate = [](const std::vector<BaseVector>& vs) {
        std::map<BaseKey, size_t> cols;
        for (const auto& v : vs)
            for (const auto& [k, c] : v) cols.try_emplace(k, cols.size());
        RatMatrix m(vs.size(), std::vector<Scalar>(std::max<size_t>(cols.size(), 1), Scalar(0)));
        for (size_t i = 0; i < vs.size(); ++i)
            for (const auto& [k, c] : vs[i]) m[i][cols.at(k)] = c;
        return m;
    };
    size_t rs = rank(coordinate(sample)), ri = rank(coordinate(images));
    if (ri < rs) return {false, "rank dropped from " + std::to_string(rs) + " to " + std::to_string(ri)};
    return {true, "rank " + std::to_string(rs) + " preserved"};
}

// ---------------------------------------------------------------- induced

namespace {

struct WIndUniverse {
    using Key = BaseKey;
    const WBaseModule* V;
    int d;

    detail::GenClass cls(const Generator& g) const {
        switch (g.fam) {
            case Family::C: return detail::GenClass::Central;
            case Family::W: return g.index <= -d - 1 ? detail::GenClass::Free : detail::GenClass::Boundary;
            case Family::L: return g.index <= -1 ? detail::GenClass::Free : detail::GenClass::Boundary;
            default: throw std::invalid_argument("w_act: SV family in W22 module");
        }
    }
    std::pair<int, int64_t> rank(const Generator& g) const { return gen_rank(g, GenOrder::W22Ind); }
    Scalar central_scalar(const Generator&) const { return V->params().cW; }
    LinComb<Key> act_boundary(const Generator& g, const Key& k) const { return V->act_sub(g, k); }
};

Mono w_ind_decode(const WIndUniverse& u, const PairIndex& t) {
    Mono m;
    const auto& we = t.w.entries();
    for (auto it = we.rbegin(); it != we.rend(); ++it)
        m.push_back({Generator::WW(-u.d - static_cast<int>(it->first)), it->second});
    const auto& le = t.l.entries();
    for (auto it = le.rbegin(); it != le.rend(); ++it)
        m.push_back({Generator::WL(-static_cast<int>(it->first)), it->second});
    return m;
}

PairIndex w_ind_encode(const WIndUniverse& u, const Mono& m) {
    PairIndex t;
    for (const auto& [g, e] : m) {
        if (g.fam == Family::W)
            t.w.bump(static_cast<uint32_t>(-g.index - u.d), static_cast<int32_t>(e));
        else if (g.fam == Family::L)
            t.l.bump(static_cast<uint32_t>(-g.index), static_cast<int32_t>(e));
        else
            throw invariant_violation("w_ind_encode: central factor in a module monomial");
    }
    return t;
}

}  // namespace

WIndVector w_ind_term(const PairIndex& t, const BaseKey& b, Scalar c) {
    return WIndVector::single(WIndKey{t, b}, std::move(c));
}

WIndVector w_act(const Generator& g, const WIndVector& v, const WBaseModule& V) {
    if (g.alg != Algebra::W22) throw std::invalid_argument("w_act: generator not tagged W22");
    WIndUniverse u{&V, static_cast<int>(V.params().d)};
    WIndVector out;
    for (const auto& [key, c] : v) {
        LinComb<std::pair<Mono, BaseKey>> terms;
        detail::engine_act(u, g, w_ind_decode(u, key.idx), key.v, c, terms);
        for (const auto& [tk, c2] : terms) out.add(WIndKey{w_ind_encode(u, tk.first), tk.second}, c2);
    }
    return out;
}

std::vector<PairIndex> w_supp(const WIndVector& v) {
    std::vector<PairIndex> out;
    for (const auto& [key, c] : v) {
        (void)c;
        if (out.empty() || !(out.back() == key.idx)) out.push_back(key.idx);
    }
    return out;
}

PairIndex w_deg(const WIndVector& v) {
    if (v.zero()) throw std::domain_error("w_deg: the zero element does not have a degree");
    return std::prev(v.terms().end())->first.idx;
}

WDescentStep w_descent_step(const WIndVector& v, const WBaseModule& V) {
    const PairIndex d = w_deg(v);
    if (d.all_zero()) throw std::invalid_argument("w_descent_step: vector already lies in the V part");
    const int t = static_cast<int>(V.params().t);
    const int dd = static_cast<int>(V.params().d);

    WDescentStep st;
    if (!d.l.is_zero()) {
        st.applied = Generator::WW(static_cast<int>(d.l.min_pos()) + t);
        st.predicted = {d.w, dprime_drop(d.l)};
    } else {
        st.applied = Generator::WL(static_cast<int>(d.w.max_pos()) + t + dd);
        st.predicted = {prime_drop(d.w), MultiIndex{}};
    }
    st.result = w_act(st.applied, v, V);
    if (st.result.zero())
        throw invariant_violation("w_descent_step: " + st.applied.str() + " annihilated a vector of degree " +
                                  to_string(d));
    if (!(w_deg(st.result) == st.predicted))
        throw invariant_violation("w_descent_step: predicted " + to_string(st.predicted) + " but got " +
                                  to_string(w_deg(st.result)) + " applying " + st.applied.str());
    return st;
}

WReduceResult w_reduce(const WIndVector& v, const WBaseModule& V) {
    if (v.zero()) throw std::invalid_argument("w_reduce: zero vector");
    WReduceResult res;
    WIndVector cur = v;
    const uint64_t bound = w_deg(cur).total();
    uint64_t steps = 0;
    while (!w_deg(cur).all_zero()) {
        if (++steps > bound) throw invariant_violation("w_reduce: step bound exceeded");
        WDescentStep st = w_descent_step(cur, V);
        res.trace.push_back({st.applied, st.predicted, w_deg(st.result)});
        cur = std::move(st.result);
    }
    for (const auto& [key, c] : cur) res.terminal.add(key.v, c);
    if (res.terminal.zero()) throw invariant_violation("w_reduce: terminal V-vector is zero");
    return res;
}

std::optional<unsigned> w_nilpotency_probe(const Generator& g, const WIndVector& v,
                                           const WBaseModule& V, unsigned maxN) {
    WIndVector cur = v;
    for (unsigned n = 1; n <= maxN; ++n) {
        cur = w_act(g, cur, V);
        if (cur.zero()) return n;
    }
    return std::nullopt;
}

}  // namespace svmod
