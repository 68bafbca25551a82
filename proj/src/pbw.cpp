#include "svmod/pbw.hpp"

#include "svmod/engine.hpp"

namespace svmod {

std::pair<int, int64_t> gen_rank(const Generator& g, GenOrder order) {
    int slot = 0;
    switch (order) {
        case GenOrder::SvInd:
            switch (g.fam) {
                case Family::M: slot = 0; break;
                case Family::Y: slot = 1; break;
                case Family::L: slot = 2; break;
                case Family::C: slot = 3; break;
                default: throw std::invalid_argument("gen_rank: W family under SV order");
            }
            break;
        case GenOrder::SvQ:
            switch (g.fam) {
                case Family::L: slot = 0; break;
                case Family::Y: slot = 1; break;
                case Family::M: slot = 2; break;
                case Family::C: slot = 3; break;
                default: throw std::invalid_argument("gen_rank: W family under SV order");
            }
            break;
        case GenOrder::W22Ind:
            switch (g.fam) {
                case Family::W: slot = 0; break;
                case Family::L: slot = 1; break;
                case Family::C: slot = 2; break;
                default: throw std::invalid_argument("gen_rank: SV family under W22 order");
            }
            break;
    }
    return {slot, g.index};
}

namespace {

// Universe with every generator free: the pure U(g) rewriter.
struct PureUniverse {
    using Key = detail::Unit;
    GenOrder order;
    detail::GenClass cls(const Generator&) const { return detail::GenClass::Free; }
    std::pair<int, int64_t> rank(const Generator& g) const { return gen_rank(g, order); }
    Scalar central_scalar(const Generator&) const { throw std::logic_error("pure universe has no central substitution"); }
    LinComb<Key> act_boundary(const Generator&, const Key&) const { throw std::logic_error("pure universe has no boundary"); }
};

Algebra order_algebra(GenOrder order) { return order == GenOrder::W22Ind ? Algebra::W22 : Algebra::SV; }

LinComb<Mono> strip_unit(const LinComb<std::pair<Mono, detail::Unit>>& v) {
    LinComb<Mono> out;
    for (const auto& [tk, c] : v) out.add(tk.first, c);
    return out;
}

}  // namespace

LinComb<Mono> straighten(const Word& w, GenOrder order) {
    const Algebra alg = order_algebra(order);
    for (const auto& g : w) {
        if (!g.valid()) throw std::invalid_argument("straighten: invalid generator " + g.str());
        if (g.alg != alg) throw std::invalid_argument("straighten: mixed algebra tags");
    }
    PureUniverse u{order};
    LinComb<std::pair<Mono, detail::Unit>> acc =
        LinComb<std::pair<Mono, detail::Unit>>::single({Mono{}, detail::Unit{}}, Scalar(1));
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = detail::engine_apply(u, *it, acc);
    return strip_unit(acc);
}

LinComb<Mono> normal_product(const Mono& m, const Generator& g, GenOrder order) {
    if (g.alg != order_algebra(order)) throw std::invalid_argument("normal_product: mixed algebra tags");
    PureUniverse u{order};
    LinComb<std::pair<Mono, detail::Unit>> out;
    detail::engine_act(u, g, m, detail::Unit{}, Scalar(1), out);
    return strip_unit(out);
}

Scalar mono_degree(const Mono& m) {
    Scalar d(0);
    for (const auto& [g, e] : m) d += g.degree() * Scalar(static_cast<long>(e));
    return d;
}

std::string to_string(const Mono& m) {
    if (m.empty()) return "1";
    std::string s;
    for (const auto& [g, e] : m) {
        if (!s.empty()) s += " ";
        s += g.str();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace svmod
