#include "svmod/bracket.hpp"

namespace svmod {

namespace {

// (m^3 - m)/12 as an exact rational, m within int32 so the cube fits in long.
Scalar virasoro_cocycle(int32_t m) {
    long lm = m;
    return Scalar(lm * lm * lm - lm, 12);
}

// The five SV rules in the orientation M < Y < L; everything else is derived
// by antisymmetry so the identity holds by construction.
LinComb<Generator> sv_oriented(const Generator& g, const Generator& h) {
    LinComb<Generator> out;
    const int32_t m = g.index, n = h.index;
    if (g.fam == Family::L && h.fam == Family::L) {
        out.add(Generator::L(m + n), Scalar(static_cast<long>(n) - m));
        if (m + n == 0) out.add(Generator::C(), virasoro_cocycle(m));
    } else if (g.fam == Family::L && h.fam == Family::Y) {
        // [L_m, Y_{a+1/2}] = (a + (1-m)/2) Y_{a+m+1/2}
        out.add(Generator::Y(n + m), Scalar(2L * n + 1 - m, 2));
    } else if (g.fam == Family::L && h.fam == Family::M) {
        out.add(Generator::M(m + n), Scalar(n));
    } else if (g.fam == Family::Y && h.fam == Family::Y) {
        // [Y_{m+1/2}, Y_{n+1/2}] = (n-m) M_{m+n+1}
        out.add(Generator::M(m + n + 1), Scalar(static_cast<long>(n) - m));
    }
    // [M,M] = [M,Y] = [anything, C] = 0
    return out;
}

LinComb<Generator> w22_oriented(const Generator& g, const Generator& h) {
    LinComb<Generator> out;
    const int32_t m = g.index, n = h.index;
    if (g.fam == Family::L && h.fam == Family::L) {
        out.add(Generator::WL(m + n), Scalar(static_cast<long>(n) - m));
        if (m + n == 0) out.add(Generator::WC(), virasoro_cocycle(m));
    } else if (g.fam == Family::L && h.fam == Family::W) {
        out.add(Generator::WW(m + n), Scalar(static_cast<long>(n) - m));
        if (m + n == 0) out.add(Generator::WC(), virasoro_cocycle(m));
    }
    // [W,W] = [anything, C_W] = 0
    return out;
}

// Orientation used above: L acts first, i.e. pairs (L,*) and (Y,Y).
bool oriented(Family a, Family b) {
    if (a == Family::L) return true;
    if (b == Family::L) return false;
    return true;  // remaining nonzero case is (Y,Y), symmetric families are fine either way
}

}  // namespace

LinComb<Generator> sv_bracket(const Generator& g, const Generator& h) {
    require_same_algebra(g, h);
    if (g.alg != Algebra::SV) throw std::invalid_argument("sv_bracket: generators not tagged SV");
    if (g.central() || h.central()) return {};
    if (oriented(g.fam, h.fam)) return sv_oriented(g, h);
    return -sv_oriented(h, g);
}

LinComb<Generator> w22_bracket(const Generator& g, const Generator& h) {
    require_same_algebra(g, h);
    if (g.alg != Algebra::W22) throw std::invalid_argument("w22_bracket: generators not tagged W22");
    if (g.central() || h.central()) return {};
    if (oriented(g.fam, h.fam)) return w22_oriented(g, h);
    return -w22_oriented(h, g);
}

LinComb<Generator> lie_bracket(const Generator& g, const Generator& h) {
    require_same_algebra(g, h);
    return g.alg == Algebra::SV ? sv_bracket(g, h) : w22_bracket(g, h);
}

}  // namespace svmod
