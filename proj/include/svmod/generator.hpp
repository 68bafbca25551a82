#pragma once

#include "svmod/scalar.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>

namespace svmod {

enum class Algebra : uint8_t { SV, W22 };

/// Basis families. SV uses M, Y, L, C; W(2,2) uses L, W, C.
enum class Family : uint8_t { M, Y, L, W, C };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::M: return "M";
        case Family::Y: return "Y";
        case Family::L: return "L";
        case Family::W: return "W";
        case Family::C: return "C";
    }
    return "?";
}

/// A tagged basis element of one of the two Lie algebras.
/// For family Y the stored index a means Y_{a+1/2}; every other family
/// carries its subscript directly. Central elements have index 0.
struct Generator {
    Algebra alg = Algebra::SV;
    Family fam = Family::C;
    int32_t index = 0;

    static Generator M(int32_t n) { return {Algebra::SV, Family::M, n}; }
    static Generator Y(int32_t a) { return {Algebra::SV, Family::Y, a}; }
    static Generator L(int32_t n) { return {Algebra::SV, Family::L, n}; }
    static Generator C() { return {Algebra::SV, Family::C, 0}; }
    static Generator WL(int32_t n) { return {Algebra::W22, Family::L, n}; }
    static Generator WW(int32_t n) { return {Algebra::W22, Family::W, n}; }
    static Generator WC() { return {Algebra::W22, Family::C, 0}; }

    bool central() const { return fam == Family::C; }

    bool valid() const {
        if (fam == Family::C && index != 0) return false;
        if (alg == Algebra::SV) return fam == Family::M || fam == Family::Y || fam == Family::L || fam == Family::C;
        return fam == Family::L || fam == Family::W || fam == Family::C;
    }

    /// n for M_n/L_n/W_n, a+1/2 for Y, 0 for central elements.
    Scalar degree() const {
        if (fam == Family::C) return Scalar(0);
        if (fam == Family::Y) return Scalar(2L * index + 1, 2);
        return Scalar(index);
    }

    std::string str() const {
        if (fam == Family::C) return alg == Algebra::W22 ? "C_W" : "C";
        std::string s = family_name(fam);
        if (fam == Family::Y) {
            long num = 2L * index + 1;
            s += "_{" + std::to_string(num) + "/2}";
        } else {
            s += "_" + std::to_string(index);
        }
        return s;
    }

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.alg == b.alg && a.fam == b.fam && a.index == b.index;
    }
    friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
    /// Serialization order: family rank M < Y < L < W < C, then index.
    friend bool operator<(const Generator& a, const Generator& b) {
        return std::tuple(static_cast<int>(a.alg), static_cast<int>(a.fam), a.index) <
               std::tuple(static_cast<int>(b.alg), static_cast<int>(b.fam), b.index);
    }
};

inline Scalar generator_degree(const Generator& g) { return g.degree(); }

inline void require_same_algebra(const Generator& a, const Generator& b) {
    if (a.alg != b.alg) throw std::invalid_argument("algebra tag mismatch: " + a.str() + " vs " + b.str());
}

}  // namespace svmod
