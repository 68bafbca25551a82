#pragma once

#include "svmod/base_modules.hpp"
#include "svmod/errors.hpp"
#include "svmod/generator.hpp"
#include "svmod/lincomb.hpp"
#include "svmod/multi_index.hpp"

#include <optional>
#include <vector>

namespace svmod {

/// Basis key of Ind(V) = U(G) (x) V: exponent multi-indices for the three
/// negative families together with a base-module key. Slot s encodes
/// M_{-d1-s}, Y with a = -d2-s, and L_{-s} respectively (d2 effective).
struct IndKey {
    TripleIndex idx;
    BaseKey v;

    friend bool operator==(const IndKey& a, const IndKey& b) { return a.idx == b.idx && a.v == b.v; }
    friend bool operator<(const IndKey& a, const IndKey& b) {
        auto c = principal_cmp_sv(a.idx, b.idx);
        if (c != 0) return c < 0;
        return a.v < b.v;
    }
};

using IndVector = LinComb<IndKey>;

IndVector ind_term(const TripleIndex& t, const BaseKey& b, Scalar c = Scalar(1));

/// Exact action of an SV generator on Ind(V): commute rightward through the
/// normal monomial, absorb subalgebra generators into V, keep the rest in
/// canonical position, substitute C -> c.
IndVector act(const Generator& g, const IndVector& v, const BaseModule& V);

std::vector<TripleIndex> supp(const IndVector& v);

/// Maximal support triple under the principal total order; v must be nonzero.
TripleIndex deg(const IndVector& v);

struct DescentStep {
    Generator applied;
    TripleIndex predicted;
    IndVector result;
};

/// One reduction step: picks M_{k^+t}, Y_{j^+t+d2-1/2} or L_{i^+t+d1}
/// according to the leading triple and asserts the predicted degree of the
/// result. v must have nonzero degree; mismatches raise invariant_violation.
DescentStep descent_step(const IndVector& v, const BaseModule& V);

struct IndTraceStep {
    Generator applied;
    TripleIndex predicted, actual;
};

struct ReduceResult {
    BaseVector terminal;
    std::vector<IndTraceStep> trace;
};

/// Drives descent_step until the degree is (0,0,0); the step count is bounded
/// by the entry sum of the initial degree (each step removes one unit).
ReduceResult reduce_to_base(const IndVector& v, const BaseModule& V);

/// Smallest N <= maxN with g^N v = 0, or nullopt.
std::optional<unsigned> nilpotency_probe(const Generator& g, const IndVector& v,
                                         const BaseModule& V, unsigned maxN);

/// All monomial triple keys of total slot weight w (three-colored partitions).
std::vector<TripleIndex> graded_piece_basis(const BaseModule& V, uint32_t w);

struct SingularSpace {
    std::vector<size_t> piece_kernel_dim;  // index = weight 0..wmax
    std::vector<IndVector> basis;          // joint kernel vectors, all pieces
};

/// Joint kernel of all high-index annihilators, computed exactly per graded
/// piece. Restricted to one-dimensional V.
SingularSpace singular_space(const BaseModule& V, uint32_t wmax);

}  // namespace svmod
