#pragma once

#include "svmod/bracket.hpp"
#include "svmod/generator.hpp"
#include "svmod/lincomb.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace svmod {

/// Canonical generator orders for normal monomials. Within a family the index
/// always ascends left to right; the orders differ in family precedence.
///   SvInd:  M < Y < L   (induced-module shape)
///   SvQ:    L < Y < M   (quotient-module shape)
///   W22Ind: W < L
/// Central generators sort last under every order.
enum class GenOrder : uint8_t { SvInd, SvQ, W22Ind };

/// (family slot, index) rank of a generator under an order; monomials store
/// factors sorted ascending by this rank.
std::pair<int, int64_t> gen_rank(const Generator& g, GenOrder order);

/// A normal monomial: factors strictly ascending in the canonical order,
/// exponents positive. The empty monomial is the unit.
using Mono = std::vector<std::pair<Generator, uint32_t>>;

std::string to_string(const Mono& m);

/// Word in the enveloping algebra, factors listed left to right.
using Word = std::vector<Generator>;

/// Rewrites an arbitrary word into PBW normal form under the given order.
/// The result equals the word in U(g); central generators remain explicit
/// factors so callers can substitute scalars.
LinComb<Mono> straighten(const Word& w, GenOrder order);

/// Left multiplication g * m in normal form, without re-expanding m.
LinComb<Mono> normal_product(const Mono& m, const Generator& g, GenOrder order);

/// Total degree of a monomial (sum of factor degrees).
Scalar mono_degree(const Mono& m);

}  // namespace svmod
