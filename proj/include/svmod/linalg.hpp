#pragma once

#include "svmod/scalar.hpp"

#include <cstddef>
#include <vector>

namespace svmod {

/// Dense matrix over the rationals. Rows are vectors of equal length.
using RatMatrix = std::vector<std::vector<Scalar>>;

/// Row-reduces in place, returning the rank. Exact arithmetic throughout.
size_t rref(RatMatrix& m);

size_t rank(RatMatrix m);

/// Basis of the right kernel {x : m x = 0}; each basis vector has the column count length.
std::vector<std::vector<Scalar>> kernel_basis(const RatMatrix& m, size_t cols);

}  // namespace svmod
