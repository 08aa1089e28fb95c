#pragma once

#include <cstddef>
#include <vector>

#include "coarsetr/homology/matrix.hpp"

namespace coarsetr::homology {

/// P * A * Q = D with D diagonal (entries not necessarily in divisibility
/// order) and P, Q unimodular. Transforms are only filled when requested.
template <class T>
struct SmithResult {
  std::vector<T> diagonal;  // nonzero entries, length = rank
  std::size_t rank = 0;
  Matrix<T> P, Pinv, Q, Qinv;
};

/// Diagonalizes by alternating row and column elimination with the pivot of
/// smallest magnitude. With T = int64 this throws Overflow when an entry
/// leaves the 64-bit range.
template <class T>
SmithResult<T> smith(Matrix<T> a, bool want_rows, bool want_cols);

extern template SmithResult<std::int64_t> smith(Matrix<std::int64_t>, bool,
                                                bool);
extern template SmithResult<BigInt> smith(Matrix<BigInt>, bool, bool);

/// Invariant factors d1 | d2 | ... (each > 1) of the finite cyclic orders,
/// i.e. of the group Z/o1 + Z/o2 + ...; orders equal to 1 are ignored.
std::vector<BigInt> invariant_factors(std::vector<BigInt> const& orders);

}  // namespace coarsetr::homology
