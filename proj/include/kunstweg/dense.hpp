#pragma once

#include <algorithm>

#include "kunstweg/grid.hpp"
#include "kunstweg/scalar.hpp"

namespace kunstweg {

/// Largest n for which dense matrices are materialized.
inline constexpr long kDenseLimit = 4096;

/// The n x n Kunstweg matrix. With 1-based (row j, column i):
/// M[j][i] = min(i, j) for i < n and M[j][n] = j / 2.
/// Verification only; O(n^2) memory and gated to n <= kDenseLimit.
template <class Scalar>
Matrix<Scalar> build_dense(const GridSpec& spec) {
  const long n = spec.n();
  if (n > kDenseLimit) throw SizeGateExceeded(n, kDenseLimit);
  Matrix<Scalar> m(n, n);
  for (long row = 0; row < n; ++row) {
    for (long col = 0; col + 1 < n; ++col) m(row, col) = Scalar(std::min(row, col) + 1);
    m(row, n - 1) = Scalar(row + 1) / Scalar(2);
  }
  return m;
}

}  // namespace kunstweg
