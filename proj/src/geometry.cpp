#include "kunstweg/geometry.hpp"

namespace kunstweg {

CancellationStructure cancellation_structure(const GridSpec& spec, long j) {
  const long n = spec.n();
  if (j < 1 || j > n) throw IndexOutOfRange(j, 1, n);
  // vector k has angle index i = j + k, i in [j, j + 2n - 1]
  CancellationStructure out;
  out.horizontal = 2 * n - j;
  for (long i = 2 * n + 1; i <= 2 * n + j - 1; ++i) out.pairs.emplace_back(4 * n - i - j, i - j);
  return out;
}

}  // namespace kunstweg
