#include "kunstweg/operator.hpp"

namespace kunstweg {

Vector<Integer> apply_doubled(const KunstwegOperator& op, const Vector<Integer>& x) {
  const Eigen::Index n = op.n();
  if (x.size() != n) throw DimensionMismatch(n, static_cast<long>(x.size()));

  // (2Mx)_j - (2Mx)_{j-1} = 2 (x_j + ... + x_{n-1}) + x_n
  Vector<Integer> y(n);
  y(n - 1) = x(n - 1);
  for (Eigen::Index k = n - 2; k >= 0; --k) y(k) = y(k + 1) + 2 * x(k);
  for (Eigen::Index k = 1; k < n; ++k) y(k) += y(k - 1);
  return y;
}

Vector<Rational> DyadicVector::value() const {
  const Integer denominator = Integer(1) << exponent;
  Vector<Rational> out(numerators.size());
  for (Eigen::Index k = 0; k < numerators.size(); ++k) out(k) = Rational(numerators(k), denominator);
  return out;
}

DyadicVector apply(const KunstwegOperator& op, const DyadicVector& v) {
  return DyadicVector{apply_doubled(op, v.numerators), v.exponent + 1};
}

}  // namespace kunstweg
