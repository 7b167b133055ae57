#pragma once

// The Kunstweg matrix M and its O(n) application.
//
// Indexing: formulas use 1-based (row j, column i); storage is 0-based, so
// row j of the formulas is index j - 1 and the last row/column n is n - 1.
//
// Subtracting consecutive rows of M x gives
//   (Mx)_j - (Mx)_{j-1} = x_j + ... + x_{n-1} + x_n / 2,
// so M x is a suffix sum (seeded with x_n / 2) followed by a prefix sum.

#include "kunstweg/dense.hpp"
#include "kunstweg/grid.hpp"
#include "kunstweg/oracle.hpp"
#include "kunstweg/scalar.hpp"

namespace kunstweg {

/// Implicit representation of M for one grid. Immutable.
class KunstwegOperator {
 public:
  explicit KunstwegOperator(GridSpec spec) : spec_(spec) {}

  const GridSpec& spec() const noexcept { return spec_; }
  long n() const noexcept { return spec_.n(); }

  /// M[j][i], 1-based.
  Rational entry(long j, long i) const {
    check_index(j);
    check_index(i);
    return i < n() ? Rational(std::min(i, j)) : Rational(j, 2);
  }

  /// 2 M[j][i], 1-based. Every entry of 2M is an integer.
  Integer doubled_entry(long j, long i) const {
    check_index(j);
    check_index(i);
    return i < n() ? Integer(2 * std::min(i, j)) : Integer(j);
  }

 private:
  void check_index(long k) const {
    if (k < 1 || k > n()) throw IndexOutOfRange(k, 1, n());
  }

  GridSpec spec_;
};

/// y = M x in 2n - 2 additions and one halving.
template <class Derived>
Vector<typename Derived::Scalar> apply(const KunstwegOperator& op, const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = op.n();
  if (x.size() != n) throw DimensionMismatch(n, static_cast<long>(x.size()));

  Vector<Scalar> y(n);
  // suffix pass: y(k) holds x_{k+1} + ... + x_{n-1} + x_n / 2 (1-based terms)
  y(n - 1) = x(n - 1) / 2;
  for (Eigen::Index k = n - 2; k >= 0; --k) y(k) = y(k + 1) + x(k);
  // prefix pass
  for (Eigen::Index k = 1; k < n; ++k) y(k) += y(k - 1);
  return y;
}

/// Integer-only 2 M x.
Vector<Integer> apply_doubled(const KunstwegOperator& op, const Vector<Integer>& x);

/// numerators / 2^exponent, componentwise. Powers of M applied to an integer
/// start stay in this form with integer arithmetic only: each step multiplies
/// the numerators by 2M and bumps the exponent.
struct DyadicVector {
  Vector<Integer> numerators;
  unsigned exponent = 0;

  Vector<Rational> value() const;
};

/// Returns M v as a dyadic vector.
DyadicVector apply(const KunstwegOperator& op, const DyadicVector& v);

/// Dominant eigenvalue lambda = 1 / (2 (1 - cos alpha)).
///
/// From the last row-difference equation lambda - lambda sin((n-1) alpha) = 1/2
/// and sin((n-1) alpha) = cos alpha. Floating modes evaluate the equivalent
/// 1 / (4 sin^2(alpha / 2)) with reference trigonometry, which avoids the
/// cancellation in 1 - cos alpha for large n. Exact modes use the cosine form
/// and throw NumericError when cos alpha is not representable.
template <class Scalar>
Scalar eigen_lambda(const GridSpec& spec, const PrecisionContext& ctx = PrecisionContext{}) {
  using T = ScalarTraits<Scalar>;
  if constexpr (is_exact_v<Scalar>) {
    const Scalar c = cos_turns<Scalar>(spec.alpha_turns(), ctx);
    const Scalar one = T::from_int(1, ctx);
    return one / (T::from_int(2, ctx) * (one - c));
  } else {
    // half-angle form 1 / (4 sin^2(alpha / 2)) in exact arithmetic on the
    // guarded reference sine, rounded once
    const PrecisionContext work = ctx.digits() < 20 ? ctx.with_digits(20) : ctx;
    const Rational s = ReferenceTrig(work).sin_dyadic(spec.alpha_turns() / 2);
    return T::from_rational(1 / (4 * s * s), ctx);
  }
}

/// max_j |(Mx)_j - lambda x_j| with the closed-form lambda.
template <class Derived>
typename Derived::Scalar eigen_residual(const KunstwegOperator& op, const Eigen::MatrixBase<Derived>& x,
                                        const PrecisionContext& ctx = PrecisionContext{}) {
  using Scalar = typename Derived::Scalar;
  using T = ScalarTraits<Scalar>;
  const Vector<Scalar> y = apply(op, x);
  const Scalar lambda = eigen_lambda<Scalar>(op.spec(), ctx);
  Scalar worst = T::from_int(0, ctx);
  for (Eigen::Index k = 0; k < y.size(); ++k) {
    const Scalar d = T::abs(y(k) - lambda * x(k));
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace kunstweg
