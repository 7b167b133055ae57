#pragma once

// Independent ground truth: reference sines computed in binary fixed point
// from exact rational angles, a literal O(n^2) matrix product and a direct
// evaluation of the row-difference eigen equations.

#include <vector>

#include "kunstweg/dense.hpp"
#include "kunstweg/grid.hpp"
#include "kunstweg/scalar.hpp"

namespace kunstweg {

/// Reference sine/cosine evaluator for one precision. pi is computed once at
/// construction; each evaluation does exact range reduction on the rational
/// turn count followed by a truncated Taylor series whose length is fixed by
/// the factorial remainder bound.
class ReferenceTrig {
 public:
  /// Guard digits carried beyond the requested precision.
  static constexpr int kGuardDigits = 12;

  explicit ReferenceTrig(const PrecisionContext& ctx);

  const PrecisionContext& context() const noexcept { return ctx_; }
  /// Fractional bits of the fixed-point representation.
  unsigned fraction_bits() const noexcept { return bits_; }
  /// Taylor terms used for both the sine and cosine series.
  int series_terms() const noexcept { return terms_; }

  /// sin(2 pi turns) as an exact dyadic rational m / 2^fraction_bits, or the
  /// exact value when the sine is rational.
  Rational sin_dyadic(const Rational& turns) const;
  Rational cos_dyadic(const Rational& turns) const { return sin_dyadic(turns + Rational(1, 4)); }

  BigFloat sin(const Rational& turns) const;
  BigFloat cos(const Rational& turns) const { return sin(turns + Rational(1, 4)); }
  BigFloat pi() const;

 private:
  PrecisionContext ctx_;
  unsigned bits_;
  int terms_;
  Integer pi_fixed_;
};

BigFloat ref_sin(const Rational& turns, const PrecisionContext& ctx);
BigFloat ref_cos(const Rational& turns, const PrecisionContext& ctx);

namespace detail {

/// Smallest K such that (pi/4)^(2K) / (2K)! <= 10^-exponent, using 0.786 as
/// an upper bound for pi/4. Truncating the sine and cosine series after K
/// terms on |x| <= pi/4 then leaves a remainder below 10^-exponent.
int taylor_terms_for(int exponent);

/// pi * 2^bits rounded down, by Machin's arctangent formula.
Integer pi_machin_fixed(unsigned bits);
/// pi * 2^bits, by the Chudnovsky series. Independent cross-check.
Integer pi_chudnovsky_fixed(unsigned bits);

unsigned fraction_bits_for(int digits);

}  // namespace detail

/// sin(2 pi turns) in any scalar mode. Exact modes return exact values and
/// throw NumericError when the sine is not representable; floating modes go
/// through the reference evaluator.
template <class Scalar>
Scalar sin_turns(const Rational& turns, const PrecisionContext& ctx = PrecisionContext{}) {
  if constexpr (is_exact_v<Scalar>) {
    return ScalarTraits<Scalar>::exact_sin_turns(turns);
  } else {
    const PrecisionContext work = ctx.digits() < 20 ? ctx.with_digits(20) : ctx;
    return ScalarTraits<Scalar>::from_rational(ReferenceTrig(work).sin_dyadic(turns), ctx);
  }
}

template <class Scalar>
Scalar cos_turns(const Rational& turns, const PrecisionContext& ctx = PrecisionContext{}) {
  return sin_turns<Scalar>(turns + Rational(1, 4), ctx);
}

/// (sin alpha, sin 2 alpha, ..., sin (n-1) alpha, 1) with the last entry exactly 1.
template <class Scalar>
Vector<Scalar> reference_sine_vector(const GridSpec& spec, const PrecisionContext& ctx = PrecisionContext{}) {
  const long n = spec.n();
  Vector<Scalar> out(n);
  if constexpr (is_exact_v<Scalar>) {
    for (long j = 1; j < n; ++j) out(j - 1) = ScalarTraits<Scalar>::exact_sin_turns(spec.angle_turns(j));
  } else {
    const PrecisionContext work = ctx.digits() < 20 ? ctx.with_digits(20) : ctx;
    const ReferenceTrig trig(work);
    for (long j = 1; j < n; ++j) {
      out(j - 1) = ScalarTraits<Scalar>::from_rational(trig.sin_dyadic(spec.angle_turns(j)), ctx);
    }
  }
  out(n - 1) = ScalarTraits<Scalar>::from_int(1, ctx);
  return out;
}

/// Literal row-by-row product with the dense matrix from build_dense. O(n^2);
/// test oracle for the fast operator application.
template <class Derived>
Vector<typename Derived::Scalar> dense_product(const GridSpec& spec, const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const long n = spec.n();
  if (n > kDenseLimit) throw SizeGateExceeded(n, kDenseLimit);
  if (x.size() != n) throw DimensionMismatch(n, static_cast<long>(x.size()));

  const Matrix<Scalar> dense = build_dense<Scalar>(spec);
  Vector<Scalar> y(n);
  for (long row = 0; row < n; ++row) {
    Scalar acc = dense(row, 0) * x(0);
    for (long col = 1; col < n; ++col) acc += dense(row, col) * x(col);
    y(row) = acc;
  }
  return y;
}

/// One row of the row-difference system:
/// lambda (s_j - s_{j-1}) = s_j + ... + s_{n-1} + 1/2, with s_0 = 0, s_n = 1.
struct StarEquation {
  long j = 0;
  BigFloat lhs;
  BigFloat rhs;
  BigFloat gap;
};

struct StarReport {
  long n = 0;
  int digits = 0;
  BigFloat lambda;
  std::vector<StarEquation> equations;
  BigFloat max_gap;
  /// 10^(3 - digits) * lambda
  BigFloat threshold;
  bool passed = false;
};

/// Evaluates both sides of all n equations with reference sines and the
/// closed-form lambda.
StarReport verify_star(const GridSpec& spec, const PrecisionContext& ctx);

}  // namespace kunstweg
