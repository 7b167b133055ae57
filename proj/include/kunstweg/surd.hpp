#pragma once

#include <iosfwd>

#include "kunstweg/scalar.hpp"

namespace kunstweg {

/// Exact a + b sqrt(d) with rational a, b and a square-free radicand d >= 2.
///
/// Elements with different radicands only mix when one of them is rational.
/// Enough to carry the chain construction exactly for n in {1, 2, 3}, where
/// every sine and cosine of k * alpha lies in Q, Q(sqrt 2) or Q(sqrt 3).
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(long value) : a_(value) {}  // NOLINT: implicit like other scalars
  QuadraticSurd(Rational a) : a_(std::move(a)) {}  // NOLINT
  QuadraticSurd(Rational a, Rational b, long radicand);

  static QuadraticSurd sqrt_of(long radicand) { return QuadraticSurd(Rational(0), Rational(1), radicand); }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& surd_part() const noexcept { return b_; }
  /// 0 when the value is rational.
  long radicand() const noexcept { return d_; }
  bool is_rational() const noexcept { return b_ == 0; }

  /// -1, 0 or +1, decided exactly.
  int sign() const;
  double to_double() const;

  QuadraticSurd operator-() const { return QuadraticSurd(-a_, -b_, d_); }
  QuadraticSurd& operator+=(const QuadraticSurd& rhs);
  QuadraticSurd& operator-=(const QuadraticSurd& rhs);
  QuadraticSurd& operator*=(const QuadraticSurd& rhs);
  QuadraticSurd& operator/=(const QuadraticSurd& rhs);

  friend QuadraticSurd operator+(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs += rhs; }
  friend QuadraticSurd operator-(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs -= rhs; }
  friend QuadraticSurd operator*(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs *= rhs; }
  friend QuadraticSurd operator/(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadraticSurd& lhs, const QuadraticSurd& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && (lhs.b_ == 0 || lhs.d_ == rhs.d_);
  }
  friend bool operator<(const QuadraticSurd& lhs, const QuadraticSurd& rhs) { return (lhs - rhs).sign() < 0; }
  friend bool operator>(const QuadraticSurd& lhs, const QuadraticSurd& rhs) { return rhs < lhs; }
  friend bool operator<=(const QuadraticSurd& lhs, const QuadraticSurd& rhs) { return !(rhs < lhs); }
  friend bool operator>=(const QuadraticSurd& lhs, const QuadraticSurd& rhs) { return !(lhs < rhs); }

  friend std::ostream& operator<<(std::ostream& os, const QuadraticSurd& v);

 private:
  long common_radicand(const QuadraticSurd& rhs) const;
  void normalize() {
    if (b_ == 0) d_ = 0;
  }

  Rational a_ = 0;
  Rational b_ = 0;
  long d_ = 0;
};

inline QuadraticSurd abs(const QuadraticSurd& v) { return v.sign() < 0 ? -v : v; }

template <>
struct ScalarTraits<QuadraticSurd> {
  static constexpr bool exact = true;
  static constexpr const char* name = "surd";

  static QuadraticSurd from_rational(const Rational& q, const PrecisionContext& = PrecisionContext{}) { return q; }
  static QuadraticSurd from_int(long v, const PrecisionContext& = PrecisionContext{}) { return v; }
  static QuadraticSurd epsilon(const PrecisionContext& = PrecisionContext{}) { return 0L; }
  static bool is_finite(const QuadraticSurd&) { return true; }
  static double to_double(const QuadraticSurd& v) { return v.to_double(); }
  static QuadraticSurd abs(const QuadraticSurd& v) { return kunstweg::abs(v); }

  /// Exact for multiples of 30 and 45 degrees; NumericError otherwise.
  static QuadraticSurd exact_sin_turns(const Rational& turns);
};

}  // namespace kunstweg

namespace Eigen {

template <>
struct NumTraits<kunstweg::QuadraticSurd> : GenericNumTraits<kunstweg::QuadraticSurd> {
  using Real = kunstweg::QuadraticSurd;
  using NonInteger = kunstweg::QuadraticSurd;
  using Literal = kunstweg::QuadraticSurd;
  using Nested = kunstweg::QuadraticSurd;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static Real epsilon() { return 0L; }
  static Real dummy_precision() { return 0L; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
