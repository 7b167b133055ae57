#pragma once

// Scalar modes used throughout the library and the small traits layer that
// lets templated code create constants at the right precision.

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "kunstweg/errors.hpp"

namespace kunstweg {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
/// Arbitrary-precision binary float; each value carries its own precision and
/// arithmetic results take the larger precision of their operands.
using BigFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Number of significant decimal digits for high-precision work. Passed
/// explicitly; there is no ambient precision.
class PrecisionContext {
 public:
  static constexpr int kDefaultDigits = 20;
  static constexpr int kDefaultCeiling = 200;

  explicit PrecisionContext(int digits = kDefaultDigits, int ceiling = kDefaultCeiling)
      : digits_(digits), ceiling_(ceiling) {
    if (ceiling_ < 2) throw PrecisionError("precision ceiling must be at least 2 digits");
    if (digits_ < 2 || digits_ > ceiling_) {
      throw PrecisionError("precision of " + std::to_string(digits_) +
                           " digits outside [2, " + std::to_string(ceiling_) + "]");
    }
  }

  int digits() const noexcept { return digits_; }
  int ceiling() const noexcept { return ceiling_; }

  /// Same ceiling, different digit count.
  PrecisionContext with_digits(int digits) const { return PrecisionContext(digits, ceiling_); }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int digits_;
  int ceiling_;
};

/// Rational -> BigFloat rounded to nearest at `digits10` decimal digits.
/// (Boost's converting constructor goes through the default precision.)
BigFloat to_bigfloat(const Rational& q, unsigned digits10);

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "double";

  static double from_rational(const Rational& q, const PrecisionContext& = PrecisionContext{}) {
    // both parts exact in a double: IEEE division rounds to nearest
    const auto& num = mp::numerator(q);
    const auto& den = mp::denominator(q);
    if (mp::msb(mp::abs(num) + 1) < 53 && mp::msb(den) < 53) {
      return num.convert_to<double>() / den.convert_to<double>();
    }
    // mpq -> double truncates; route through a wide mpfr value to round to nearest.
    return to_bigfloat(q, 40).convert_to<double>();
  }
  static double from_int(long v, const PrecisionContext& = PrecisionContext{}) {
    return static_cast<double>(v);
  }
  static double epsilon(const PrecisionContext& = PrecisionContext{}) {
    return std::numeric_limits<double>::epsilon();
  }
  static bool is_finite(double v) { return std::isfinite(v); }
  static double to_double(double v) { return v; }
  static double abs(double v) { return std::fabs(v); }
  static int natural_digits() { return 17; }
};

template <>
struct ScalarTraits<BigFloat> {
  static constexpr bool exact = false;
  static constexpr const char* name = "bigfloat";

  static BigFloat from_rational(const Rational& q, const PrecisionContext& ctx) {
    return to_bigfloat(q, static_cast<unsigned>(ctx.digits()));
  }
  static BigFloat from_int(long v, const PrecisionContext& ctx) {
    return BigFloat(v, static_cast<unsigned>(ctx.digits()));
  }
  static BigFloat epsilon(const PrecisionContext& ctx) {
    return mp::pow(from_int(10, ctx), 1 - ctx.digits());
  }
  static bool is_finite(const BigFloat& v) { return mp::isfinite(v); }
  static double to_double(const BigFloat& v) { return v.convert_to<double>(); }
  static BigFloat abs(const BigFloat& v) { return mp::abs(v); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";

  static Rational from_rational(const Rational& q, const PrecisionContext& = PrecisionContext{}) {
    return q;
  }
  static Rational from_int(long v, const PrecisionContext& = PrecisionContext{}) {
    return Rational(v);
  }
  static Rational epsilon(const PrecisionContext& = PrecisionContext{}) { return Rational(0); }
  static bool is_finite(const Rational&) { return true; }
  static double to_double(const Rational& v) { return ScalarTraits<double>::from_rational(v); }
  static Rational abs(const Rational& v) { return mp::abs(v); }

  /// Rational sines of rational angles are exactly 0, +-1/2, +-1.
  static Rational exact_sin_turns(const Rational& turns);
};

template <class Scalar>
inline constexpr bool is_exact_v = ScalarTraits<Scalar>::exact;

/// Scientific notation with `significant` digits, e.g. 5.000e-01 for 4 digits.
std::string format_scientific(double value, int significant);
std::string format_scientific(const BigFloat& value, int significant);
std::string format_scientific(const Rational& value, int significant);

/// Fixed notation with `significant` significant digits (0.5000000000 for 10).
std::string format_significant(const BigFloat& value, int significant);

/// One unit in the `significant`-th significant digit of `reference`.
BigFloat significant_digit_unit(const BigFloat& reference, int significant);

}  // namespace kunstweg
