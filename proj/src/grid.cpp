#include "kunstweg/grid.hpp"

#include <numbers>

namespace kunstweg {

GridSpec::GridSpec(long n) : n_(n) {
  if (n < 1) throw ConfigurationError("grid size n must be >= 1, got " + std::to_string(n));
}

double GridSpec::alpha_radians() const { return std::numbers::pi / (2.0 * static_cast<double>(n_)); }

OctantReduction reduce_to_octant(const Rational& turns) {
  const Integer num = mp::numerator(turns);
  const Integer den = mp::denominator(turns);
  // floor division; gmp truncates toward zero
  Integer whole = num / den;
  if (num < 0 && whole * den != num) whole -= 1;
  Rational t = turns - Rational(whole);

  OctantReduction out;
  const Rational half(1, 2);
  const Rational quarter(1, 4);
  const Rational eighth(1, 8);
  if (t >= half) {
    t -= half;
    out.sign = -1;
  }
  if (t > quarter) t = half - t;
  if (t > eighth) {
    out.use_cosine = true;
    t = quarter - t;
  }
  out.reduced = t;
  return out;
}

Rational ScalarTraits<Rational>::exact_sin_turns(const Rational& turns) {
  const OctantReduction r = reduce_to_octant(turns);
  Rational value;
  if (r.use_cosine) {
    if (r.reduced != 0) {
      throw NumericError(NumericError::Kind::not_representable,
                         "sine of this angle is irrational; use a floating mode");
    }
    value = 1;
  } else if (r.reduced == 0) {
    value = 0;
  } else if (r.reduced == Rational(1, 12)) {
    value = Rational(1, 2);
  } else {
    throw NumericError(NumericError::Kind::not_representable,
                       "sine of this angle is irrational; use a floating mode");
  }
  return r.sign < 0 ? Rational(-value) : value;
}

}  // namespace kunstweg
