#pragma once

#include "kunstweg/scalar.hpp"

namespace kunstweg {

/// Problem size n and the quarter-angle step alpha = 90 deg / n.
///
/// Angles are kept as exact rational turn counts: alpha is 1/(4n) of a full
/// turn, so k * alpha is k/(4n) turns. Radians are derived only when a
/// floating value is explicitly requested.
class GridSpec {
 public:
  explicit GridSpec(long n);

  long n() const noexcept { return n_; }

  Rational alpha_turns() const { return Rational(1, 4 * n_); }
  Rational alpha_degrees() const { return Rational(90, n_); }
  double alpha_radians() const;

  /// k * alpha in turns and degrees.
  Rational angle_turns(long k) const { return Rational(k, 4 * n_); }
  Rational angle_degrees(long k) const { return Rational(90 * k, n_); }

  /// n * alpha == 1/4 turn, checked in rational arithmetic.
  bool closes_quarter_turn() const { return alpha_turns() * n_ == Rational(1, 4); }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  long n_;
};

/// An angle folded into the first octant: sin(turns) == sign * f(2 pi reduced)
/// where f is cos if `use_cosine` and sin otherwise, and 0 <= reduced <= 1/8.
struct OctantReduction {
  Rational reduced;
  bool use_cosine = false;
  int sign = 1;
};

/// Exact range reduction of a sine argument given in turns. Uses the period of
/// one turn, sin(t + 1/2) = -sin(t), sin(1/2 - t) = sin(t) and
/// sin(1/4 - u) = cos(u). Every step is rational, so mirrored angles reduce to
/// identical arguments.
OctantReduction reduce_to_octant(const Rational& turns);

}  // namespace kunstweg
