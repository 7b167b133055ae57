#include "kunstweg/surd.hpp"

#include <ostream>

#include "kunstweg/grid.hpp"

namespace kunstweg {
namespace {

bool is_square_free(long d) {
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

QuadraticSurd::QuadraticSurd(Rational a, Rational b, long radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
  if (b_ != 0 && (d_ < 2 || !is_square_free(d_))) {
    throw ConfigurationError("radicand must be square-free and >= 2, got " + std::to_string(d_));
  }
  normalize();
}

long QuadraticSurd::common_radicand(const QuadraticSurd& rhs) const {
  if (b_ == 0) return rhs.d_;
  if (rhs.b_ == 0 || rhs.d_ == d_) return d_;
  throw NumericError(NumericError::Kind::not_representable,
                     "cannot combine sqrt(" + std::to_string(d_) + ") and sqrt(" + std::to_string(rhs.d_) + ")");
}

int QuadraticSurd::sign() const {
  const int sa = sign_of(a_);
  const int sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  const Rational diff = a_ * a_ - b_ * b_ * d_;
  return sa * sign_of(diff);
}

double QuadraticSurd::to_double() const {
  if (b_ == 0) return ScalarTraits<double>::from_rational(a_);
  const BigFloat value = to_bigfloat(a_, 40) + to_bigfloat(b_, 40) * mp::sqrt(BigFloat(d_, 40));
  return value.convert_to<double>();
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& rhs) {
  d_ = common_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  normalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& rhs) {
  d_ = common_radicand(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  normalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& rhs) {
  const long d = common_radicand(rhs);
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& rhs) {
  if (rhs.a_ == 0 && rhs.b_ == 0) {
    throw NumericError(NumericError::Kind::not_representable, "division by zero");
  }
  // 1 / (a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
  const Rational norm = rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * rhs.d_;
  return *this *= QuadraticSurd(rhs.a_ / norm, -rhs.b_ / norm, rhs.d_);
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& v) {
  os << v.a_;
  if (v.b_ != 0) os << (v.b_ > 0 ? " + " : " - ") << mp::abs(v.b_) << " sqrt(" << v.d_ << ")";
  return os;
}

QuadraticSurd ScalarTraits<QuadraticSurd>::exact_sin_turns(const Rational& turns) {
  const OctantReduction r = reduce_to_octant(turns);
  QuadraticSurd value;
  const Rational& t = r.reduced;
  const QuadraticSurd half_root2(Rational(0), Rational(1, 2), 2);
  const QuadraticSurd half_root3(Rational(0), Rational(1, 2), 3);
  if (t == 0) {
    value = r.use_cosine ? 1L : 0L;
  } else if (t == Rational(1, 12)) {
    value = r.use_cosine ? half_root3 : QuadraticSurd(Rational(1, 2));
  } else if (t == Rational(1, 8)) {
    value = half_root2;
  } else {
    throw NumericError(NumericError::Kind::not_representable,
                       "sine of this angle is not in Q(sqrt 2) or Q(sqrt 3)");
  }
  return r.sign < 0 ? -value : value;
}

}  // namespace kunstweg
