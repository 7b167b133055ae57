#include "kunstweg/oracle.hpp"

#include <cmath>

#include "kunstweg/operator.hpp"

namespace kunstweg {
namespace detail {
namespace {

constexpr unsigned kPiGuardBits = 32;

// arctan(1/m) * 2^bits, truncated terms.
Integer arctan_inverse_fixed(long m, unsigned bits) {
  const Integer one = Integer(1) << bits;
  const Integer m2 = Integer(m) * m;
  Integer power = one / m;
  Integer sum = power;
  for (long k = 1; power != 0; ++k) {
    power /= m2;
    const Integer term = power / (2 * k + 1);
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace

int taylor_terms_for(int exponent) {
  // r = 0.786 > pi/4; term(K) = r^(2K) / (2K)!
  const Rational r2 = Rational(393, 500) * Rational(393, 500);
  const Rational limit = Rational(1, mp::pow(Integer(10), static_cast<unsigned>(exponent)));
  Rational term(1);
  int terms = 0;
  while (term > limit) {
    ++terms;
    term *= r2 / Rational((2 * terms - 1) * (2 * terms));
  }
  return std::max(terms, 1);
}

Integer pi_machin_fixed(unsigned bits) {
  const unsigned work = bits + kPiGuardBits;
  // pi = 16 atan(1/5) - 4 atan(1/239)
  const Integer pi = 16 * arctan_inverse_fixed(5, work) - 4 * arctan_inverse_fixed(239, work);
  return pi >> kPiGuardBits;
}

Integer pi_chudnovsky_fixed(unsigned bits) {
  const unsigned work = bits + kPiGuardBits;
  const Integer one = Integer(1) << work;
  const Integer c3_over_24 = Integer(640320) * 640320 * 640320 / 24;

  Integer a_k = one;
  Integer a_sum = one;
  Integer b_sum = 0;
  for (long k = 1; a_k != 0; ++k) {
    a_k *= -Integer(6 * k - 5) * (2 * k - 1) * (6 * k - 1);
    a_k /= Integer(k) * k * k * c3_over_24;
    a_sum += a_k;
    b_sum += k * a_k;
  }
  const Integer total = 13591409 * a_sum + 545140134 * b_sum;
  const Integer root = mp::sqrt(Integer(10005) * one * one);
  return (426880 * root * one / total) >> kPiGuardBits;
}

unsigned fraction_bits_for(int digits) {
  const double decimal = static_cast<double>(digits + ReferenceTrig::kGuardDigits);
  return static_cast<unsigned>(std::ceil(decimal * std::log2(10.0))) + 8;
}

}  // namespace detail

ReferenceTrig::ReferenceTrig(const PrecisionContext& ctx)
    : ctx_(ctx),
      bits_(detail::fraction_bits_for(ctx.digits())),
      terms_(detail::taylor_terms_for(ctx.digits() + kGuardDigits)),
      pi_fixed_(detail::pi_machin_fixed(bits_)) {}

Rational ReferenceTrig::sin_dyadic(const Rational& turns) const {
  const OctantReduction r = reduce_to_octant(turns);
  const auto signed_value = [&](const Rational& v) { return r.sign < 0 ? Rational(-v) : v; };

  // Niven: the only rational sines of rational angles.
  if (r.use_cosine && r.reduced == 0) return signed_value(Rational(1));
  if (!r.use_cosine && r.reduced == 0) return Rational(0);
  if (!r.use_cosine && r.reduced == Rational(1, 12)) return signed_value(Rational(1, 2));

  const Integer one = Integer(1) << bits_;
  const Integer x = 2 * pi_fixed_ * mp::numerator(r.reduced) / mp::denominator(r.reduced);
  const Integer x2 = (x * x) >> bits_;

  Integer term = r.use_cosine ? one : x;
  Integer sum = term;
  for (int k = 1; k < terms_; ++k) {
    const long a = r.use_cosine ? 2L * k - 1 : 2L * k;
    term = ((term * x2) >> bits_) / (a * (a + 1));
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return signed_value(Rational(sum, one));
}

BigFloat ReferenceTrig::sin(const Rational& turns) const {
  return ScalarTraits<BigFloat>::from_rational(sin_dyadic(turns), ctx_);
}

BigFloat ReferenceTrig::pi() const {
  return ScalarTraits<BigFloat>::from_rational(Rational(pi_fixed_, Integer(1) << bits_), ctx_);
}

BigFloat ref_sin(const Rational& turns, const PrecisionContext& ctx) { return ReferenceTrig(ctx).sin(turns); }

BigFloat ref_cos(const Rational& turns, const PrecisionContext& ctx) { return ReferenceTrig(ctx).cos(turns); }

StarReport verify_star(const GridSpec& spec, const PrecisionContext& ctx) {
  using T = ScalarTraits<BigFloat>;
  const long n = spec.n();
  const ReferenceTrig trig(ctx);

  // s[0] = 0, s[j] = sin(j alpha), s[n] = 1
  std::vector<BigFloat> s(static_cast<std::size_t>(n) + 1);
  s[0] = T::from_int(0, ctx);
  for (long j = 1; j < n; ++j) s[j] = trig.sin(spec.angle_turns(j));
  s[n] = T::from_int(1, ctx);

  StarReport report;
  report.n = n;
  report.digits = ctx.digits();
  report.lambda = eigen_lambda<BigFloat>(spec, ctx);
  report.threshold = mp::pow(T::from_int(10, ctx), 3 - ctx.digits()) * report.lambda;
  report.max_gap = T::from_int(0, ctx);

  std::vector<BigFloat> rhs(static_cast<std::size_t>(n) + 1);
  BigFloat suffix = T::from_rational(Rational(1, 2), ctx);
  for (long j = n; j >= 1; --j) {
    if (j < n) suffix += s[j];
    rhs[j] = suffix;
  }

  report.equations.reserve(static_cast<std::size_t>(n));
  for (long j = 1; j <= n; ++j) {
    StarEquation eq;
    eq.j = j;
    eq.lhs = report.lambda * (s[j] - s[j - 1]);
    eq.rhs = rhs[j];
    eq.gap = mp::abs(eq.lhs - eq.rhs);
    if (eq.gap > report.max_gap) report.max_gap = eq.gap;
    report.equations.push_back(std::move(eq));
  }
  report.passed = report.max_gap <= report.threshold;
  return report;
}

}  // namespace kunstweg
