#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "kunstweg/oracle.hpp"
#include "support/test_util.hpp"

namespace kunstweg {
namespace {

using testing::big;
using testing::decimal_sqrt;
using testing::ten_to_minus;

constexpr const char* kPi50 = "3.14159265358979323846264338327950288419716939937510";

TEST(ReferencePi, MachinMatchesPublishedDigits) {
  const unsigned bits = detail::fraction_bits_for(60);
  const Rational pi(detail::pi_machin_fixed(bits), Integer(1) << bits);
  const BigFloat diff = mp::abs(big(pi, 80) - big(kPi50, 80));
  EXPECT_LT(diff, big(ten_to_minus(50), 80));
}

TEST(ReferencePi, MachinAndChudnovskyAgree) {
  for (int digits : {20, 50, 120, 200}) {
    const unsigned bits = detail::fraction_bits_for(digits);
    const Integer a = detail::pi_machin_fixed(bits);
    const Integer b = detail::pi_chudnovsky_fixed(bits);
    EXPECT_LE(mp::abs(a - b), Integer(4)) << "digits " << digits;
  }
}

TEST(ReferencePi, ExposedAtContextPrecision) {
  const ReferenceTrig trig(PrecisionContext(50));
  EXPECT_LT(mp::abs(trig.pi() - big(kPi50, 60)), big(ten_to_minus(49), 60));
}

TEST(TaylorTerms, RemainderBoundHolds) {
  // independent check in log space, with pi/4 itself rather than 0.786
  for (int exponent : {10, 22, 62, 212}) {
    const int k = detail::taylor_terms_for(exponent);
    const auto log10_bound = [](int m) {
      return m * std::log10(std::numbers::pi / 4) - std::lgamma(m + 1.0) / std::log(10.0);
    };
    EXPECT_LE(log10_bound(2 * k), -exponent + 1e-9) << exponent;
    // one term fewer is not enough (0.786 vs pi/4 never moves this by a term)
    EXPECT_GT(log10_bound(2 * (k - 1)), -exponent) << exponent;
  }
}

TEST(TaylorTerms, TruncationErrorBelowBound) {
  const PrecisionContext ctx(40);
  const ReferenceTrig trig(ctx);
  // compare with a run at much higher precision on the worst-case argument
  const ReferenceTrig wide(PrecisionContext(120));
  for (const Rational t : {Rational(1, 8), Rational(1, 9), Rational(1, 17)}) {
    const BigFloat gap = mp::abs(big(trig.sin_dyadic(t), 150) - big(wide.sin_dyadic(t), 150));
    EXPECT_LT(gap, big(ten_to_minus(40 + ReferenceTrig::kGuardDigits - 1), 150));
  }
}

TEST(RefSin, RationalValuesAreExact) {
  const ReferenceTrig trig(PrecisionContext(30));
  EXPECT_EQ(trig.sin_dyadic(Rational(1, 12)), Rational(1, 2));
  EXPECT_EQ(trig.sin_dyadic(Rational(1, 4)), Rational(1));
  EXPECT_EQ(trig.sin_dyadic(Rational(0)), Rational(0));
  EXPECT_EQ(trig.sin_dyadic(Rational(5, 12)), Rational(1, 2));
  EXPECT_EQ(trig.sin_dyadic(Rational(7, 12)), Rational(-1, 2));
  EXPECT_EQ(trig.sin_dyadic(Rational(3, 4)), Rational(-1));
  EXPECT_EQ(trig.sin_dyadic(Rational(1, 2)), Rational(0));
  EXPECT_EQ(ref_sin(Rational(1, 12), PrecisionContext(30)), BigFloat("0.5", 30));
}

TEST(RefSin, FortyFiveDegreesMatchesIntegerSqrt) {
  for (int digits : {12, 50, 150}) {
    const PrecisionContext ctx(digits);
    const BigFloat s = ref_sin(Rational(1, 8), ctx);
    const BigFloat expected = big(decimal_sqrt(2, digits + 10) / 2, digits + 10);
    EXPECT_LT(mp::abs(s - expected), big(ten_to_minus(digits), digits + 10)) << digits;
  }
}

TEST(RefSin, SixtyDegreesMatchesIntegerSqrt) {
  const PrecisionContext ctx(60);
  const BigFloat expected = big(decimal_sqrt(3, 70) / 2, 70);
  EXPECT_LT(mp::abs(ref_sin(Rational(1, 6), ctx) - expected), big(ten_to_minus(59), 70));
}

TEST(RefSin, SupplementIsStructurallyIdentical) {
  std::mt19937_64 rng(7);
  const ReferenceTrig trig(PrecisionContext(40));
  for (int i = 0; i < 100; ++i) {
    const Rational t = testing::random_rational(rng, -3, 3, 997);
    EXPECT_EQ(trig.sin_dyadic(t), trig.sin_dyadic(Rational(1, 2) - t)) << t;
  }
}

TEST(RefSin, PeriodicAndOdd) {
  std::mt19937_64 rng(11);
  const ReferenceTrig trig(PrecisionContext(30));
  for (int i = 0; i < 50; ++i) {
    const Rational t = testing::random_rational(rng, 0, 1, 503);
    EXPECT_EQ(trig.sin_dyadic(t), trig.sin_dyadic(t + 3));
    EXPECT_EQ(trig.sin_dyadic(-t), -trig.sin_dyadic(t));
  }
}

TEST(RefSin, PythagoreanIdentity) {
  std::mt19937_64 rng(1234);
  for (int digits : {20, 60}) {
    const PrecisionContext ctx(digits);
    const ReferenceTrig trig(ctx);
    const BigFloat tol = mp::pow(BigFloat(10, digits), 2 - digits);
    for (int i = 0; i < 100; ++i) {
      const Rational t = testing::random_rational(rng, -2, 2, 1009);
      const BigFloat s = trig.sin(t);
      const BigFloat c = trig.cos(t);
      EXPECT_LT(mp::abs(s * s + c * c - 1), tol) << t;
    }
  }
}

TEST(RefSin, AgreesWithMpfrSine) {
  // MPFR's own sine is a third opinion; the oracle path does not use it.
  std::mt19937_64 rng(99);
  const PrecisionContext ctx(50);
  const ReferenceTrig trig(ctx);
  for (int i = 0; i < 40; ++i) {
    const Rational t = testing::random_rational(rng, -1, 1, 4096);
    const BigFloat x = 2 * big(kPi50, 80) * big(t, 80);
    EXPECT_LT(mp::abs(big(trig.sin_dyadic(t), 80) - mp::sin(x)), big(ten_to_minus(48), 80));
  }
}

TEST(RefSin, PrecisionCeiling) {
  EXPECT_THROW(PrecisionContext(201), PrecisionError);
  EXPECT_THROW(PrecisionContext(1), PrecisionError);
  EXPECT_NO_THROW(PrecisionContext(250, 300));
}

TEST(ReferenceSineVector, SmallCases) {
  const PrecisionContext ctx(30);
  const Vector<BigFloat> v3 = reference_sine_vector<BigFloat>(GridSpec(3), ctx);
  ASSERT_EQ(v3.size(), 3);
  EXPECT_EQ(v3(0), BigFloat("0.5", 30));
  EXPECT_LT(mp::abs(v3(1) - big(decimal_sqrt(3, 40) / 2, 40)), big(ten_to_minus(29), 40));
  EXPECT_EQ(v3(2), 1);

  const Vector<BigFloat> v1 = reference_sine_vector<BigFloat>(GridSpec(1), ctx);
  ASSERT_EQ(v1.size(), 1);
  EXPECT_EQ(v1(0), 1);

  const Vector<double> v2 = reference_sine_vector<double>(GridSpec(2));
  EXPECT_DOUBLE_EQ(v2(0), std::sqrt(2.0) / 2);
  EXPECT_EQ(v2(1), 1.0);
}

TEST(ReferenceSineVector, ExactModeOnlyWhereRational) {
  const Vector<Rational> v1 = reference_sine_vector<Rational>(GridSpec(1));
  EXPECT_EQ(v1(0), 1);
  EXPECT_THROW(reference_sine_vector<Rational>(GridSpec(2)), NumericError);
}

TEST(DenseProduct, BaseCases) {
  Vector<Rational> x2(2);
  x2 << 1, 1;
  const Vector<Rational> y2 = dense_product(GridSpec(2), x2);
  EXPECT_EQ(y2(0), Rational(3, 2));
  EXPECT_EQ(y2(1), Rational(2));

  Vector<Rational> x1(1);
  x1 << 7;
  EXPECT_EQ(dense_product(GridSpec(1), x1)(0), Rational(7, 2));
}

TEST(DenseProduct, EigenRelationOnReferenceSines) {
  const PrecisionContext ctx(40);
  const GridSpec spec(3);
  const Vector<BigFloat> x = reference_sine_vector<BigFloat>(spec, ctx);
  const Vector<BigFloat> y = dense_product(spec, x);
  const BigFloat lambda = 2 + big(decimal_sqrt(3, 50), 50);
  for (int k = 0; k < 3; ++k) EXPECT_LT(mp::abs(y(k) - lambda * x(k)), big(ten_to_minus(37), 50));
}

TEST(DenseProduct, Errors) {
  Vector<double> x(3);
  x.setOnes();
  EXPECT_THROW(dense_product(GridSpec(4), x), DimensionMismatch);
  Vector<double> big_x(kDenseLimit + 1);
  big_x.setOnes();
  EXPECT_THROW(dense_product(GridSpec(kDenseLimit + 1), big_x), SizeGateExceeded);
}

TEST(VerifyStar, SingleEquation) {
  const StarReport r = verify_star(GridSpec(1), PrecisionContext(30));
  ASSERT_EQ(r.equations.size(), 1u);
  EXPECT_EQ(r.lambda, BigFloat("0.5", 30));
  EXPECT_EQ(r.equations[0].gap, 0);
  EXPECT_TRUE(r.passed);
}

TEST(VerifyStar, ThreeAtFiftyDigits) {
  const StarReport r = verify_star(GridSpec(3), PrecisionContext(50));
  EXPECT_EQ(r.equations.size(), 3u);
  EXPECT_LT(r.max_gap, big(ten_to_minus(45), 60));
  EXPECT_TRUE(r.passed);
}

TEST(VerifyStar, HundredAtThirtyDigits) {
  const StarReport r = verify_star(GridSpec(100), PrecisionContext(30));
  EXPECT_LT(r.max_gap, big(ten_to_minus(25), 40));
  EXPECT_TRUE(r.passed);
}

TEST(VerifyStar, GapShrinksWithPrecision) {
  for (long n : {5L, 17L, 64L}) {
    BigFloat previous;
    bool first = true;
    for (int digits : {20, 40, 80}) {
      const StarReport r = verify_star(GridSpec(n), PrecisionContext(digits));
      EXPECT_TRUE(r.passed);
      if (!first) EXPECT_LT(r.max_gap, previous) << "n " << n << " digits " << digits;
      previous = r.max_gap;
      first = false;
    }
  }
}

}  // namespace
}  // namespace kunstweg
