#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "kunstweg/operator.hpp"
#include "support/counting_scalar.hpp"
#include "support/test_util.hpp"

namespace kunstweg {
namespace {

using testing::big;
using testing::decimal_sqrt;
using testing::ten_to_minus;

Vector<Rational> random_positive(std::mt19937_64& rng, long n) {
  Vector<Rational> x(n);
  for (long k = 0; k < n; ++k) x(k) = testing::random_rational(rng, 0, 5, 97) + Rational(1, 1000);
  return x;
}

TEST(GridSpec, AngleIsExact) {
  for (long n : {1L, 2L, 3L, 7L, 90L, 1000L}) {
    const GridSpec spec(n);
    EXPECT_EQ(spec.alpha_turns(), Rational(1, 4 * n));
    EXPECT_EQ(spec.alpha_degrees(), Rational(90, n));
    EXPECT_TRUE(spec.closes_quarter_turn());
  }
  EXPECT_NEAR(GridSpec(3).alpha_radians(), std::numbers::pi / 6, 1e-16);
  EXPECT_THROW(GridSpec(0), ConfigurationError);
  EXPECT_THROW(GridSpec(-4), ConfigurationError);
}

TEST(BuildDense, SmallMatrices) {
  const Matrix<Rational> m1 = build_dense<Rational>(GridSpec(1));
  ASSERT_EQ(m1.rows(), 1);
  EXPECT_EQ(m1(0, 0), Rational(1, 2));

  const Matrix<Rational> m2 = build_dense<Rational>(GridSpec(2));
  EXPECT_EQ(m2(0, 0), Rational(1));
  EXPECT_EQ(m2(0, 1), Rational(1, 2));
  EXPECT_EQ(m2(1, 0), Rational(1));
  EXPECT_EQ(m2(1, 1), Rational(1));

  const Matrix<Rational> m4 = build_dense<Rational>(GridSpec(4));
  // row 3 (1-based)
  EXPECT_EQ(m4(2, 0), Rational(1));
  EXPECT_EQ(m4(2, 1), Rational(2));
  EXPECT_EQ(m4(2, 2), Rational(3));
  EXPECT_EQ(m4(2, 3), Rational(3, 2));
}

TEST(BuildDense, MatchesEntryAccessorAtBothEnds) {
  const long n = 9;
  const KunstwegOperator op{GridSpec(n)};
  const Matrix<Rational> m = build_dense<Rational>(op.spec());
  for (long j = 1; j <= n; ++j) {
    for (long i = 1; i <= n; ++i) {
      EXPECT_EQ(m(j - 1, i - 1), op.entry(j, i));
      EXPECT_EQ(Rational(op.doubled_entry(j, i)), 2 * op.entry(j, i));
    }
  }
  // row 1 and row n, columns 1 and n
  EXPECT_EQ(op.entry(1, 1), Rational(1));
  EXPECT_EQ(op.entry(1, n), Rational(1, 2));
  EXPECT_EQ(op.entry(n, 1), Rational(1));
  EXPECT_EQ(op.entry(n, n - 1), Rational(n - 1));
  EXPECT_EQ(op.entry(n, n), Rational(n, 2));
  EXPECT_THROW(op.entry(0, 1), IndexOutOfRange);
  EXPECT_THROW(op.entry(1, n + 1), IndexOutOfRange);
}

TEST(BuildDense, Gate) { EXPECT_THROW(build_dense<double>(GridSpec(kDenseLimit + 1)), SizeGateExceeded); }

TEST(Apply, Examples) {
  const KunstwegOperator op1{GridSpec(1)};
  Vector<Rational> x1(1);
  x1 << 1;
  EXPECT_EQ(apply(op1, x1)(0), Rational(1, 2));

  const KunstwegOperator op2{GridSpec(2)};
  Vector<Rational> x2(2);
  x2 << 1, 1;
  const Vector<Rational> y2 = apply(op2, x2);
  EXPECT_EQ(y2(0), Rational(3, 2));
  EXPECT_EQ(y2(1), Rational(2));

  // (2 + sqrt 3) * (1/2, sqrt(3)/2, 1)
  const KunstwegOperator op3{GridSpec(3)};
  Vector<double> x3(3);
  x3 << 0.5, std::sqrt(3.0) / 2, 1.0;
  const Vector<double> y3 = apply(op3, x3);
  EXPECT_NEAR(y3(0), 1.8660254037844386, 1e-15);
  EXPECT_NEAR(y3(1), 3.2320508075688772, 1e-15);
  EXPECT_NEAR(y3(2), 3.7320508075688772, 1e-15);
}

TEST(Apply, DimensionMismatchNamesLengths) {
  const KunstwegOperator op{GridSpec(5)};
  Vector<double> x(4);
  x.setOnes();
  try {
    apply(op, x);
    FAIL() << "expected DimensionMismatch";
  } catch (const DimensionMismatch& e) {
    EXPECT_EQ(e.expected(), 5);
    EXPECT_EQ(e.actual(), 4);
  }
}

TEST(Apply, AcceptsEigenExpressions) {
  const KunstwegOperator op{GridSpec(4)};
  const Vector<double> x = Vector<double>::LinSpaced(4, 1.0, 4.0);
  const Vector<double> from_expr = apply(op, 2.0 * x);
  const Vector<double> from_value = 2.0 * apply(op, x);
  EXPECT_TRUE(from_expr.isApprox(from_value));
}

TEST(Apply, AgreesWithDenseExactly) {
  std::mt19937_64 rng(2024);
  for (long n = 1; n <= 64; n += 9) {
    const KunstwegOperator op{GridSpec(n)};
    for (int trial = 0; trial < 10; ++trial) {
      const Vector<Rational> x = random_positive(rng, n);
      EXPECT_EQ(apply(op, x), dense_product(op.spec(), x)) << "n " << n;
    }
  }
}

TEST(Apply, RowDifferenceIdentity) {
  std::mt19937_64 rng(5);
  for (long n : {2L, 3L, 10L, 33L}) {
    const KunstwegOperator op{GridSpec(n)};
    const Vector<Rational> x = random_positive(rng, n);
    const Vector<Rational> y = apply(op, x);
    for (long j = 2; j <= n; ++j) {
      Rational rhs = x(n - 1) / 2;
      for (long i = j; i <= n - 1; ++i) rhs += x(i - 1);
      EXPECT_EQ(y(j - 1) - y(j - 2), rhs);
    }
    Rational first = x(n - 1) / 2;
    for (long i = 1; i <= n - 1; ++i) first += x(i - 1);
    EXPECT_EQ(y(0), first);
  }
}

TEST(Apply, Positivity) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const long n = 1 + trial;
    Vector<double> x(n);
    for (long k = 0; k < n; ++k) x(k) = u(rng) + 1e-12;
    const Vector<double> y = apply(KunstwegOperator{GridSpec(n)}, x);
    EXPECT_TRUE((y.array() > 0).all());
  }
}

TEST(Apply, FloatingWithinUlpBudgetOfExact) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (long n : {1L, 8L, 64L, 300L}) {
    const KunstwegOperator op{GridSpec(n)};
    Vector<double> x(n);
    Vector<Rational> xq(n);
    for (long k = 0; k < n; ++k) {
      x(k) = u(rng);
      xq(k) = Rational(x(k));
    }
    const Vector<double> y = apply(op, x);
    const Vector<Rational> yq = apply(op, xq);
    for (long k = 0; k < n; ++k) {
      const double exact = ScalarTraits<double>::from_rational(yq(k));
      const double ulp = std::nextafter(exact, INFINITY) - exact;
      EXPECT_LE(std::fabs(y(k) - exact), 4.0 * n * ulp) << "n " << n << " k " << k;
    }
  }
}

TEST(Apply, LinearCost) {
  for (long n : {1L, 2L, 100L, 1L << 14}) {
    const KunstwegOperator op{GridSpec(n)};
    Vector<testing::Counted> x(n);
    for (long k = 0; k < n; ++k) x(k) = 1.0;
    testing::reset_counts();
    apply(op, x);
    EXPECT_EQ(testing::g_counts.additions, 2 * (n - 1));
    EXPECT_EQ(testing::g_counts.multiplications, 0);
    EXPECT_EQ(testing::g_counts.divisions, 1);
  }
}

TEST(ApplyDoubled, IntegerPathMatchesTwiceRational) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> d(0, 1000);
  for (long n : {1L, 2L, 5L, 40L}) {
    const KunstwegOperator op{GridSpec(n)};
    Vector<Integer> x(n);
    Vector<Rational> xq(n);
    for (long k = 0; k < n; ++k) {
      x(k) = d(rng);
      xq(k) = Rational(x(k));
    }
    const Vector<Integer> y = apply_doubled(op, x);
    const Vector<Rational> yq = dense_product(op.spec(), xq);
    for (long k = 0; k < n; ++k) EXPECT_EQ(Rational(y(k)), 2 * yq(k));
  }
}

TEST(DyadicVector, PowersMatchRationalIteration) {
  const KunstwegOperator op{GridSpec(6)};
  DyadicVector v{Vector<Integer>::Ones(6), 0};
  Vector<Rational> q = Vector<Rational>::Ones(6);
  for (int step = 0; step < 12; ++step) {
    v = apply(op, v);
    q = apply(op, q);
  }
  EXPECT_EQ(v.exponent, 12u);
  EXPECT_EQ(v.value(), q);
}

TEST(EigenLambda, ClosedFormValues) {
  EXPECT_EQ(eigen_lambda<Rational>(GridSpec(1)), Rational(1, 2));
  EXPECT_DOUBLE_EQ(eigen_lambda<double>(GridSpec(1)), 0.5);
  EXPECT_NEAR(eigen_lambda<double>(GridSpec(2)), 1.0 / (2.0 - std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(eigen_lambda<double>(GridSpec(3)), 2.0 + std::sqrt(3.0), 4e-16 * 4);

  const PrecisionContext ctx(50);
  const BigFloat l3 = eigen_lambda<BigFloat>(GridSpec(3), ctx);
  const BigFloat expected = 2 + big(decimal_sqrt(3, 60), 60);
  EXPECT_LT(mp::abs(l3 - expected), big(ten_to_minus(48), 60));
  EXPECT_EQ(l3.precision(), 50u);
}

TEST(EigenLambda, ExactModeRejectsIrrational) {
  EXPECT_THROW(eigen_lambda<Rational>(GridSpec(2)), NumericError);
}

TEST(EigenLambda, HalfAngleFormMatchesCosineForm) {
  const PrecisionContext ctx(60);
  for (long n : {1L, 2L, 5L, 31L, 500L}) {
    const GridSpec spec(n);
    const BigFloat c = cos_turns<BigFloat>(spec.alpha_turns(), ctx);
    const BigFloat from_cos = 1 / (2 * (1 - c));
    const BigFloat from_half = eigen_lambda<BigFloat>(spec, ctx);
    EXPECT_LT(mp::abs(from_cos - from_half) / from_half, big(ten_to_minus(50), 70)) << n;
  }
}

TEST(EigenResidual, Examples) {
  Vector<Rational> one(1);
  one << 1;
  EXPECT_EQ(eigen_residual(KunstwegOperator{GridSpec(1)}, one), Rational(0));

  const PrecisionContext ctx(50);
  const KunstwegOperator op3{GridSpec(3)};
  const Vector<BigFloat> x = reference_sine_vector<BigFloat>(op3.spec(), ctx);
  EXPECT_LT(eigen_residual(op3, x, ctx), big(ten_to_minus(45), 60));

  const Vector<double> ones = Vector<double>::Ones(3);
  EXPECT_GT(eigen_residual(op3, ones), 0.1);
}

TEST(EigenResidual, DoubleModeBound) {
  const double eps = std::numeric_limits<double>::epsilon();
  for (long n = 1; n <= 256; n += (n < 16 ? 1 : 15)) {
    const GridSpec spec(n);
    const KunstwegOperator op(spec);
    const double lambda = eigen_lambda<double>(spec);
    const double r = eigen_residual(op, reference_sine_vector<double>(spec));
    EXPECT_LT(r, 8.0 * n * eps * lambda) << "n " << n;
  }
}

}  // namespace
}  // namespace kunstweg
