#pragma once

// Chained regular 4n-gons.
//
// Polygon j (1 <= j <= n) is walked along half of its circumference: 2n sides
// of length l whose direction angles are j alpha, (j+1) alpha, ...,
// (j + 2n - 1) alpha. Starting from P_0 = (R, 0) with the common center C at
// the origin, the walk along polygon j goes from P_{j-1} to P_j, and every
// P_j lands on the circle of radius R = 2 l lambda at polar angle j alpha.

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "kunstweg/operator.hpp"
#include "kunstweg/surd.hpp"

namespace kunstweg {

template <class Scalar>
using Point = Eigen::Matrix<Scalar, 2, 1>;

/// sin/cos of a rational turn count for the coordinate computations.
template <class Scalar>
struct PlaneTrig;

/// Platform trigonometry after exact octant reduction, independent of the
/// reference evaluator.
template <>
struct PlaneTrig<double> {
  static double sin_turns(const Rational& turns) {
    const OctantReduction r = reduce_to_octant(turns);
    const double x = 2.0 * std::numbers::pi * ScalarTraits<double>::from_rational(r.reduced);
    const double v = r.use_cosine ? std::cos(x) : std::sin(x);
    return r.sign < 0 ? -v : v;
  }
};

template <>
struct PlaneTrig<QuadraticSurd> {
  static QuadraticSurd sin_turns(const Rational& turns) { return ScalarTraits<QuadraticSurd>::exact_sin_turns(turns); }
};

/// (cos k alpha, sin k alpha).
template <class Scalar>
Point<Scalar> unit_direction(const GridSpec& spec, long k) {
  const Rational t = spec.angle_turns(k);
  return Point<Scalar>(PlaneTrig<Scalar>::sin_turns(t + Rational(1, 4)), PlaneTrig<Scalar>::sin_turns(t));
}

namespace detail {

/// Neumaier-compensated accumulation for double, plain for exact types.
template <class Scalar>
class Accumulator {
 public:
  Accumulator() : sum_(0L), compensation_(0L) {}

  void add(const Scalar& v) {
    if constexpr (is_exact_v<Scalar>) {
      sum_ += v;
    } else {
      const Scalar t = sum_ + v;
      if (std::fabs(sum_) >= std::fabs(v)) {
        compensation_ += (sum_ - t) + v;
      } else {
        compensation_ += (v - t) + sum_;
      }
      sum_ = t;
    }
  }

  Scalar value() const { return sum_ + compensation_; }

 private:
  Scalar sum_;
  Scalar compensation_;
};

/// Relative chain tolerance in floating mode.
inline constexpr double kRelativeTolerance = 1e-9;

}  // namespace detail

/// ||p| - radius|, or ||p|^2 - radius^2| in exact mode
/// (zero exactly when p is on the circle).
template <class Scalar>
Scalar radial_deviation(const Point<Scalar>& p, const Scalar& radius) {
  using T = ScalarTraits<Scalar>;
  if constexpr (is_exact_v<Scalar>) {
    return T::abs(p.x() * p.x() + p.y() * p.y() - radius * radius);
  } else {
    return T::abs(std::hypot(p.x(), p.y()) - radius);
  }
}

template <class Scalar>
struct PolygonChain {
  GridSpec spec;
  Scalar side;
  Scalar radius;
  Point<Scalar> center;
  /// P_0 ... P_n
  std::vector<Point<Scalar>> points;
  /// paths[j - 1][k] is side vector k of polygon j
  std::vector<std::vector<Point<Scalar>>> paths;
  /// 1e-9 R in floating mode, 0 in exact mode.
  Scalar tolerance;

  long n() const noexcept { return spec.n(); }
  const Point<Scalar>& point(long j) const { return points.at(static_cast<std::size_t>(j)); }
  const std::vector<Point<Scalar>>& path(long j) const { return paths.at(static_cast<std::size_t>(j - 1)); }
};

/// Builds the chain for side length l and checks its invariants. Throws
/// GeometryError naming the worst j if any invariant fails.
template <class Scalar>
PolygonChain<Scalar> build_chain(const GridSpec& spec, const Scalar& side,
                                 const PrecisionContext& ctx = PrecisionContext{}) {
  using T = ScalarTraits<Scalar>;
  if (!(side > 0)) throw ConfigurationError("side length must be > 0");
  const long n = spec.n();

  PolygonChain<Scalar> chain{spec,
                             side,
                             2 * side * eigen_lambda<Scalar>(spec, ctx),
                             Point<Scalar>(T::from_int(0), T::from_int(0)),
                             {},
                             {},
                             T::from_int(0)};
  if constexpr (!is_exact_v<Scalar>) chain.tolerance = detail::kRelativeTolerance * chain.radius;

  chain.points.reserve(static_cast<std::size_t>(n) + 1);
  chain.paths.reserve(static_cast<std::size_t>(n));
  chain.points.emplace_back(chain.radius, T::from_int(0));
  for (long j = 1; j <= n; ++j) {
    std::vector<Point<Scalar>> path;
    path.reserve(static_cast<std::size_t>(2 * n));
    detail::Accumulator<Scalar> dx;
    detail::Accumulator<Scalar> dy;
    for (long k = 0; k < 2 * n; ++k) {
      Point<Scalar> v = side * unit_direction<Scalar>(spec, j + k);
      dx.add(v.x());
      dy.add(v.y());
      path.push_back(std::move(v));
    }
    const Point<Scalar>& prev = chain.points.back();
    chain.points.emplace_back(prev.x() + dx.value(), prev.y() + dy.value());
    chain.paths.push_back(std::move(path));
  }

  // side lengths
  long worst_j = 0;
  Scalar worst = T::from_int(0);
  for (long j = 1; j <= n; ++j) {
    for (const auto& v : chain.path(j)) {
      const Scalar d = radial_deviation<Scalar>(v, side);
      if (d > worst) {
        worst = d;
        worst_j = j;
      }
    }
  }
  if (worst > chain.tolerance) throw GeometryError("side length", worst_j, T::to_double(worst));

  // common circle about C
  worst = T::from_int(0);
  for (long j = 0; j <= n; ++j) {
    const Scalar d = radial_deviation<Scalar>(chain.point(j), chain.radius);
    if (d > worst) {
      worst = d;
      worst_j = j;
    }
  }
  if (worst > chain.tolerance) throw GeometryError("common circle", worst_j, T::to_double(worst));

  const Scalar closure = T::abs(chain.point(n).x());
  if (closure > chain.tolerance) throw GeometryError("P_n on the y-axis", n, T::to_double(closure));
  return chain;
}

/// sum_{k=0}^{2n-1} l sin((j + k) alpha), summed directly without folding.
template <class Scalar>
Scalar path_y_displacement(const GridSpec& spec, long j, const Scalar& side) {
  if (j < 1 || j > spec.n()) throw IndexOutOfRange(j, 1, spec.n());
  detail::Accumulator<Scalar> acc;
  for (long k = 0; k < 2 * spec.n(); ++k) acc.add(PlaneTrig<Scalar>::sin_turns(spec.angle_turns(j + k)));
  return side * acc.value();
}

/// The same sum after folding with sin(90) = 1, sin(180) = 0 and
/// sin(phi) = sin(180 - phi): 2 l (sin j alpha + ... + sin (n-1) alpha) + l
/// for j < n, and l for j = n.
template <class Scalar>
Scalar folded_path_sum(const GridSpec& spec, long j, const Scalar& side) {
  const long n = spec.n();
  if (j < 1 || j > n) throw IndexOutOfRange(j, 1, n);
  if (j == n) return side;
  detail::Accumulator<Scalar> acc;
  for (long i = j; i < n; ++i) acc.add(PlaneTrig<Scalar>::sin_turns(spec.angle_turns(i)));
  return side * (2 * acc.value() + Scalar(1L));
}

template <class Scalar>
struct StarCertificate {
  long j = 0;
  /// P_j.y - P_{j-1}.y from coordinates
  Scalar geometric;
  /// folded_path_sum(j)
  Scalar folded;
  Scalar gap;
  bool passed = false;
};

/// Compares each vertical step of the chain with the folded path sum, i.e.
/// R sin(j alpha) - R sin((j-1) alpha) = 2l (sin j alpha + ... ) + l.
template <class Scalar>
std::vector<StarCertificate<Scalar>> certify_star(const PolygonChain<Scalar>& chain) {
  using T = ScalarTraits<Scalar>;
  std::vector<StarCertificate<Scalar>> out;
  out.reserve(static_cast<std::size_t>(chain.n()));
  for (long j = 1; j <= chain.n(); ++j) {
    StarCertificate<Scalar> c;
    c.j = j;
    c.geometric = chain.point(j).y() - chain.point(j - 1).y();
    c.folded = folded_path_sum<Scalar>(chain.spec, j, chain.side);
    c.gap = T::abs(c.geometric - c.folded);
    c.passed = c.gap <= chain.tolerance;
    out.push_back(std::move(c));
  }
  return out;
}

/// All 4n vertices of polygon j, starting at P_{j-1} and walking
/// counter-clockwise. The first 2n + 1 vertices are the half path.
template <class Scalar>
std::vector<Point<Scalar>> polygon_outline(const PolygonChain<Scalar>& chain, long j) {
  const long n = chain.n();
  if (j < 1 || j > n) throw IndexOutOfRange(j, 1, n);
  std::vector<Point<Scalar>> out;
  out.reserve(static_cast<std::size_t>(4 * n));
  out.push_back(chain.point(j - 1));
  for (long m = 0; m + 1 < 4 * n; ++m) {
    const Point<Scalar>& v = m < 2 * n ? chain.path(j)[static_cast<std::size_t>(m)]
                                       : Point<Scalar>(chain.side * unit_direction<Scalar>(chain.spec, j + m));
    out.push_back(out.back() + v);
  }
  return out;
}

/// Which side vectors of path j drop out of the y-sum: the horizontal one
/// (angle 180 deg) and pairs with opposite vertical components.
struct CancellationStructure {
  /// 0-based index of the horizontal vector in the path
  long horizontal = 0;
  /// (k, k') with sin((j+k) alpha) = -sin((j+k') alpha)
  std::vector<std::pair<long, long>> pairs;
};

CancellationStructure cancellation_structure(const GridSpec& spec, long j);

}  // namespace kunstweg
