#pragma once

// Power iteration on the Kunstweg matrix. Each step applies M and divides by
// the last component, so the normalization factor is the running estimate of
// lambda and the iterate converges to (sin alpha, ..., sin (n-1) alpha, 1).

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "kunstweg/operator.hpp"

namespace kunstweg {

enum class StartPreset { ones, ramp, last_only };

std::optional<StartPreset> parse_start_preset(std::string_view name);
std::string_view to_string(StartPreset preset);

enum class Termination { converged, max_steps, exact_step_cap };

std::string_view to_string(Termination termination);

template <class Scalar>
Vector<Scalar> start_vector(StartPreset preset, const GridSpec& spec, const PrecisionContext& ctx = PrecisionContext{}) {
  using T = ScalarTraits<Scalar>;
  const long n = spec.n();
  Vector<Scalar> x(n);
  for (long k = 0; k < n; ++k) {
    switch (preset) {
      case StartPreset::ones:
        x(k) = T::from_int(1, ctx);
        break;
      case StartPreset::ramp:
        x(k) = T::from_rational(Rational(k + 1, n), ctx);
        break;
      case StartPreset::last_only:
        x(k) = T::from_int(k + 1 == n ? 1 : 0, ctx);
        break;
    }
  }
  return x;
}

template <class Scalar>
struct IterationConfig {
  IterationConfig(GridSpec spec_, Scalar tolerance_, PrecisionContext precision_ = PrecisionContext{})
      : spec(spec_), tolerance(std::move(tolerance_)), precision(precision_) {}

  GridSpec spec;
  std::variant<StartPreset, Vector<Scalar>> start = StartPreset::ones;
  long max_steps = 1000;
  /// Stop once the max-norm distance between successive iterates is <= tolerance.
  Scalar tolerance;
  PrecisionContext precision;
  /// Exact arithmetic grows in bit length every step, so exact modes never run
  /// more than this many steps regardless of max_steps.
  long exact_step_cap = 64;
};

template <class Scalar>
struct IterationStep {
  long step = 0;
  /// Last component of M x before normalization.
  Scalar lambda_estimate;
  /// Max-norm distance to the previous iterate.
  Scalar delta;
};

template <class Scalar>
struct IterationTrace {
  long n = 0;
  std::vector<IterationStep<Scalar>> steps;
  Termination termination = Termination::max_steps;
  /// max_j |(Mx)_j - mu x_j| for the returned x, with mu = (Mx)_n.
  Scalar final_residual;

  bool converged() const noexcept { return termination == Termination::converged; }
  long step_count() const noexcept { return static_cast<long>(steps.size()); }
};

template <class Scalar>
struct IterationResult {
  Vector<Scalar> vector;
  IterationTrace<Scalar> trace;
};

namespace detail {

template <class Scalar>
void validate(const IterationConfig<Scalar>& cfg, const Vector<Scalar>& start) {
  using T = ScalarTraits<Scalar>;
  if (!(cfg.tolerance > 0)) throw ConfigurationError("tolerance must be > 0");
  if (cfg.max_steps < 1) throw ConfigurationError("max_steps must be >= 1");
  if (cfg.exact_step_cap < 1) throw ConfigurationError("exact_step_cap must be >= 1");
  if (start.size() != cfg.spec.n()) throw DimensionMismatch(cfg.spec.n(), static_cast<long>(start.size()));
  bool any_positive = false;
  for (Eigen::Index k = 0; k < start.size(); ++k) {
    if (!T::is_finite(start(k))) throw ConfigurationError("start vector has a non-finite entry");
    if (start(k) < 0) throw ConfigurationError("start vector has a negative entry");
    if (start(k) > 0) any_positive = true;
  }
  if (!any_positive) throw ConfigurationError("start vector needs at least one positive entry");
}

}  // namespace detail

template <class Scalar>
IterationResult<Scalar> iterate(const IterationConfig<Scalar>& cfg) {
  using T = ScalarTraits<Scalar>;
  const KunstwegOperator op(cfg.spec);
  Vector<Scalar> x = std::holds_alternative<StartPreset>(cfg.start)
                         ? start_vector<Scalar>(std::get<StartPreset>(cfg.start), cfg.spec, cfg.precision)
                         : std::get<Vector<Scalar>>(cfg.start);
  detail::validate(cfg, x);

  const long n = cfg.spec.n();
  const bool capped = is_exact_v<Scalar> && cfg.exact_step_cap < cfg.max_steps;
  const long limit = capped ? cfg.exact_step_cap : cfg.max_steps;

  IterationResult<Scalar> result;
  result.trace.n = n;
  result.trace.steps.reserve(static_cast<std::size_t>(std::min<long>(limit, 4096)));
  result.trace.termination = capped ? Termination::exact_step_cap : Termination::max_steps;

  for (long step = 1; step <= limit; ++step) {
    Vector<Scalar> y = apply(op, x);
    if constexpr (!is_exact_v<Scalar>) {
      for (Eigen::Index k = 0; k < n; ++k) {
        if (!T::is_finite(y(k))) {
          throw NumericError(NumericError::Kind::overflow,
                             "non-finite value at step " + std::to_string(step));
        }
      }
    }
    // (Mx)_n = sum_i i x_i (last column halved); zero only for x = 0
    Scalar mu = y(n - 1);
    if (mu == 0) throw NumericError(NumericError::Kind::zero_vector, "iterate collapsed to the zero vector");

    y /= mu;
    Scalar delta = T::abs(y(0) - x(0));
    for (Eigen::Index k = 1; k < n; ++k) {
      Scalar d = T::abs(y(k) - x(k));
      if (d > delta) delta = std::move(d);
    }
    x = std::move(y);
    const bool done = delta <= cfg.tolerance;
    result.trace.steps.push_back({step, std::move(mu), std::move(delta)});
    if (done) {
      result.trace.termination = Termination::converged;
      break;
    }
  }

  const Vector<Scalar> y = apply(op, x);
  const Scalar mu = y(n - 1);
  Scalar residual = T::from_int(0, cfg.precision);
  for (Eigen::Index k = 0; k < n; ++k) {
    Scalar d = T::abs(y(k) - mu * x(k));
    if (d > residual) residual = std::move(d);
  }
  result.trace.final_residual = std::move(residual);
  result.vector = std::move(x);
  return result;
}

/// Per-step normalization factors.
template <class Scalar>
std::vector<Scalar> lambda_estimates(const IterationTrace<Scalar>& trace) {
  if (trace.steps.empty()) throw ConfigurationError("trace has no steps");
  std::vector<Scalar> out;
  out.reserve(trace.steps.size());
  for (const auto& s : trace.steps) out.push_back(s.lambda_estimate);
  return out;
}

/// Bound on |mu - lambda| for the nearest eigenvalue lambda, where mu is the
/// normalization factor of the returned vector.
///
/// M = A D with A = [min(i, j)] symmetric positive definite and
/// D = diag(1, ..., 1, 1/2), so M is similar to the symmetric D^1/2 A D^1/2 via
/// an eigenvector basis of condition number sqrt(2). Bauer-Fike then gives
/// |mu - lambda| <= sqrt(2) |r|_2 / |x|_2 <= sqrt(2 n) |r|_inf, using |x|_2 >= 1
/// since the last entry is 1.
template <class Scalar>
Scalar lambda_error_bound(const IterationTrace<Scalar>& trace) {
  static_assert(!is_exact_v<Scalar>, "bound needs a square root");
  using std::sqrt;
  return sqrt(Scalar(2 * trace.n)) * trace.final_residual;
}

struct SineTableRow {
  long j = 0;
  Rational degrees;
  BigFloat sine;
  BigFloat reference;
  BigFloat abs_error;
};

struct SineTable {
  long n = 0;
  int digits = 0;
  long steps = 0;
  std::vector<SineTableRow> rows;
  BigFloat max_abs_error;
};

/// Extra digits carried by the iteration behind a table.
inline constexpr int kTableGuardDigits = 10;

/// Sine table for angles j * 90/n degrees, j = 1..n, computed by the power
/// iteration at digits + kTableGuardDigits with tolerance 10^-(digits + 2).
/// Throws PrecisionError when digits is outside [2, ceiling] and
/// ConvergenceError when the iteration stalls.
SineTable sine_table(const GridSpec& spec, int digits, int ceiling = PrecisionContext::kDefaultCeiling);

/// |value - reference| <= one unit in the `significant`-th digit of reference.
bool agrees_to_significant_digits(const BigFloat& value, const BigFloat& reference, int significant);

}  // namespace kunstweg
