#include "kunstweg/iteration.hpp"

namespace kunstweg {

std::optional<StartPreset> parse_start_preset(std::string_view name) {
  if (name == "ones") return StartPreset::ones;
  if (name == "ramp") return StartPreset::ramp;
  if (name == "last-only") return StartPreset::last_only;
  return std::nullopt;
}

std::string_view to_string(StartPreset preset) {
  switch (preset) {
    case StartPreset::ones:
      return "ones";
    case StartPreset::ramp:
      return "ramp";
    case StartPreset::last_only:
      return "last-only";
  }
  return "unknown";
}

std::string_view to_string(Termination termination) {
  switch (termination) {
    case Termination::converged:
      return "converged";
    case Termination::max_steps:
      return "max_steps";
    case Termination::exact_step_cap:
      return "exact_step_cap";
  }
  return "unknown";
}

bool agrees_to_significant_digits(const BigFloat& value, const BigFloat& reference, int significant) {
  return mp::abs(value - reference) <= significant_digit_unit(reference, significant);
}

SineTable sine_table(const GridSpec& spec, int digits, int ceiling) {
  const PrecisionContext requested(digits, ceiling);
  const PrecisionContext work(digits + kTableGuardDigits, std::max(ceiling, digits + kTableGuardDigits));
  using T = ScalarTraits<BigFloat>;

  IterationConfig<BigFloat> cfg(spec, mp::pow(T::from_int(10, work), -(digits + 2)), work);
  cfg.start = StartPreset::ones;
  // the error contracts by roughly 1/9 per step
  cfg.max_steps = 20L * (digits + 2) + 100;
  const IterationResult<BigFloat> run = iterate(cfg);
  if (!run.trace.converged()) {
    throw ConvergenceError("sine table iteration did not converge in " + std::to_string(run.trace.step_count()) +
                               " steps",
                           run.trace.step_count());
  }

  const ReferenceTrig trig(work);
  SineTable table;
  table.n = spec.n();
  table.digits = requested.digits();
  table.steps = run.trace.step_count();
  table.max_abs_error = T::from_int(0, work);
  table.rows.reserve(static_cast<std::size_t>(spec.n()));
  for (long j = 1; j <= spec.n(); ++j) {
    SineTableRow row;
    row.j = j;
    row.degrees = spec.angle_degrees(j);
    row.sine = run.vector(j - 1);
    row.reference = trig.sin(spec.angle_turns(j));
    row.abs_error = mp::abs(row.sine - row.reference);
    if (row.abs_error > table.max_abs_error) table.max_abs_error = row.abs_error;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace kunstweg
