#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kunstweg/iteration.hpp"
#include "kunstweg/oracle.hpp"
#include "kunstweg/svg.hpp"

namespace kunstweg::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kDoubleDigits = 17;

enum class Format { csv, json, text };

struct RunConfig {
  long n = 0;
  std::optional<int> digits;
  std::optional<std::string> tolerance;
  long max_steps = 1000;
  std::string start = "ones";
  std::string format = "text";
  std::optional<std::string> out;
  // geometry
  double side = 1.0;
  std::optional<std::string> svg;
  SvgOptions svg_options;
  bool no_rays = false;
  bool no_labels = false;

  Format output_format() const {
    if (format == "csv") return Format::csv;
    if (format == "json") return Format::json;
    return Format::text;
  }
};

/// What a command produced: the artifact text and its exit status.
struct Outcome {
  std::string artifact;
  int status = kSuccess;
  std::string diagnostic;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("KUNSTWEG_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

void write_file(const std::string& path, const std::string& text) {
  const auto resolved = resolve_output(path);
  std::ofstream f(resolved, std::ios::binary);
  if (!f) throw UsageError("cannot open " + resolved.string() + " for writing");
  f << text;
  if (!f) throw UsageError("failed writing " + resolved.string());
}

std::string sci(double v) { return format_scientific(v, kDoubleDigits); }
std::string sci(const BigFloat& v, int digits) { return format_scientific(v, digits); }
std::string sci(const Rational& v, int digits) { return format_scientific(v, digits); }

/// Numeric text for a CSV cell; quoted only when it has to be.
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string line;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) line += ',';
    line += csv_cell(c);
    first = false;
  }
  return line + "\n";
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

Json header(const std::string& command, long n) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["n"] = n;
  return j;
}

std::string text_table(const std::vector<std::string>& names, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(names.size());
  for (std::size_t c = 0; c < names.size(); ++c) width[c] = names[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << r[c];
    }
    os << "\n";
  };
  emit(names);
  for (const auto& r : rows) emit(r);
  return os.str();
}

int digits_or_default(const RunConfig& cfg) { return cfg.digits.value_or(PrecisionContext::kDefaultDigits); }

// table --------------------------------------------------------------------

Outcome cmd_table(const RunConfig& cfg) {
  const GridSpec spec(cfg.n);
  const int digits = digits_or_default(cfg);
  const SineTable table = sine_table(spec, digits);
  const BigFloat limit = mp::pow(BigFloat(10, static_cast<unsigned>(digits + kTableGuardDigits)), -digits);

  Outcome result;
  bool passed = true;
  for (const auto& row : table.rows) passed = passed && row.abs_error <= limit;

  switch (cfg.output_format()) {
    case Format::csv: {
      result.artifact = csv_row({"j", "degrees", "sine", "abs_error"});
      for (const auto& r : table.rows) {
        result.artifact += csv_row({std::to_string(r.j), sci(r.degrees, digits), sci(r.sine, digits), sci(r.abs_error, digits)});
      }
      break;
    }
    case Format::json: {
      Json j = header("table", table.n);
      j["digits"] = digits;
      j["steps"] = table.steps;
      j["max_abs_error"] = sci(table.max_abs_error, digits);
      j["passed"] = passed;
      Json rows = Json::array();
      for (const auto& r : table.rows) {
        rows.push_back({{"j", r.j},
                        {"degrees", sci(r.degrees, digits)},
                        {"sine", sci(r.sine, digits)},
                        {"abs_error", sci(r.abs_error, digits)}});
      }
      j["rows"] = std::move(rows);
      result.artifact = json_text(j);
      break;
    }
    case Format::text: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : table.rows) {
        rows.push_back({std::to_string(r.j), format_significant(to_bigfloat(r.degrees, 40), digits),
                        format_significant(r.sine, digits), sci(r.abs_error, 3)});
      }
      result.artifact = text_table({"j", "degrees", "sine", "abs_error"}, rows);
      result.artifact += "# n = " + std::to_string(table.n) + ", " + std::to_string(digits) + " digits, " +
                         std::to_string(table.steps) + " steps, max abs error " + sci(table.max_abs_error, 3) + "\n";
      break;
    }
  }
  if (!passed) {
    result.status = kCheckFailed;
    result.diagnostic = "table error exceeds 1e-" + std::to_string(digits);
  }
  return result;
}

// iterate ------------------------------------------------------------------

template <class Scalar>
Outcome emit_trace(const RunConfig& cfg, const IterationResult<Scalar>& run, int digits, const char* mode) {
  auto num = [&](const Scalar& v) {
    if constexpr (std::is_same_v<Scalar, double>) {
      return sci(v);
    } else {
      return sci(v, digits);
    }
  };
  const auto& trace = run.trace;
  Outcome result;
  switch (cfg.output_format()) {
    case Format::csv: {
      result.artifact = csv_row({"step", "lambda_estimate", "delta"});
      for (const auto& s : trace.steps) result.artifact += csv_row({std::to_string(s.step), num(s.lambda_estimate), num(s.delta)});
      break;
    }
    case Format::json: {
      Json j = header("iterate", trace.n);
      j["mode"] = mode;
      if (cfg.digits) j["digits"] = digits;
      j["start"] = cfg.start;
      j["termination"] = std::string(to_string(trace.termination));
      j["step_count"] = trace.step_count();
      j["final_residual"] = num(trace.final_residual);
      j["lambda_error_bound"] = num(lambda_error_bound(trace));
      Json steps = Json::array();
      for (const auto& s : trace.steps) {
        steps.push_back({{"step", s.step}, {"lambda_estimate", num(s.lambda_estimate)}, {"delta", num(s.delta)}});
      }
      j["steps"] = std::move(steps);
      Json vec = Json::array();
      for (Eigen::Index k = 0; k < run.vector.size(); ++k) vec.push_back(num(run.vector(k)));
      j["vector"] = std::move(vec);
      result.artifact = json_text(j);
      break;
    }
    case Format::text: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& s : trace.steps) rows.push_back({std::to_string(s.step), num(s.lambda_estimate), num(s.delta)});
      result.artifact = text_table({"step", "lambda_estimate", "delta"}, rows);
      result.artifact += "# " + std::string(to_string(trace.termination)) + " after " +
                         std::to_string(trace.step_count()) + " steps, final residual " + num(trace.final_residual) +
                         "\n";
      break;
    }
  }
  if (!trace.converged()) {
    result.status = kNoConvergence;
    result.diagnostic = "no convergence within " + std::to_string(trace.step_count()) + " steps (" +
                        std::string(to_string(trace.termination)) + ")";
  }
  return result;
}

StartPreset start_preset(const RunConfig& cfg) {
  const auto preset = parse_start_preset(cfg.start);
  if (!preset) throw UsageError("unknown start preset '" + cfg.start + "'");
  return *preset;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || used == 0) throw UsageError("not a number: '" + text + "'");
  return v;
}

Outcome cmd_iterate(const RunConfig& cfg) {
  const GridSpec spec(cfg.n);
  const StartPreset preset = start_preset(cfg);
  if (!cfg.digits) {
    IterationConfig<double> it(spec, cfg.tolerance ? parse_double(*cfg.tolerance) : 1e-14);
    it.start = preset;
    it.max_steps = cfg.max_steps;
    return emit_trace(cfg, iterate(it), kDoubleDigits, "double");
  }
  const int digits = *cfg.digits;
  const PrecisionContext requested(digits);
  const PrecisionContext work(digits + kTableGuardDigits, std::max(requested.ceiling(), digits + kTableGuardDigits));
  BigFloat tol = mp::pow(BigFloat(10, static_cast<unsigned>(work.digits())), -(digits + 2));
  if (cfg.tolerance) {
    parse_double(*cfg.tolerance);  // syntax check
    tol = BigFloat(*cfg.tolerance, static_cast<unsigned>(work.digits()));
  }
  IterationConfig<BigFloat> it(spec, tol, work);
  it.start = preset;
  it.max_steps = cfg.max_steps;
  return emit_trace(cfg, iterate(it), digits, "bigfloat");
}

// verify -------------------------------------------------------------------

Outcome cmd_verify(const RunConfig& cfg) {
  const GridSpec spec(cfg.n);
  const int digits = digits_or_default(cfg);
  const PrecisionContext ctx(digits);
  const StarReport report = verify_star(spec, ctx);
  const BigFloat residual =
      eigen_residual(KunstwegOperator(spec), reference_sine_vector<BigFloat>(spec, ctx), ctx);
  // same scale as the equation gaps
  const BigFloat& residual_threshold = report.threshold;
  const bool residual_ok = residual <= residual_threshold;
  const bool passed = report.passed && residual_ok;

  Outcome result;
  switch (cfg.output_format()) {
    case Format::csv: {
      result.artifact = csv_row({"j", "lhs", "rhs", "gap"});
      for (const auto& e : report.equations) {
        result.artifact += csv_row({std::to_string(e.j), sci(e.lhs, digits), sci(e.rhs, digits), sci(e.gap, digits)});
      }
      break;
    }
    case Format::json: {
      Json j = header("verify", report.n);
      j["digits"] = digits;
      j["lambda"] = sci(report.lambda, digits);
      j["threshold"] = sci(report.threshold, digits);
      j["max_gap"] = sci(report.max_gap, digits);
      j["eigen_residual"] = sci(residual, digits);
      j["passed"] = passed;
      Json eqs = Json::array();
      for (const auto& e : report.equations) {
        eqs.push_back({{"j", e.j}, {"lhs", sci(e.lhs, digits)}, {"rhs", sci(e.rhs, digits)}, {"gap", sci(e.gap, digits)}});
      }
      j["equations"] = std::move(eqs);
      result.artifact = json_text(j);
      break;
    }
    case Format::text: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& e : report.equations) {
        rows.push_back({std::to_string(e.j), format_significant(e.lhs, digits), format_significant(e.rhs, digits), sci(e.gap, 3)});
      }
      result.artifact = text_table({"j", "lhs", "rhs", "gap"}, rows);
      result.artifact += "# lambda " + format_significant(report.lambda, digits) + ", max gap " + sci(report.max_gap, 3) +
                         ", eigen residual " + sci(residual, 3) + ", threshold " + sci(report.threshold, 3) + ": " +
                         (passed ? "pass" : "FAIL") + "\n";
      break;
    }
  }
  if (!passed) {
    result.status = kCheckFailed;
    result.diagnostic = report.passed ? "eigen residual above threshold" : "row-difference gap above threshold";
  }
  return result;
}

// geometry -----------------------------------------------------------------

Outcome cmd_geometry(const RunConfig& cfg) {
  const GridSpec spec(cfg.n);
  if (!(cfg.side > 0) || !std::isfinite(cfg.side)) throw UsageError("--side must be a positive number");
  const PolygonChain<double> chain = build_chain<double>(spec, cfg.side);
  const auto certs = certify_star(chain);
  bool passed = true;
  for (const auto& c : certs) passed = passed && c.passed;

  if (cfg.svg) {
    SvgOptions opts = cfg.svg_options;
    opts.rays = !cfg.no_rays;
    opts.labels = !cfg.no_labels;
    write_file(*cfg.svg, render_svg(chain, opts));
  }

  Outcome result;
  switch (cfg.output_format()) {
    case Format::csv: {
      result.artifact = csv_row({"j", "geometric", "folded", "gap", "passed"});
      for (const auto& c : certs) {
        result.artifact +=
            csv_row({std::to_string(c.j), sci(c.geometric), sci(c.folded), sci(c.gap), c.passed ? "true" : "false"});
      }
      break;
    }
    case Format::json: {
      Json j = header("geometry", chain.n());
      j["side"] = sci(chain.side);
      j["radius"] = sci(chain.radius);
      j["tolerance"] = sci(chain.tolerance);
      j["passed"] = passed;
      Json points = Json::array();
      for (const auto& p : chain.points) points.push_back({sci(p.x()), sci(p.y())});
      j["points"] = std::move(points);
      Json list = Json::array();
      for (const auto& c : certs) {
        list.push_back({{"j", c.j},
                        {"geometric", sci(c.geometric)},
                        {"folded", sci(c.folded)},
                        {"gap", sci(c.gap)},
                        {"passed", c.passed}});
      }
      j["certificates"] = std::move(list);
      result.artifact = json_text(j);
      break;
    }
    case Format::text: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& c : certs) {
        rows.push_back({std::to_string(c.j), sci(c.geometric), sci(c.folded), format_scientific(c.gap, 3),
                        c.passed ? "pass" : "FAIL"});
      }
      result.artifact = text_table({"j", "geometric", "folded", "gap", "passed"}, rows);
      result.artifact += "# R = " + sci(chain.radius) + ", tolerance " + format_scientific(chain.tolerance, 3) + "\n";
      break;
    }
  }
  if (!passed) {
    result.status = kCheckFailed;
    result.diagnostic = "geometric certificate above tolerance";
  }
  return result;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "Number of grid steps; angles are j * 90/n degrees")->required();
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  sub->add_option("--out", cfg.out, "Write the artifact here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app("Sine tables from the Kunstweg power iteration, with oracle and geometric checks", "kunstweg");
  app.require_subcommand(1, 1);

  CLI::App* table = app.add_subcommand("table", "Sine table for j = 1..n at a given number of digits");
  add_common(table, cfg);
  table->add_option("--digits", cfg.digits, "Significant digits (2..200, default 20)");

  CLI::App* iter = app.add_subcommand("iterate", "Power-iteration trace: lambda estimate and step size per step");
  add_common(iter, cfg);
  iter->add_option("--digits", cfg.digits, "Run in multiprecision with this many digits (default: double)");
  iter->add_option("--tolerance", cfg.tolerance, "Stop when successive iterates differ by at most this (default 1e-14)");
  iter->add_option("--max-steps", cfg.max_steps, "Step limit")->capture_default_str();
  iter->add_option("--start", cfg.start, "Start vector: ones, ramp, last-only")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Check the row-difference equations and the eigen relation");
  add_common(verify, cfg);
  verify->add_option("--digits", cfg.digits, "Working precision in digits (2..200, default 20)");

  CLI::App* geom = app.add_subcommand("geometry", "Build the polygon chain, certify it, optionally draw it");
  add_common(geom, cfg);
  geom->add_option("--side", cfg.side, "Polygon side length l")->capture_default_str();
  geom->add_option("--svg", cfg.svg, "Write an SVG figure to this path");
  geom->add_flag("--path-vectors", cfg.svg_options.path_vectors, "Draw the half-circumference side vectors");
  geom->add_flag("--cancellations", cfg.svg_options.cancellations, "Dash the vectors that cancel in the y-sum");
  geom->add_flag("--no-rays", cfg.no_rays, "Omit the rays from C");
  geom->add_flag("--no-labels", cfg.no_labels, "Omit point labels");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "kunstweg: " << e.what() << "\n";
    return kUsage;
  }

  Outcome result;
  try {
    if (table->parsed()) {
      result = cmd_table(cfg);
    } else if (iter->parsed()) {
      result = cmd_iterate(cfg);
    } else if (verify->parsed()) {
      result = cmd_verify(cfg);
    } else {
      result = cmd_geometry(cfg);
    }
    if (cfg.out) {
      write_file(*cfg.out, result.artifact);
    } else {
      out << result.artifact;
    }
  } catch (const ConfigurationError& e) {
    err << "kunstweg: " << e.what() << "\n";
    return kUsage;
  } catch (const IndexOutOfRange& e) {
    err << "kunstweg: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "kunstweg: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "kunstweg: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const NumericError& e) {
    err << "kunstweg: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const GeometryError& e) {
    err << "kunstweg: " << e.what() << "\n";
    return kCheckFailed;
  }
  if (!result.diagnostic.empty()) err << "kunstweg: " << result.diagnostic << "\n";
  return result.status;
}

}  // namespace kunstweg::cli
