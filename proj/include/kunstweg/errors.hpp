#pragma once

#include <stdexcept>
#include <string>

namespace kunstweg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vector did not have the length the operator expects.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(long expected, long actual)
      : Error("dimension mismatch: expected length " + std::to_string(expected) +
              ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  long expected() const noexcept { return expected_; }
  long actual() const noexcept { return actual_; }

 private:
  long expected_;
  long actual_;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(long index, long lo, long hi)
      : Error("index " + std::to_string(index) + " outside [" + std::to_string(lo) +
              ", " + std::to_string(hi) + "]"),
        index_(index) {}

  long index() const noexcept { return index_; }

 private:
  long index_;
};

/// Invalid user-supplied parameters (grid size, tolerance, start vector, ...).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Requested digit count outside [2, ceiling].
class PrecisionError : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};

/// Dense realizations are gated to small n.
class SizeGateExceeded : public ConfigurationError {
 public:
  SizeGateExceeded(long n, long limit)
      : ConfigurationError("dense realization requested for n = " + std::to_string(n) +
                           ", limit is " + std::to_string(limit)) {}
};

class NumericError : public Error {
 public:
  enum class Kind { overflow, zero_vector, not_representable };

  NumericError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// The iteration did not reach its tolerance within the allowed steps.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, long steps) : Error(what), steps_(steps) {}

  long steps() const noexcept { return steps_; }

 private:
  long steps_;
};

/// A constructed polygon chain broke one of its invariants. This indicates a
/// bug in the construction, not bad input.
class GeometryError : public Error {
 public:
  GeometryError(const std::string& invariant, long worst_index, double deviation)
      : Error("polygon chain invariant '" + invariant + "' violated at j = " +
              std::to_string(worst_index) + " (deviation " + std::to_string(deviation) + ")"),
        worst_index_(worst_index),
        deviation_(deviation) {}

  long worst_index() const noexcept { return worst_index_; }
  double deviation() const noexcept { return deviation_; }

 private:
  long worst_index_;
  double deviation_;
};

}  // namespace kunstweg
