#include "kunstweg/scalar.hpp"

#include <algorithm>
#include <ios>
#include <vector>

namespace kunstweg {
namespace {

int decimal_exponent(const std::string& scientific) {
  const auto pos = scientific.find_first_of("eE");
  if (pos == std::string::npos) return 0;
  return std::stoi(scientific.substr(pos + 1));
}

}  // namespace

BigFloat to_bigfloat(const Rational& q, unsigned digits10) {
  BigFloat out(0, digits10);
  mpfr_set_q(out.backend().data(), q.backend().data(), MPFR_RNDN);
  return out;
}

std::string format_scientific(double value, int significant) {
  const int decimals = std::max(significant - 1, 0);
  std::vector<char> buffer(static_cast<std::size_t>(decimals) + 32);
  std::snprintf(buffer.data(), buffer.size(), "%.*e", decimals, value);
  return std::string(buffer.data());
}

std::string format_scientific(const BigFloat& value, int significant) {
  return value.str(std::max(significant - 1, 0), std::ios::scientific);
}

std::string format_scientific(const Rational& value, int significant) {
  return format_scientific(to_bigfloat(value, static_cast<unsigned>(significant + 10)), significant);
}

std::string format_significant(const BigFloat& value, int significant) {
  if (value == 0) return value.str(std::max(significant - 1, 0), std::ios::fixed);
  const int exponent = decimal_exponent(format_scientific(value, significant));
  const int decimals = std::max(significant - 1 - exponent, 0);
  return value.str(decimals, std::ios::fixed);
}

BigFloat significant_digit_unit(const BigFloat& reference, int significant) {
  const unsigned precision = std::max(reference.precision(), 20u);
  const BigFloat ten(10, precision);
  if (reference == 0) return mp::pow(ten, 1 - significant);
  const int exponent = decimal_exponent(format_scientific(reference, significant + 5));
  return mp::pow(ten, exponent + 1 - significant);
}

}  // namespace kunstweg
