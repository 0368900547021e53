#pragma once

#include <random>
#include <string>

#include "mroots/numerics.hpp"

namespace mroots::testing {

/// Relative closeness |a - b| <= 10^-exp10 |b|; absolute when b is zero.
inline bool close(const Scalar& a, const Scalar& b, long exp10) {
  const Scalar tol = Scalar::power_of_ten(-exp10, a.config());
  const Scalar scale = b.is_zero() ? Scalar(1, a.config()) : abs(b);
  return abs(a - b) <= tol * scale;
}

inline bool within_abs(const Scalar& a, const Scalar& b, long exp10) {
  return abs(a - b) <= Scalar::power_of_ten(-exp10, a.config());
}

/// Random decimal "d.ddd...e±k" with `digits` mantissa digits.
inline std::string random_decimal(std::mt19937_64& rng, int digits, int max_exp) {
  std::uniform_int_distribution<int> digit(0, 9);
  std::uniform_int_distribution<int> lead(1, 9);
  std::uniform_int_distribution<int> exponent(-max_exp, max_exp);
  std::string s = (rng() & 1U) ? "-" : "";
  s += static_cast<char>('0' + lead(rng));
  s += '.';
  for (int k = 1; k < digits; ++k) s += static_cast<char>('0' + digit(rng));
  s += 'e' + std::to_string(exponent(rng));
  return s;
}

/// Uniform in [lo, hi) at the given precision (53 random bits, exact in Scalar).
inline Scalar random_between(std::mt19937_64& rng, double lo, double hi, const PrecisionConfig& cfg) {
  std::uniform_real_distribution<double> u(lo, hi);
  return Scalar(mpq_class(u(rng)), cfg);
}

}  // namespace mroots::testing

namespace mroots::testing {

/// True when `value` agrees with a printed "0.ddde-k" entry to two
/// significant figures: within half a unit of its second digit.
inline bool matches_printed(const Scalar& value, const std::string& printed) {
  const Scalar p = scalar_from_decimal(printed, value.config());
  const auto e = printed.find('e');
  const long exponent = std::stol(printed.substr(e + 1));
  const Scalar half_unit = Scalar::power_of_ten(exponent - 2, value.config()) / 2;
  return abs(abs(value) - p) <= half_unit;
}

}  // namespace mroots::testing
