#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace mroots {

/// Working precision of a run, in significant decimal digits.
class PrecisionConfig {
 public:
  static constexpr int kMinimumDigits = 16;
  static constexpr int kDefaultDigits = 100;

  PrecisionConfig() : digits_(kDefaultDigits) {}

  int digits() const { return digits_; }

  /// Binary precision carrying at least digits() decimal digits.
  mpfr_prec_t bits() const;

  friend bool operator==(const PrecisionConfig&, const PrecisionConfig&) = default;

 private:
  explicit PrecisionConfig(int digits) : digits_(digits) {}
  friend PrecisionConfig with_precision(int digits);

  int digits_;
};

/// Throws std::invalid_argument for digits below PrecisionConfig::kMinimumDigits.
PrecisionConfig with_precision(int digits);

/// Real number at a run-configured precision (MPFR, round-to-nearest).
///
/// Binary operations produce a result at the larger of the two operand
/// precisions. Within one run every Scalar shares a single PrecisionConfig, so
/// in practice all values carry the same number of bits.
class Scalar {
 public:
  explicit Scalar(const PrecisionConfig& cfg);
  Scalar(long value, const PrecisionConfig& cfg);
  Scalar(const mpq_class& value, const PrecisionConfig& cfg);

  /// Same precision as `like`.
  static Scalar like(const Scalar& like, long value);
  static Scalar like(const Scalar& like, const mpq_class& value);
  static Scalar power_of_ten(long exponent, const PrecisionConfig& cfg);
  static Scalar nan(const PrecisionConfig& cfg);

  Scalar(const Scalar& other);
  Scalar(Scalar&& other) noexcept;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&& other) noexcept;
  ~Scalar();

  mpfr_prec_t precision_bits() const { return mpfr_get_prec(value_); }
  /// Decimal digits carried, the inverse of PrecisionConfig::bits().
  int digits() const;
  PrecisionConfig config() const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  int sign() const { return is_nan() ? 0 : mpfr_sgn(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with `significant` digits (0 selects digits()).
  std::string to_string(int significant = 0) const;

  /// Shortest of fixed/scientific notation with at most `significant` digits ("3", "8.309...").
  std::string to_display(int significant) const;

  /// Digits truncated toward zero and decimal exponent, value = 0.DIGITS * 10^exponent.
  std::pair<std::string, long> truncated_digits(int count) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);

  friend Scalar operator+(const Scalar& a, long b);
  friend Scalar operator-(const Scalar& a, long b);
  friend Scalar operator-(long a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, long b);
  friend Scalar operator*(long a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, long b);
  friend Scalar operator/(long a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

  friend Scalar abs(const Scalar& x);
  friend Scalar sqrt(const Scalar& x);
  friend Scalar log(const Scalar& x);
  friend Scalar exp(const Scalar& x);
  friend Scalar expm1(const Scalar& x);
  friend Scalar sin(const Scalar& x);
  friend Scalar cos(const Scalar& x);
  friend Scalar pow(const Scalar& x, long n);

  friend Scalar scalar_from_decimal(std::string_view text, const PrecisionConfig& cfg);

  mpfr_srcptr raw() const { return value_; }

 private:
  explicit Scalar(mpfr_prec_t bits);
  static mpfr_prec_t joint(const Scalar& a, const Scalar& b);

  mpfr_t value_;
};

/// Parses a signed decimal number ("-1.25", "8.3e-3") rounded to cfg precision.
/// Throws std::invalid_argument on malformed input.
Scalar scalar_from_decimal(std::string_view text, const PrecisionConfig& cfg);

/// Exact rational value of a decimal string; throws std::invalid_argument.
mpq_class rational_from_decimal(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Binary64 complex field used by the basin renderer.
using ComplexScalar = std::complex<double>;

}  // namespace mroots
