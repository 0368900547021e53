#include "mroots/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <stdexcept>
#include <utility>

namespace mroots {

namespace {

constexpr double kLog2Of10 = 3.321928094887362347870319429489;

const std::regex& decimal_pattern() {
  static const std::regex pattern(R"(^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$)");
  return pattern;
}

}  // namespace

mpfr_prec_t PrecisionConfig::bits() const {
  return static_cast<mpfr_prec_t>(std::ceil(digits_ * kLog2Of10));
}

PrecisionConfig with_precision(int digits) {
  if (digits < PrecisionConfig::kMinimumDigits) {
    throw std::invalid_argument("precision of " + std::to_string(digits) +
                                " digits is below the minimum of " +
                                std::to_string(PrecisionConfig::kMinimumDigits));
  }
  return PrecisionConfig(digits);
}

Scalar::Scalar(mpfr_prec_t bits) { mpfr_init2(value_, bits); }

Scalar::Scalar(const PrecisionConfig& cfg) : Scalar(cfg.bits()) { mpfr_set_zero(value_, 1); }

Scalar::Scalar(long value, const PrecisionConfig& cfg) : Scalar(cfg.bits()) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Scalar::Scalar(const mpq_class& value, const PrecisionConfig& cfg) : Scalar(cfg.bits()) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Scalar Scalar::like(const Scalar& like, long value) {
  Scalar out(like.precision_bits());
  mpfr_set_si(out.value_, value, MPFR_RNDN);
  return out;
}

Scalar Scalar::like(const Scalar& like, const mpq_class& value) {
  Scalar out(like.precision_bits());
  mpfr_set_q(out.value_, value.get_mpq_t(), MPFR_RNDN);
  return out;
}

Scalar Scalar::power_of_ten(long exponent, const PrecisionConfig& cfg) {
  Scalar out(10, cfg);
  mpfr_pow_si(out.value_, out.value_, exponent, MPFR_RNDN);
  return out;
}

Scalar Scalar::nan(const PrecisionConfig& cfg) {
  Scalar out(cfg.bits());
  mpfr_set_nan(out.value_);
  return out;
}

Scalar::Scalar(const Scalar& other) : Scalar(other.precision_bits()) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Scalar::Scalar(Scalar&& other) noexcept : Scalar(MPFR_PREC_MIN) { mpfr_swap(value_, other.value_); }

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    if (precision_bits() != other.precision_bits()) mpfr_set_prec(value_, other.precision_bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Scalar& Scalar::operator=(Scalar&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Scalar::~Scalar() { mpfr_clear(value_); }

int Scalar::digits() const {
  return static_cast<int>(std::floor(static_cast<double>(precision_bits()) / kLog2Of10));
}

PrecisionConfig Scalar::config() const { return with_precision(std::max(digits(), 16)); }

mpfr_prec_t Scalar::joint(const Scalar& a, const Scalar& b) {
  return std::max(a.precision_bits(), b.precision_bits());
}

std::string Scalar::to_string(int significant) const {
  if (is_nan()) return "nan";
  if (!is_finite()) return sign() < 0 ? "-inf" : "inf";
  const int sig = significant > 0 ? significant : digits();
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", sig - 1, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

std::string Scalar::to_display(int significant) const {
  if (!is_finite()) return to_string();
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", significant, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

std::pair<std::string, long> Scalar::truncated_digits(int count) const {
  mpfr_exp_t exponent = 0;
  char* buffer = mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(count), value_, MPFR_RNDZ);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return {out, static_cast<long>(exponent)};
}

Scalar& Scalar::operator+=(const Scalar& rhs) { return *this = *this + rhs; }
Scalar& Scalar::operator-=(const Scalar& rhs) { return *this = *this - rhs; }
Scalar& Scalar::operator*=(const Scalar& rhs) { return *this = *this * rhs; }
Scalar& Scalar::operator/=(const Scalar& rhs) { return *this = *this / rhs; }

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar out(Scalar::joint(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar out(Scalar::joint(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out(Scalar::joint(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar out(Scalar::joint(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Scalar operator-(const Scalar& a) {
  Scalar out(a.precision_bits());
  mpfr_neg(out.value_, a.value_, MPFR_RNDN);
  return out;
}

Scalar operator+(const Scalar& a, long b) {
  Scalar out(a.precision_bits());
  mpfr_add_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Scalar operator-(const Scalar& a, long b) {
  Scalar out(a.precision_bits());
  mpfr_sub_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Scalar operator-(long a, const Scalar& b) {
  Scalar out(b.precision_bits());
  mpfr_si_sub(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}

Scalar operator*(const Scalar& a, long b) {
  Scalar out(a.precision_bits());
  mpfr_mul_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Scalar operator*(long a, const Scalar& b) { return b * a; }

Scalar operator/(const Scalar& a, long b) {
  Scalar out(a.precision_bits());
  mpfr_div_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Scalar operator/(long a, const Scalar& b) {
  Scalar out(b.precision_bits());
  mpfr_si_div(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

#define MROOTS_UNARY(name, fn)                      \
  Scalar name(const Scalar& x) {                    \
    Scalar out(x.precision_bits());                 \
    fn(out.value_, x.value_, MPFR_RNDN);            \
    return out;                                     \
  }

MROOTS_UNARY(abs, mpfr_abs)
MROOTS_UNARY(sqrt, mpfr_sqrt)
MROOTS_UNARY(log, mpfr_log)
MROOTS_UNARY(exp, mpfr_exp)
MROOTS_UNARY(expm1, mpfr_expm1)
MROOTS_UNARY(sin, mpfr_sin)
MROOTS_UNARY(cos, mpfr_cos)

#undef MROOTS_UNARY

Scalar pow(const Scalar& x, long n) {
  Scalar out(x.precision_bits());
  mpfr_pow_si(out.value_, x.value_, n, MPFR_RNDN);
  return out;
}

Scalar scalar_from_decimal(std::string_view text, const PrecisionConfig& cfg) {
  const std::string s(text);
  if (!std::regex_match(s, decimal_pattern())) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  Scalar out(cfg);
  // mpfr_set_str returns nonzero unless the whole string was consumed.
  if (mpfr_set_str(out.value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return out;
}

mpq_class rational_from_decimal(std::string_view text) {
  const std::string s(text);
  std::smatch match;
  if (!std::regex_match(s, match, decimal_pattern())) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  const bool negative = s.front() == '-';
  const std::string mantissa = match[1].str();
  long exponent = match[2].matched ? std::stol(match[2].str().substr(1)) : 0;

  std::string digits;
  for (const char c : mantissa) {
    if (c == '.') continue;
    digits.push_back(c);
  }
  const auto dot = mantissa.find('.');
  if (dot != std::string::npos) exponent -= static_cast<long>(mantissa.size() - dot - 1);

  mpz_class numerator(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  mpq_class out = exponent >= 0 ? mpq_class(numerator * scale) : mpq_class(numerator, scale);
  out.canonicalize();
  return negative ? mpq_class(-out) : out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace mroots
