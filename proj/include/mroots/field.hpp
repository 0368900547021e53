#pragma once

#include <cmath>
#include <functional>
#include <optional>

#include "mroots/numerics.hpp"

namespace mroots {

/// Operations the iteration kernels need from a number field beyond + - * /.
template <class T>
struct Field;

template <>
struct Field<Scalar> {
  static Scalar integer(const Scalar& like, long n) { return Scalar::like(like, n); }
  static Scalar rational(const Scalar& like, const mpq_class& q) { return Scalar::like(like, q); }
  static Scalar sqrt_integer(const Scalar& like, long n) { return sqrt(Scalar::like(like, n)); }
  static Scalar pow_int(const Scalar& x, long n) { return pow(x, n); }
  static Scalar magnitude(const Scalar& x) { return abs(x); }
  static bool finite(const Scalar& x) { return x.is_finite(); }
  static bool is_zero(const Scalar& x) { return x.is_zero(); }
  static int digits(const Scalar& like) { return like.digits(); }

  /// |value| <= 10^-(digits-5) * |scale|.
  static bool negligible(const Scalar& value, const Scalar& scale) {
    if (value.is_zero()) return true;
    const Scalar factor = Scalar::power_of_ten(value.digits() - 5, value.config());
    return abs(value) * factor <= abs(scale);
  }
};

template <>
struct Field<ComplexScalar> {
  static constexpr int kDigits = 16;

  static ComplexScalar integer(const ComplexScalar&, long n) { return {static_cast<double>(n), 0.0}; }
  static ComplexScalar rational(const ComplexScalar&, const mpq_class& q) { return {q.get_d(), 0.0}; }
  static ComplexScalar sqrt_integer(const ComplexScalar&, long n) {
    return {std::sqrt(static_cast<double>(n)), 0.0};
  }
  static ComplexScalar pow_int(ComplexScalar x, long n) {
    // Binary powering keeps the result a fixed sequence of multiplications.
    const bool invert = n < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    ComplexScalar out{1.0, 0.0};
    while (e != 0) {
      if (e & 1UL) out *= x;
      x *= x;
      e >>= 1;
    }
    return invert ? ComplexScalar{1.0, 0.0} / out : out;
  }
  static double magnitude(const ComplexScalar& x) { return std::abs(x); }
  static bool finite(const ComplexScalar& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }
  static bool is_zero(const ComplexScalar& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static int digits(const ComplexScalar&) { return kDigits; }

  static bool negligible(const ComplexScalar& value, const ComplexScalar& scale) {
    if (is_zero(value)) return true;
    return std::abs(value) * 1e11 <= std::abs(scale);
  }
};

/// f, f', optionally f'' and a domain predicate, over one number field.
template <class T>
struct FunctionBundle {
  using Fn = std::function<T(const T&)>;

  Fn f;
  Fn df;
  Fn d2f;  // empty when the problem supplies no second derivative
  std::function<bool(const T&)> in_domain;  // empty means the whole field

  bool has_second_derivative() const { return static_cast<bool>(d2f); }
  bool contains(const T& x) const { return !in_domain || in_domain(x); }
};

}  // namespace mroots
