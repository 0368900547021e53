#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mroots/field.hpp"

namespace mroots {

/// Dense polynomial, coefficients in ascending powers.
template <class T>
struct Polynomial {
  std::vector<T> coefficients;

  struct Jet {
    T value;
    T first;
    T second;
  };

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }

  T operator()(const T& x) const { return evaluate(x).value; }

  /// Value, first and second derivative by one Horner pass.
  Jet evaluate(const T& x) const {
    if (coefficients.empty()) throw std::logic_error("empty polynomial");
    const T zero = Field<T>::integer(x, 0);
    T p = coefficients.back();
    T d1 = zero;
    T d2 = zero;
    for (std::size_t k = coefficients.size() - 1; k-- > 0;) {
      d2 = d2 * x + d1;
      d1 = d1 * x + p;
      p = p * x + coefficients[k];
    }
    return {p, d1, d2 + d2};
  }

  Polynomial derivative() const {
    Polynomial out;
    for (std::size_t k = 1; k < coefficients.size(); ++k) {
      out.coefficients.push_back(coefficients[k] * Field<T>::integer(coefficients[k], static_cast<long>(k)));
    }
    if (out.coefficients.empty()) out.coefficients.push_back(Field<T>::integer(coefficients.front(), 0));
    return out;
  }
};

template <class T>
Polynomial<T> multiply(const Polynomial<T>& a, const Polynomial<T>& b) {
  const T zero = Field<T>::integer(a.coefficients.front(), 0);
  Polynomial<T> out{std::vector<T>(a.coefficients.size() + b.coefficients.size() - 1, zero)};
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
      out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
    }
  }
  return out;
}

template <class T>
Polynomial<T> power(const Polynomial<T>& p, int exponent) {
  Polynomial<T> out{{Field<T>::integer(p.coefficients.front(), 1)}};
  for (int k = 0; k < exponent; ++k) out = multiply(out, p);
  return out;
}

/// Coefficients s_k of p(center + e) = sum_k s_k e^k, by repeated synthetic
/// division by (x - center): the k-th remainder is s_k.
template <class T>
std::vector<T> taylor_shift(const Polynomial<T>& p, const T& center) {
  std::vector<T> current = p.coefficients;
  std::vector<T> shifted;
  shifted.reserve(current.size());
  while (!current.empty()) {
    // Horner division: quotient overwrites current[1..], remainder lands in current[0].
    for (std::size_t k = current.size() - 1; k-- > 0;) current[k] += current[k + 1] * center;
    shifted.push_back(current.front());
    current.erase(current.begin());
  }
  return shifted;
}

}  // namespace mroots
