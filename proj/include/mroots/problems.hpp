#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mroots/field.hpp"
#include "mroots/numerics.hpp"
#include "mroots/polynomial.hpp"

namespace mroots {

/// A problem of the form q(x)^outer_power with q given by its coefficients.
struct PolynomialForm {
  std::vector<Scalar> inner;  // ascending powers
  int outer_power = 1;

  Polynomial<Scalar> expanded() const;
};

/// Target function bundle with a known multiplicity.
struct Problem {
  std::string name;
  std::string formula;
  int multiplicity = 1;

  FunctionBundle<Scalar> real;
  std::optional<FunctionBundle<ComplexScalar>> complex;

  std::optional<Scalar> known_root;
  std::vector<ComplexScalar> known_roots_complex;
  std::optional<Scalar> default_x0;
  std::optional<PolynomialForm> polynomial;

  bool has_second_derivative() const { return real.has_second_derivative(); }
};

/// Names accepted by builtin(), in registry order.
const std::vector<std::string>& builtin_names();

/// Builds a registry problem at the given precision. Throws std::invalid_argument
/// for an unknown name.
Problem builtin(std::string_view name, const PrecisionConfig& cfg);

/// Problem with f = q^m, where q is a polynomial with simple roots given
/// approximately by `root_guesses` (refined by Newton on q in binary64).
Problem make_polynomial_problem(std::string name, std::string formula, PolynomialForm form,
                                int multiplicity, const std::vector<ComplexScalar>& root_guesses);

/// Problem whose f is an explicit polynomial (no outer power).
Problem make_expanded_polynomial_problem(std::string name, std::string formula,
                                         Polynomial<Scalar> poly, int multiplicity,
                                         const std::vector<ComplexScalar>& root_guesses);

/// Problem f = (x - root)^m, the pure monomial used by exactness checks.
Problem make_monomial_problem(const Scalar& root, int multiplicity);

/// Normalized coefficients (c_0 = 1, c_1, ..., c_{order-m}) of
/// f(alpha + e) = e^m * b * (c_0 + c_1 e + c_2 e^2 + ...).
///
/// Throws std::invalid_argument when order < m + 2, or when alpha is not a
/// root of multiplicity exactly m at working precision.
std::vector<Scalar> poly_taylor_at_root(const Polynomial<Scalar>& poly, const Scalar& alpha,
                                        int multiplicity, int order);
std::vector<Scalar> poly_taylor_at_root(const Problem& problem, const Scalar& alpha, int order);

}  // namespace mroots
