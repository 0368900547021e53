#include "mroots/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace mroots {

namespace {

template <class T>
struct InnerJet {
  T g;
  T dg;
  T d2g;
};

template <class T>
using JetFn = std::function<InnerJet<T>(const T&)>;

/// f = g^m with f' and f'' by the chain rule.
template <class T>
FunctionBundle<T> power_of(JetFn<T> inner, int m, std::function<bool(const T&)> domain = {}) {
  FunctionBundle<T> out;
  out.f = [inner, m](const T& x) { return Field<T>::pow_int(inner(x).g, m); };
  out.df = [inner, m](const T& x) {
    const auto j = inner(x);
    return Field<T>::integer(x, m) * Field<T>::pow_int(j.g, m - 1) * j.dg;
  };
  out.d2f = [inner, m](const T& x) {
    const auto j = inner(x);
    if (m == 1) return j.d2g;
    // m g^(m-2) [ (m-1) g'^2 + g g'' ]
    const T bracket = Field<T>::integer(x, m - 1) * j.dg * j.dg + j.g * j.d2g;
    return Field<T>::integer(x, m) * Field<T>::pow_int(j.g, m - 2) * bracket;
  };
  out.in_domain = std::move(domain);
  return out;
}

template <class T>
JetFn<T> polynomial_jet(Polynomial<T> q) {
  return [q = std::move(q)](const T& x) {
    const auto j = q.evaluate(x);
    return InnerJet<T>{j.value, j.first, j.second};
  };
}

/// Newton refinement of a simple root of g at working precision.
Scalar refine_root(const JetFn<Scalar>& inner, Scalar x) {
  const Scalar tolerance = Scalar::power_of_ten(-x.digits(), x.config());
  for (int k = 0; k < 200; ++k) {
    const auto j = inner(x);
    if (j.g.is_zero() || j.dg.is_zero()) break;
    const Scalar step = j.g / j.dg;
    x -= step;
    if (abs(step) <= tolerance * abs(x)) break;
  }
  return x;
}

ComplexScalar polish_root(const Polynomial<ComplexScalar>& q, ComplexScalar z) {
  for (int k = 0; k < 60; ++k) {
    const auto j = q.evaluate(z);
    if (j.value == ComplexScalar{} || j.first == ComplexScalar{}) break;
    const ComplexScalar step = j.value / j.first;
    z -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

bool positive(const Scalar& x) { return x.sign() > 0; }

Problem transcendental(std::string name, std::string formula, int m, JetFn<Scalar> inner,
                       std::function<bool(const Scalar&)> domain, Scalar root, Scalar x0) {
  Problem p;
  p.name = std::move(name);
  p.formula = std::move(formula);
  p.multiplicity = m;
  p.real = power_of<Scalar>(inner, m, std::move(domain));
  p.known_root = std::move(root);
  p.default_x0 = std::move(x0);
  return p;
}

Problem f1(const PrecisionConfig& cfg) {
  JetFn<Scalar> g = [](const Scalar& x) {
    const Scalar s = sin(x);
    const Scalar c = cos(x);
    // g = sin^2 x + x, g' = 2 sin x cos x + 1, g'' = 2 (cos^2 x - sin^2 x)
    return InnerJet<Scalar>{s * s + x, 2 * s * c + 1, 2 * (c * c - s * s)};
  };
  return transcendental("f1", "(sin(x)^2 + x)^5", 5, g, {}, Scalar(0, cfg),
                        scalar_from_decimal("0.1", cfg));
}

Problem f2(const PrecisionConfig& cfg) {
  JetFn<Scalar> g = [](const Scalar& x) {
    const Scalar r = sqrt(x);
    const Scalar inv = 1 / x;
    return InnerJet<Scalar>{log(x) + r - 5, inv + 1 / (2 * r), -(inv * inv) - 1 / (4 * x * r)};
  };
  const Scalar root = refine_root(g, scalar_from_decimal("8.3094326942315717953469556827", cfg));
  return transcendental("f2", "(ln(x) + sqrt(x) - 5)^3", 3, g, positive, root, Scalar(8, cfg));
}

Problem f3(const PrecisionConfig& cfg) {
  JetFn<Scalar> g = [](const Scalar& x) {
    const Scalar exponent = x * x + 7 * x - 30;
    const Scalar e = exp(exponent);
    const Scalar slope = 2 * x + 7;
    return InnerJet<Scalar>{expm1(exponent), slope * e, (slope * slope + 2) * e};
  };
  return transcendental("f3", "(exp(x^2 + 7x - 30) - 1)^6", 6, g, {}, Scalar(3, cfg),
                        scalar_from_decimal("3.1", cfg));
}

Problem f4(const PrecisionConfig& cfg) {
  JetFn<Scalar> g = [](const Scalar& x) {
    const Scalar r = sqrt(x);
    const Scalar inv = 1 / x;
    return InnerJet<Scalar>{r - inv - 3, 1 / (2 * r) + inv * inv,
                            -1 / (4 * x * r) - 2 * inv * inv * inv};
  };
  const Scalar root = refine_root(g, scalar_from_decimal("9.6335955628326951924063127092", cfg));
  return transcendental("f4", "(sqrt(x) - 1/x - 3)^7", 7, g, positive, root, Scalar(9, cfg));
}

std::vector<Scalar> integer_coefficients(std::initializer_list<long> values, const PrecisionConfig& cfg) {
  std::vector<Scalar> out;
  for (const long v : values) out.emplace_back(v, cfg);
  return out;
}

Problem p1(const PrecisionConfig& cfg) {
  const double h = std::sqrt(3.0) / 2.0;
  return make_polynomial_problem("p1", "(z^3 - 1)^10", {integer_coefficients({-1, 0, 0, 1}, cfg), 10}, 10,
                                 {{1.0, 0.0}, {-0.5, h}, {-0.5, -h}});
}

Problem p2(const PrecisionConfig& cfg) {
  return make_polynomial_problem("p2", "(z^5 - z^2 + 1)^15",
                                 {integer_coefficients({1, 0, -1, 0, 0, 1}, cfg), 15}, 15,
                                 {{-0.808731, 0.0},
                                  {-0.464912, 1.07147},
                                  {-0.464912, -1.07147},
                                  {0.869278, 0.388269},
                                  {0.869278, -0.388269}});
}

Problem p3(const PrecisionConfig& cfg) {
  return make_polynomial_problem("p3", "(2z^4 - z)^8", {integer_coefficients({0, -1, 0, 0, 2}, cfg), 8}, 8,
                                 {{0.0, 0.0}, {-0.39685, 0.687365}, {-0.39685, -0.687365}, {0.793701, 0.0}});
}

Problem poly_m2_demo(const PrecisionConfig& cfg) {
  // (x - 1)^2 (x + 2) = x^3 - 3x + 2
  Problem p = make_polynomial_problem("poly_m2_demo", "(x - 1)^2 (x + 2)",
                                      {integer_coefficients({2, -3, 0, 1}, cfg), 1}, 2,
                                      {{1.0, 0.0}, {-2.0, 0.0}});
  p.known_root = Scalar(1, cfg);
  return p;
}

}  // namespace

Polynomial<Scalar> PolynomialForm::expanded() const {
  return power(Polynomial<Scalar>{inner}, outer_power);
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"f1", "f2", "f3", "f4", "p1", "p2", "p3", "poly_m2_demo"};
  return names;
}

Problem builtin(std::string_view name, const PrecisionConfig& cfg) {
  if (name == "f1") return f1(cfg);
  if (name == "f2") return f2(cfg);
  if (name == "f3") return f3(cfg);
  if (name == "f4") return f4(cfg);
  if (name == "p1") return p1(cfg);
  if (name == "p2") return p2(cfg);
  if (name == "p3") return p3(cfg);
  if (name == "poly_m2_demo") return poly_m2_demo(cfg);
  throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
}

Problem make_polynomial_problem(std::string name, std::string formula, PolynomialForm form,
                                int multiplicity, const std::vector<ComplexScalar>& root_guesses) {
  if (multiplicity < 1 || form.outer_power < 1 || form.inner.empty()) {
    throw std::invalid_argument("polynomial problem needs a nonempty base and positive powers");
  }
  Polynomial<ComplexScalar> q_complex;
  for (const Scalar& c : form.inner) q_complex.coefficients.emplace_back(c.to_double(), 0.0);

  Problem p;
  p.name = std::move(name);
  p.formula = std::move(formula);
  p.multiplicity = multiplicity;
  p.real = power_of<Scalar>(polynomial_jet(Polynomial<Scalar>{form.inner}), form.outer_power);
  p.complex = power_of<ComplexScalar>(polynomial_jet(q_complex), form.outer_power);
  for (const ComplexScalar& guess : root_guesses) p.known_roots_complex.push_back(polish_root(q_complex, guess));
  p.polynomial = std::move(form);
  return p;
}

Problem make_monomial_problem(const Scalar& root, int multiplicity) {
  PolynomialForm form{{-root, Scalar::like(root, 1)}, multiplicity};
  Problem p = make_polynomial_problem("monomial", "(x - a)^" + std::to_string(multiplicity), std::move(form),
                                      multiplicity, {{root.to_double(), 0.0}});
  p.known_root = root;
  return p;
}

std::vector<Scalar> poly_taylor_at_root(const Polynomial<Scalar>& poly, const Scalar& alpha, int multiplicity,
                                        int order) {
  if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
  if (order < multiplicity + 2) {
    throw std::invalid_argument("expansion order " + std::to_string(order) + " is below multiplicity + 2");
  }
  std::vector<Scalar> shifted = taylor_shift(poly, alpha);

  // Bounds on the rounding error of each shifted coefficient: the same shift
  // applied to |a_k| about |alpha|.
  Polynomial<Scalar> magnitudes;
  for (const Scalar& c : poly.coefficients) magnitudes.coefficients.push_back(abs(c));
  const std::vector<Scalar> bounds = taylor_shift(magnitudes, abs(alpha));
  const Scalar tolerance = Scalar::power_of_ten(-(alpha.digits() - 10), alpha.config());

  const auto m = static_cast<std::size_t>(multiplicity);
  for (std::size_t k = 0; k < m && k < shifted.size(); ++k) {
    if (abs(shifted[k]) > tolerance * bounds[k]) {
      throw std::invalid_argument("alpha is not a root of multiplicity " + std::to_string(multiplicity) +
                                  " (Taylor coefficient " + std::to_string(k) + " is nonzero)");
    }
  }
  if (shifted.size() <= m || abs(shifted[m]) <= tolerance * bounds[m]) {
    throw std::invalid_argument("alpha is a root of multiplicity greater than " + std::to_string(multiplicity));
  }

  std::vector<Scalar> out;
  for (std::size_t i = 0; i + m <= static_cast<std::size_t>(order); ++i) {
    const std::size_t k = m + i;
    out.push_back(k < shifted.size() ? shifted[k] / shifted[m] : Scalar::like(alpha, 0));
  }
  return out;
}

std::vector<Scalar> poly_taylor_at_root(const Problem& problem, const Scalar& alpha, int order) {
  if (!problem.polynomial) {
    throw std::invalid_argument("problem '" + problem.name + "' is not polynomial");
  }
  return poly_taylor_at_root(problem.polynomial->expanded(), alpha, problem.multiplicity, order);
}

}  // namespace mroots
