#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mroots/field.hpp"
#include "mroots/numerics.hpp"

namespace mroots {

enum class MethodKind { NewtonSecant, ModifiedNewtonSecant, Schroder, Osada, Dong, Chun };

enum class DongSign { Minus, Plus };

/// Where the second Dong substep evaluates f'. AtX reproduces the reference
/// errors and is exact on monomials; AtY puts f'(y_n) in the denominator.
enum class DongDerivative { AtX, AtY };

struct MethodSpec {
  MethodKind kind = MethodKind::ModifiedNewtonSecant;
  mpq_class gamma = -1;  // Chun only
  DongSign dong_sign = DongSign::Minus;
  DongDerivative dong_derivative = DongDerivative::AtX;

  static MethodSpec of(MethodKind kind) {
    MethodSpec spec;
    spec.kind = kind;
    return spec;
  }
};

/// CLI names: newton-secant, mns, schroder, osada, dong, chun.
std::string_view method_name(MethodKind kind);
/// Throws std::invalid_argument for an unknown name.
MethodKind parse_method(std::string_view name);
const std::vector<MethodKind>& all_methods();
bool requires_second_derivative(MethodKind kind);

enum class StepStatus { Ok, DerivativeUnderflow, DomainError, DenominatorUnderflow };

std::string_view status_name(StepStatus status);

template <class T>
struct StepOutcome {
  T next;
  std::optional<T> intermediate;
  StepStatus status = StepStatus::Ok;

  bool ok() const { return status == StepStatus::Ok; }
};

/// ((m-1)/m)^(m-1) as an exact rational; theta(1) = 1.
mpq_class theta(int m);

namespace detail {

template <class T>
StepOutcome<T> failed(const T& x, StepStatus status) {
  return {x, std::nullopt, status};
}

template <class T>
bool negligible_difference(const T& difference, const T& a, const T& b) {
  const auto ma = Field<T>::magnitude(a);
  const auto mb = Field<T>::magnitude(b);
  return Field<T>::negligible(difference, ma < mb ? b : a);
}

/// Values shared by every kernel: f(x), f'(x) and the Newton correction f/f'.
template <class T>
struct Head {
  T fx;
  T dfx;
  T newton;
};

/// Evaluates f and f' at x. Returns a terminal outcome instead when x is out of
/// the domain, f(x) is exactly zero (x is a fixed point) or f' is negligible.
template <class T>
std::variant<Head<T>, StepOutcome<T>> head(const FunctionBundle<T>& fn, const T& x) {
  if (!Field<T>::finite(x) || !fn.contains(x)) return failed(x, StepStatus::DomainError);
  T fx = fn.f(x);
  if (!Field<T>::finite(fx)) return failed(x, StepStatus::DomainError);
  if (Field<T>::is_zero(fx)) return StepOutcome<T>{x, x, StepStatus::Ok};
  T dfx = fn.df(x);
  if (!Field<T>::finite(dfx)) return failed(x, StepStatus::DomainError);
  if (Field<T>::negligible(dfx, fx)) return failed(x, StepStatus::DerivativeUnderflow);
  T newton = fx / dfx;
  return Head<T>{std::move(fx), std::move(dfx), std::move(newton)};
}

template <class T>
std::optional<T> evaluate_at(const FunctionBundle<T>& fn, const T& y) {
  if (!Field<T>::finite(y) || !fn.contains(y)) return std::nullopt;
  T fy = fn.f(y);
  if (!Field<T>::finite(fy)) return std::nullopt;
  return fy;
}

template <class T>
StepOutcome<T> finish(const T& x, T next, std::optional<T> intermediate) {
  if (!Field<T>::finite(next)) return failed(x, StepStatus::DenominatorUnderflow);
  return {std::move(next), std::move(intermediate), StepStatus::Ok};
}

/// y = x - f/f', next = x - [w f(x) / (w f(x) - f(y))] f/f'.
template <class T>
StepOutcome<T> weighted_newton_secant(const FunctionBundle<T>& fn, const T& x, const mpq_class& weight) {
  auto h = head(fn, x);
  if (auto* done = std::get_if<StepOutcome<T>>(&h)) return *done;
  const auto& [fx, dfx, newton] = std::get<Head<T>>(h);

  T y = x - newton;
  const auto fy = evaluate_at(fn, y);
  if (!fy) return failed(x, StepStatus::DomainError);

  const T weighted = Field<T>::rational(x, weight) * fx;
  const T denominator = weighted - *fy;
  if (negligible_difference(denominator, weighted, *fy)) return failed(x, StepStatus::DenominatorUnderflow);
  return finish(x, x - (weighted / denominator) * newton, std::optional<T>(std::move(y)));
}

template <class T>
void require_second_derivative(const FunctionBundle<T>& fn, std::string_view method) {
  if (!fn.has_second_derivative()) {
    throw std::invalid_argument(std::string(method) + " requires f'' but the problem supplies none");
  }
}

}  // namespace detail

template <class T>
StepOutcome<T> step_newton_secant(const FunctionBundle<T>& fn, const T& x) {
  return detail::weighted_newton_secant(fn, x, mpq_class(1));
}

/// The theta-weighted Newton-Secant step for a root of multiplicity m.
template <class T>
StepOutcome<T> step_mns(const FunctionBundle<T>& fn, int m, const T& x) {
  return detail::weighted_newton_secant(fn, x, theta(m));
}

template <class T>
StepOutcome<T> step_schroder(const FunctionBundle<T>& fn, int m, const T& x) {
  auto h = detail::head(fn, x);
  if (auto* done = std::get_if<StepOutcome<T>>(&h)) return *done;
  const auto& head = std::get<detail::Head<T>>(h);
  return detail::finish(x, x - Field<T>::integer(x, m) * head.newton, std::optional<T>{});
}

template <class T>
StepOutcome<T> step_osada(const FunctionBundle<T>& fn, int m, const T& x) {
  detail::require_second_derivative(fn, "osada");
  auto h = detail::head(fn, x);
  if (auto* done = std::get_if<StepOutcome<T>>(&h)) return *done;
  const auto& [fx, dfx, newton] = std::get<detail::Head<T>>(h);

  T next = x - Field<T>::rational(x, mpq_class(m * (m + 1), 2)) * newton;
  if (m != 1) {
    const T d2fx = fn.d2f(x);
    if (!Field<T>::finite(d2fx)) return detail::failed(x, StepStatus::DomainError);
    if (Field<T>::negligible(d2fx, dfx)) return detail::failed(x, StepStatus::DerivativeUnderflow);
    next += Field<T>::rational(x, mpq_class((m - 1) * (m - 1), 2)) * (dfx / d2fx);
  }
  return detail::finish(x, std::move(next), std::optional<T>{});
}

/// y = x -/+ sqrt(m) f(x)/f'(x); next = y - m (1 - 1/sqrt(m))^(1-m) f(y)/f'(.).
template <class T>
StepOutcome<T> step_dong(const FunctionBundle<T>& fn, int m, const T& x, const MethodSpec& spec) {
  if (m < 2) throw std::invalid_argument("dong requires multiplicity >= 2");
  auto h = detail::head(fn, x);
  if (auto* done = std::get_if<StepOutcome<T>>(&h)) return *done;
  const auto& [fx, dfx, newton] = std::get<detail::Head<T>>(h);

  const T root_m = Field<T>::sqrt_integer(x, m);
  const T offset = root_m * newton;
  T y = spec.dong_sign == DongSign::Minus ? x - offset : x + offset;
  const auto fy = detail::evaluate_at(fn, y);
  if (!fy) return detail::failed(x, StepStatus::DomainError);

  T slope = dfx;
  if (spec.dong_derivative == DongDerivative::AtY) {
    slope = fn.df(y);
    if (!Field<T>::finite(slope)) return detail::failed(x, StepStatus::DomainError);
    if (Field<T>::negligible(slope, *fy)) return detail::failed(x, StepStatus::DerivativeUnderflow);
  }
  const T one = Field<T>::integer(x, 1);
  const T factor = Field<T>::integer(x, m) * Field<T>::pow_int(one - one / root_m, 1 - m);
  T next = y - factor * (*fy / slope);
  return detail::finish(x, std::move(next), std::optional<T>(std::move(y)));
}

/// Chun's one-parameter family; spec.gamma selects the member.
template <class T>
StepOutcome<T> step_chun(const FunctionBundle<T>& fn, int m, const T& x, const MethodSpec& spec) {
  detail::require_second_derivative(fn, "chun");
  auto h = detail::head(fn, x);
  if (auto* done = std::get_if<StepOutcome<T>>(&h)) return *done;
  const auto& [fx, dfx, newton] = std::get<detail::Head<T>>(h);

  const mpq_class& g = spec.gamma;
  const mpq_class newton_coeff = mpq_class(m) * ((2 * g - 1) * m + 3 - 2 * g) / 2;
  const mpq_class ratio_coeff = g * (m - 1) * (m - 1) / 2;
  const mpq_class curvature_coeff = (1 - g) * m * m / 2;

  T next = x - Field<T>::rational(x, newton_coeff) * newton;
  if (ratio_coeff != 0 || curvature_coeff != 0) {
    const T d2fx = fn.d2f(x);
    if (!Field<T>::finite(d2fx)) return detail::failed(x, StepStatus::DomainError);
    if (ratio_coeff != 0) {
      if (Field<T>::negligible(d2fx, dfx)) return detail::failed(x, StepStatus::DerivativeUnderflow);
      next += Field<T>::rational(x, ratio_coeff) * (dfx / d2fx);
    }
    if (curvature_coeff != 0) {
      // f^2 f'' / f'^3 = (f/f')^2 f''/f'
      next -= Field<T>::rational(x, curvature_coeff) * (newton * newton * (d2fx / dfx));
    }
  }
  return detail::finish(x, std::move(next), std::optional<T>{});
}

/// Dispatches one step of `spec` for a root of multiplicity m.
///
/// Throws std::invalid_argument when the method's prerequisites are not met
/// (f'' missing for osada/chun, m < 2 for dong).
template <class T>
StepOutcome<T> step(const MethodSpec& spec, const FunctionBundle<T>& fn, int m, const T& x) {
  switch (spec.kind) {
    case MethodKind::NewtonSecant: return step_newton_secant(fn, x);
    case MethodKind::ModifiedNewtonSecant: return step_mns(fn, m, x);
    case MethodKind::Schroder: return step_schroder(fn, m, x);
    case MethodKind::Osada: return step_osada(fn, m, x);
    case MethodKind::Dong: return step_dong(fn, m, x, spec);
    case MethodKind::Chun: return step_chun(fn, m, x, spec);
  }
  throw std::logic_error("unhandled method kind");
}

/// Throws std::invalid_argument if `spec` cannot run on (fn, m).
template <class T>
void check_prerequisites(const MethodSpec& spec, const FunctionBundle<T>& fn, int m) {
  if (m < 1) throw std::invalid_argument("multiplicity must be positive");
  if (requires_second_derivative(spec.kind)) detail::require_second_derivative(fn, method_name(spec.kind));
  if (spec.kind == MethodKind::Dong && m < 2) throw std::invalid_argument("dong requires multiplicity >= 2");
}

}  // namespace mroots
