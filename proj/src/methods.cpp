#include "mroots/methods.hpp"

#include <array>
#include <utility>

namespace mroots {

namespace {

constexpr std::array<std::pair<MethodKind, std::string_view>, 6> kNames{{
    {MethodKind::NewtonSecant, "newton-secant"},
    {MethodKind::ModifiedNewtonSecant, "mns"},
    {MethodKind::Schroder, "schroder"},
    {MethodKind::Osada, "osada"},
    {MethodKind::Dong, "dong"},
    {MethodKind::Chun, "chun"},
}};

}  // namespace

std::string_view method_name(MethodKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

MethodKind parse_method(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

const std::vector<MethodKind>& all_methods() {
  static const std::vector<MethodKind> kinds{MethodKind::NewtonSecant, MethodKind::ModifiedNewtonSecant,
                                             MethodKind::Schroder,     MethodKind::Osada,
                                             MethodKind::Dong,         MethodKind::Chun};
  return kinds;
}

bool requires_second_derivative(MethodKind kind) {
  return kind == MethodKind::Osada || kind == MethodKind::Chun;
}

std::string_view status_name(StepStatus status) {
  switch (status) {
    case StepStatus::Ok: return "ok";
    case StepStatus::DerivativeUnderflow: return "derivative_underflow";
    case StepStatus::DomainError: return "domain_error";
    case StepStatus::DenominatorUnderflow: return "denominator_underflow";
  }
  return "unknown";
}

mpq_class theta(int m) {
  if (m < 1) throw std::invalid_argument("theta needs m >= 1");
  // (m-1)^(m-1) / m^(m-1), with 0^0 = 1 at m = 1.
  mpz_class numerator;
  mpz_class denominator;
  mpz_ui_pow_ui(numerator.get_mpz_t(), static_cast<unsigned long>(m - 1), static_cast<unsigned long>(m - 1));
  mpz_ui_pow_ui(denominator.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(m - 1));
  mpq_class out(numerator, denominator);
  out.canonicalize();
  return out;
}

}  // namespace mroots
