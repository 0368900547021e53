#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "mroots/methods.hpp"
#include "mroots/numerics.hpp"
#include "mroots/problems.hpp"

namespace mroots {

struct SolverConfig {
  PrecisionConfig precision;
  int max_iterations = 50;
  Scalar step_tolerance;
  Scalar residual_tolerance;
  /// When false the run takes exactly max_iterations steps (unless a step
  /// fails), ignoring both tolerances.
  bool stop_on_tolerance = true;

  /// Tolerances 10^-(digits-10), 50 iterations.
  static SolverConfig defaults(const PrecisionConfig& precision);
  /// Exactly `steps` iterations, as in a fixed-length comparison table.
  static SolverConfig fixed_steps(const PrecisionConfig& precision, int steps);

  /// Throws std::invalid_argument if a tolerance is not positive or max_iterations < 1.
  void validate() const;
};

enum class Termination { StepTolerance, ResidualTolerance, MaxIterations, StepFailure };

std::string_view termination_name(Termination t);

struct Trace {
  std::vector<Scalar> iterates;                   // x_0, x_1, ...
  std::vector<std::optional<Scalar>> intermediates;  // y_n computed at x_n; aligned with iterates
  std::vector<Scalar> residuals;                  // |f(x_n)|
  std::optional<std::vector<Scalar>> errors;      // |x_n - alpha| when the root is known
  Termination termination = Termination::MaxIterations;
  StepStatus failure = StepStatus::Ok;            // set when termination == StepFailure

  std::size_t steps() const { return iterates.empty() ? 0 : iterates.size() - 1; }
  bool failed_at_start() const { return termination == Termination::StepFailure && iterates.size() == 1; }
};

/// Iterates `spec` from x0 until a stopping rule fires. Step failures end the
/// trace early and are reported in Trace::termination.
///
/// Throws std::invalid_argument when the method's prerequisites are not met.
Trace solve(const Problem& problem, const MethodSpec& spec, const Scalar& x0, const SolverConfig& cfg);

/// Order estimate from log-ratios; empty value means an exact hit (a zero
/// error or step made the ratio undefined).
struct OrderEstimate {
  std::optional<Scalar> value;
  std::size_t index = 0;  // n of the window (x_{n-1}, x_n, x_{n+1}) or its difference analogue

  bool exact_hit() const { return !value.has_value(); }
};

/// Computational order of convergence at the latest window whose three errors
/// all exceed 10^-(digits-10). Throws std::invalid_argument with fewer than 3
/// iterates or when no window is usable.
OrderEstimate coc(const Trace& trace, const Scalar& alpha);

/// Root-free estimate from four consecutive iterates, at the latest window
/// whose three differences exceed 10^-(digits-10).
OrderEstimate acoc(const Trace& trace);

/// Leading constant of e_{n+1} = K e_n^3 for the theta-weighted method, with
/// Taylor coefficients normalized so c_0 = 1.
Scalar error_constant(const Scalar& c1, const Scalar& c2, int m);

struct ErrorRatio {
  std::size_t n = 0;
  std::optional<Scalar> value;  // e_{n+1} / e_n^order; empty when e_{n+1} == 0
  /// x_{n+1} is only resolved to about 10^-digits |e_n|^(1-m) near an m-fold
  /// root; set when that is more than 10^-10 of the predicted e_{n+1}.
  bool saturated = false;
};

/// Signed ratios (x_{n+1} - alpha) / (x_n - alpha)^order over pairs whose
/// |e_n| lies in (10^-(digits/3), 10^-2). Throws std::invalid_argument when no
/// pair qualifies.
std::vector<ErrorRatio> empirical_error_ratio(const Trace& trace, const Scalar& alpha, int order = 3,
                                              int multiplicity = 1);

/// CSV block: n, x_n, |f(x_n)|, |x_n - alpha| (blank when alpha is unknown).
void write_trace_csv(const Trace& trace, std::ostream& out);

}  // namespace mroots
