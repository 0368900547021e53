#include "mroots/solver.hpp"

#include <stdexcept>

namespace mroots {

namespace {

Scalar diagnostic_floor(const Scalar& like) {
  return Scalar::power_of_ten(-(like.digits() - 10), like.config());
}

Scalar residual_at(const Problem& problem, const Scalar& x) {
  if (!x.is_finite() || !problem.real.contains(x)) return Scalar::nan(x.config());
  return abs(problem.real.f(x));
}

/// ln|b/a| / ln|a/prev| for consecutive magnitudes prev, a, b.
Scalar log_ratio(const Scalar& prev, const Scalar& a, const Scalar& b) {
  return log(abs(b / a)) / log(abs(a / prev));
}

}  // namespace

SolverConfig SolverConfig::defaults(const PrecisionConfig& precision) {
  const Scalar tolerance = Scalar::power_of_ten(-(precision.digits() - 10), precision);
  return SolverConfig{precision, 50, tolerance, tolerance, true};
}

SolverConfig SolverConfig::fixed_steps(const PrecisionConfig& precision, int steps) {
  SolverConfig cfg = defaults(precision);
  cfg.max_iterations = steps;
  cfg.stop_on_tolerance = false;
  return cfg;
}

void SolverConfig::validate() const {
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  if (!(step_tolerance.sign() > 0) || !(residual_tolerance.sign() > 0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
}

std::string_view termination_name(Termination t) {
  switch (t) {
    case Termination::StepTolerance: return "step_tol";
    case Termination::ResidualTolerance: return "residual_tol";
    case Termination::MaxIterations: return "max_iter";
    case Termination::StepFailure: return "step_failure";
  }
  return "unknown";
}

Trace solve(const Problem& problem, const MethodSpec& spec, const Scalar& x0, const SolverConfig& cfg) {
  cfg.validate();
  check_prerequisites(spec, problem.real, problem.multiplicity);

  Trace trace;
  const std::optional<Scalar>& alpha = problem.known_root;
  if (alpha) trace.errors.emplace();

  auto record = [&](const Scalar& x) {
    trace.iterates.push_back(x);
    trace.intermediates.emplace_back();
    trace.residuals.push_back(residual_at(problem, x));
    if (alpha) trace.errors->push_back(abs(x - *alpha));
  };

  record(x0);
  Scalar x = x0;
  for (int n = 0; n < cfg.max_iterations; ++n) {
    StepOutcome<Scalar> outcome = step(spec, problem.real, problem.multiplicity, x);
    if (!outcome.ok()) {
      trace.termination = Termination::StepFailure;
      trace.failure = outcome.status;
      return trace;
    }
    trace.intermediates.back() = std::move(outcome.intermediate);
    const Scalar stride = abs(outcome.next - x);
    x = std::move(outcome.next);
    record(x);
    if (!cfg.stop_on_tolerance) continue;
    if (stride < cfg.step_tolerance) {
      trace.termination = Termination::StepTolerance;
      return trace;
    }
    if (trace.residuals.back() < cfg.residual_tolerance) {
      trace.termination = Termination::ResidualTolerance;
      return trace;
    }
  }
  trace.termination = Termination::MaxIterations;
  return trace;
}

OrderEstimate coc(const Trace& trace, const Scalar& alpha) {
  const std::size_t count = trace.iterates.size();
  if (count < 3) throw std::invalid_argument("COC needs at least 3 iterates");
  std::vector<Scalar> errors;
  errors.reserve(count);
  for (const Scalar& x : trace.iterates) errors.push_back(abs(x - alpha));

  const Scalar floor = diagnostic_floor(alpha);
  for (std::size_t n = count - 2; n >= 1; --n) {
    if (errors[n - 1] > floor && errors[n] > floor && errors[n + 1] > floor) {
      return {log_ratio(errors[n - 1], errors[n], errors[n + 1]), n};
    }
  }
  for (std::size_t n = 0; n < count; ++n) {
    if (errors[n].is_zero()) return {std::nullopt, n};
  }
  throw std::invalid_argument("COC: no window of three errors above the precision floor");
}

OrderEstimate acoc(const Trace& trace) {
  const std::size_t count = trace.iterates.size();
  if (count < 4) throw std::invalid_argument("ACOC needs at least 4 iterates");
  std::vector<Scalar> steps;  // steps[k] = |x_{k+1} - x_k|
  for (std::size_t k = 0; k + 1 < count; ++k) steps.push_back(abs(trace.iterates[k + 1] - trace.iterates[k]));

  const Scalar floor = diagnostic_floor(trace.iterates.front());
  // Window n uses x_{n-2} .. x_{n+1}, i.e. steps n-2, n-1, n.
  for (std::size_t n = count - 2; n >= 2; --n) {
    if (steps[n - 2] > floor && steps[n - 1] > floor && steps[n] > floor) {
      return {log_ratio(steps[n - 2], steps[n - 1], steps[n]), n};
    }
  }
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (steps[k].is_zero()) return {std::nullopt, k + 1};
  }
  throw std::invalid_argument("ACOC: no window of three steps above the precision floor");
}

Scalar error_constant(const Scalar& c1, const Scalar& c2, int m) {
  // (m c1^2 - 2 (m-1) c2) / (2 m^2)
  return (m * c1 * c1 - 2L * (m - 1) * c2) / (2L * m * m);
}

std::vector<ErrorRatio> empirical_error_ratio(const Trace& trace, const Scalar& alpha, int order,
                                              int multiplicity) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
  const PrecisionConfig cfg = alpha.config();
  const Scalar lower = Scalar::power_of_ten(-(alpha.digits() / 3), cfg);
  const Scalar upper = Scalar::power_of_ten(-2, cfg);
  const Scalar resolution = diagnostic_floor(alpha);

  std::vector<ErrorRatio> out;
  for (std::size_t n = 0; n + 1 < trace.iterates.size(); ++n) {
    const Scalar e = trace.iterates[n] - alpha;
    const Scalar magnitude = abs(e);
    if (!(magnitude > lower && magnitude < upper)) continue;
    const Scalar next = trace.iterates[n + 1] - alpha;
    const bool saturated = pow(magnitude, multiplicity + order - 1) < resolution;
    if (next.is_zero()) {
      out.push_back({n, std::nullopt, saturated});
    } else {
      out.push_back({n, next / pow(e, order), saturated});
    }
  }
  if (out.empty()) throw std::invalid_argument("no iterate pairs inside the error-ratio window");
  return out;
}

void write_trace_csv(const Trace& trace, std::ostream& out) {
  out << "n,x_n,|f(x_n)|,|x_n - alpha|\n";
  for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
    out << n << ',' << trace.iterates[n].to_string() << ',' << trace.residuals[n].to_string() << ',';
    if (trace.errors) out << (*trace.errors)[n].to_string();
    out << '\n';
  }
}

}  // namespace mroots
