#include <doctest.h>

#include <sstream>

#include "mroots/solver.hpp"
#include "support.hpp"

using namespace mroots;
using mroots::testing::close;
using mroots::testing::matches_printed;

namespace {

const PrecisionConfig kCfg = with_precision(100);

Scalar dec(const char* text) { return scalar_from_decimal(text, kCfg); }

Trace run(const std::string& problem, MethodKind kind, std::optional<int> steps = std::nullopt) {
  const Problem p = builtin(problem, kCfg);
  const SolverConfig cfg = steps ? SolverConfig::fixed_steps(kCfg, *steps) : SolverConfig::defaults(kCfg);
  return solve(p, MethodSpec::of(kind), *p.default_x0, cfg);
}

Trace from_iterates(const std::vector<Scalar>& xs) {
  Trace t;
  t.iterates = xs;
  t.intermediates.resize(xs.size());
  t.residuals.assign(xs.size(), Scalar(0, kCfg));
  return t;
}

}  // namespace

TEST_CASE("config validation") {
  SolverConfig cfg = SolverConfig::defaults(kCfg);
  CHECK(cfg.max_iterations == 50);
  CHECK(cfg.step_tolerance == Scalar::power_of_ten(-90, kCfg));
  CHECK_NOTHROW(cfg.validate());
  cfg.max_iterations = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = SolverConfig::defaults(kCfg);
  cfg.residual_tolerance = Scalar(0, kCfg);
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_FALSE(SolverConfig::fixed_steps(kCfg, 3).stop_on_tolerance);
}

TEST_CASE("f2 with mns from 8") {
  const Trace t = run("f2", MethodKind::ModifiedNewtonSecant, 3);
  REQUIRE(t.errors);
  REQUIRE(t.iterates.size() == 4);
  CHECK(t.termination == Termination::MaxIterations);
  CHECK(matches_printed((*t.errors)[1], "0.166e-4"));
  CHECK(matches_printed((*t.errors)[2], "0.246e-17"));
  CHECK((*t.errors)[3] < Scalar::power_of_ten(-39, kCfg));
}

TEST_CASE("f4 with Dong from 9") {
  const Trace t = run("f4", MethodKind::Dong, 1);
  CHECK(matches_printed((*t.errors)[1], "0.122e-4"));
}

TEST_CASE("linear function stops at iterate 1 with zero residual") {
  const Problem linear =
      make_polynomial_problem("lin", "x - 5", {{Scalar(-5, kCfg), Scalar(1, kCfg)}, 1}, 1, {{5, 0}});
  const Trace t = solve(linear, MethodSpec::of(MethodKind::NewtonSecant), Scalar(7, kCfg), SolverConfig::defaults(kCfg));
  REQUIRE(t.iterates.size() == 2);
  CHECK(t.iterates[1] == Scalar(5, kCfg));
  CHECK(t.residuals[1].is_zero());
  CHECK(t.termination == Termination::ResidualTolerance);
}

TEST_CASE("step failure at the start is reported, not thrown") {
  const Problem f2 = builtin("f2", kCfg);
  const Trace t = solve(f2, MethodSpec::of(MethodKind::ModifiedNewtonSecant), Scalar(-1, kCfg),
                        SolverConfig::defaults(kCfg));
  CHECK(t.failed_at_start());
  CHECK(t.failure == StepStatus::DomainError);
  CHECK(t.iterates.size() == 1);
  CHECK(t.residuals[0].is_nan());
  const Problem simple = builtin("poly_m2_demo", kCfg);
  Problem as_simple = simple;
  as_simple.multiplicity = 1;
  CHECK_THROWS_AS(
      solve(as_simple, MethodSpec::of(MethodKind::Dong), dec("1.5"), SolverConfig::defaults(kCfg)),
      std::invalid_argument);
}

TEST_CASE("traces are aligned and deterministic") {
  for (const std::string name : {"f1", "f2", "f3", "f4"}) {
    for (MethodKind kind : all_methods()) {
      const Trace a = run(name, kind);
      const Trace b = run(name, kind);
      CHECK(a.iterates == b.iterates);
      CHECK(a.termination == b.termination);
      CHECK(a.residuals.size() == a.iterates.size());
      CHECK(a.intermediates.size() == a.iterates.size());
      CHECK(a.errors->size() == a.iterates.size());
    }
  }
}

TEST_CASE("mns errors decrease strictly until termination") {
  for (const std::string name : {"f1", "f2", "f3", "f4"}) {
    CAPTURE(name);
    const Trace t = run(name, MethodKind::ModifiedNewtonSecant);
    CHECK(t.termination != Termination::StepFailure);
    CHECK(t.termination != Termination::MaxIterations);
    const auto& e = *t.errors;
    for (std::size_t n = 0; n + 1 < e.size(); ++n) CHECK(e[n + 1] < e[n]);
  }
}

TEST_CASE("COC of a constructed cubic trace is exactly 3") {
  std::vector<Scalar> xs;
  const Scalar alpha(0, kCfg);
  for (long n = 0, p = 1; n < 4; ++n, p *= 3) xs.push_back(alpha + Scalar::power_of_ten(-2 * p, kCfg));
  const OrderEstimate est = coc(from_iterates(xs), alpha);
  REQUIRE(est.value);
  CHECK(close(*est.value, Scalar(3, kCfg), 90));
  CHECK(est.index == 2);
}

TEST_CASE("ACOC of constructed cubic differences is exactly 3") {
  std::vector<Scalar> xs{Scalar(0, kCfg)};
  for (long k = 0, p = 1; k < 3; ++k, p *= 3) xs.push_back(xs.back() + Scalar::power_of_ten(-2 * p, kCfg));
  const OrderEstimate est = acoc(from_iterates(xs));
  REQUIRE(est.value);
  // The differences are recovered by subtracting iterates near 0.01.
  CHECK(close(*est.value, Scalar(3, kCfg), 80));
}

TEST_CASE("order estimates on the benchmark problems") {
  const Trace f1 = run("f1", MethodKind::ModifiedNewtonSecant);
  CHECK(abs(*coc(f1, Scalar(0, kCfg)).value - 3) <= dec("0.001"));

  const Trace f1_table = run("f1", MethodKind::ModifiedNewtonSecant, 4);
  CHECK(abs(*acoc(f1_table).value - dec("2.9999")) <= dec("0.0001"));

  const Trace f3 = run("f3", MethodKind::Osada, 4);
  CHECK(abs(*coc(f3, Scalar(3, kCfg)).value - dec("2.9964")) <= dec("0.005"));
  CHECK(abs(*acoc(f3).value - dec("2.9428")) <= dec("0.0001"));

  const Trace schroder = run("f1", MethodKind::Schroder);
  CHECK(abs(*coc(schroder, Scalar(0, kCfg)).value - 2) <= dec("0.1"));

  const Trace linear = run("f1", MethodKind::NewtonSecant);
  CHECK(abs(*coc(linear, Scalar(0, kCfg)).value - 1) <= dec("0.1"));
}

TEST_CASE("order estimates: exact hits and insufficient traces") {
  const Problem mono = make_monomial_problem(dec("1.5"), 4);
  const Trace t = solve(mono, MethodSpec::of(MethodKind::ModifiedNewtonSecant), dec("1.7"),
                        SolverConfig::fixed_steps(kCfg, 3));
  const OrderEstimate c = coc(t, dec("1.5"));
  CHECK(c.exact_hit());
  CHECK(acoc(t).exact_hit());
  CHECK_THROWS_AS(coc(from_iterates({dec("1"), dec("2")}), dec("0")), std::invalid_argument);
  CHECK_THROWS_AS(acoc(from_iterates({dec("1"), dec("2"), dec("3")})), std::invalid_argument);
}

TEST_CASE("error constant") {
  CHECK(close(error_constant(Scalar(mpq_class(1, 3), kCfg), Scalar(0, kCfg), 2), Scalar(mpq_class(1, 36), kCfg), 98));
  CHECK(error_constant(Scalar(0, kCfg), Scalar(0, kCfg), 5).is_zero());
  CHECK(error_constant(Scalar(0, kCfg), Scalar(1, kCfg), 2) == Scalar(mpq_class(-1, 4), kCfg));
}

TEST_CASE("empirical error ratios of mns on poly_m2_demo approach the error constant") {
  const Problem p = builtin("poly_m2_demo", kCfg);
  const auto c = poly_taylor_at_root(p, Scalar(1, kCfg), 4);
  const Scalar k = error_constant(c[1], c[2], 2);
  CHECK(close(k, Scalar(mpq_class(1, 36), kCfg), 98));

  const Trace t = solve(p, MethodSpec::of(MethodKind::ModifiedNewtonSecant), dec("1.01"), SolverConfig::defaults(kCfg));
  const auto ratios = empirical_error_ratio(t, Scalar(1, kCfg), 3, 2);
  REQUIRE(ratios.size() >= 2);
  int checked = 0;
  for (const auto& r : ratios) {
    REQUIRE(r.value);
    CHECK(r.value->sign() > 0);
    if (r.saturated) continue;
    CHECK(abs(*r.value / k - 1) <= dec("0.01"));
    ++checked;
  }
  CHECK(checked >= 1);
  // The last pair sits at e_n ~ 1e-25, where e_n^4 is below the resolution floor.
  CHECK(ratios.back().saturated);
}

TEST_CASE("empirical ratio on a monomial reports an exact hit") {
  // Every quantity in the step is a dyadic rational here, so e_1 is exactly 0.
  const Problem mono = make_monomial_problem(Scalar(1, kCfg), 4);
  const Trace t = solve(mono, MethodSpec::of(MethodKind::ModifiedNewtonSecant), dec("1.00390625"),
                        SolverConfig::fixed_steps(kCfg, 2));
  const auto ratios = empirical_error_ratio(t, Scalar(1, kCfg));
  REQUIRE_FALSE(ratios.empty());
  CHECK(ratios.front().n == 0);
  CHECK_FALSE(ratios.front().value);
}

TEST_CASE("Schroder order-2 ratios tend to c1 / m") {
  // For x - m f/f' the leading error term is (c1/m) e^2; here c1 = 1/3, m = 2.
  const Problem p = builtin("poly_m2_demo", kCfg);
  const Trace t = solve(p, MethodSpec::of(MethodKind::Schroder), dec("1.01"), SolverConfig::defaults(kCfg));
  const auto ratios = empirical_error_ratio(t, Scalar(1, kCfg), 2);
  REQUIRE(ratios.size() >= 3);
  CHECK(abs(*ratios.back().value * 6 - 1) <= dec("0.01"));
  CHECK_THROWS_AS(empirical_error_ratio(from_iterates({dec("5"), dec("6")}), Scalar(0, kCfg)), std::invalid_argument);
}

TEST_CASE("trace CSV") {
  const Trace t = run("f1", MethodKind::ModifiedNewtonSecant, 2);
  std::ostringstream out;
  write_trace_csv(t, out);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,x_n,|f(x_n)|,|x_n - alpha|");
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line.rfind(std::to_string(rows) + ",", 0) == 0);
    CHECK(std::count(line.begin(), line.end(), ',') == 3);
    ++rows;
  }
  CHECK(rows == 3);

  const Problem p1 = builtin("p1", kCfg);
  const Trace unknown = solve(p1, MethodSpec::of(MethodKind::ModifiedNewtonSecant), dec("1.5"),
                              SolverConfig::fixed_steps(kCfg, 1));
  std::ostringstream blank;
  write_trace_csv(unknown, blank);
  CHECK(blank.str().find(",\n") != std::string::npos);
  CHECK(termination_name(Termination::StepTolerance) == "step_tol");
}
