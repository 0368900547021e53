#include "mroots/bench.hpp"

#include <cstdio>
#include <future>
#include <stdexcept>

#include "mroots/problems.hpp"

namespace mroots {

namespace {

BenchRow run_one(const PrecisionConfig& precision, const std::string& problem_name, MethodKind kind) {
  const Problem problem = builtin(problem_name, precision);
  if (!problem.default_x0 || !problem.known_root) {
    throw std::invalid_argument("problem '" + problem_name + "' has no default starting point and root");
  }
  BenchRow row;
  row.problem = problem_name;
  row.x0 = problem.default_x0->to_display(10);
  row.method = kind;

  const Trace trace =
      solve(problem, MethodSpec::of(kind), *problem.default_x0, SolverConfig::fixed_steps(precision, kBenchSteps));
  row.termination = trace.termination;
  for (std::size_t n = 1; n <= row.errors.size() && n < trace.iterates.size(); ++n) {
    row.errors[n - 1] = (*trace.errors)[n];
  }
  try {
    row.coc = coc(trace, *problem.known_root);
  } catch (const std::invalid_argument&) {
  }
  try {
    row.acoc = acoc(trace);
  } catch (const std::invalid_argument&) {
  }
  return row;
}

std::string error_cell(const std::optional<Scalar>& e) { return e ? shorthand(*e) : "n/a"; }

}  // namespace

BenchReport run_bench(const PrecisionConfig& precision, const std::vector<std::string>& problems,
                      const std::vector<MethodKind>& methods) {
  std::vector<std::future<BenchRow>> pending;
  for (const std::string& p : problems) {
    for (const MethodKind kind : methods) {
      pending.push_back(std::async(std::launch::async, run_one, precision, p, kind));
    }
  }
  BenchReport report;
  for (auto& f : pending) report.rows.push_back(f.get());
  return report;
}

std::string shorthand(const Scalar& value) {
  if (!value.is_finite()) return "n/a";
  if (value.is_zero()) return "0";
  auto [digits, exponent] = value.truncated_digits(3);
  std::string sign;
  if (digits.front() == '-') {
    sign = "-";
    digits.erase(digits.begin());
  }
  return sign + "0." + digits + "e" + std::to_string(exponent);
}

std::string format_order(const std::optional<OrderEstimate>& estimate) {
  if (!estimate) return "n/a";
  if (estimate->exact_hit()) return "exact";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4f", estimate->value->to_double());
  return buffer;
}

void write_bench_markdown(const BenchReport& report, std::ostream& out) {
  std::size_t start = 0;
  while (start < report.rows.size()) {
    std::size_t end = start;
    while (end < report.rows.size() && report.rows[end].problem == report.rows[start].problem) ++end;

    out << "| " << report.rows[start].problem << ", x0 = " << report.rows[start].x0 << " |";
    for (std::size_t k = start; k < end; ++k) out << ' ' << method_name(report.rows[k].method) << " |";
    out << "\n|---|";
    for (std::size_t k = start; k < end; ++k) out << "---|";
    out << '\n';
    for (std::size_t n = 0; n < 3; ++n) {
      out << "| \\|x" << n + 1 << " - x*\\| |";
      for (std::size_t k = start; k < end; ++k) out << ' ' << error_cell(report.rows[k].errors[n]) << " |";
      out << '\n';
    }
    out << "| COC |";
    for (std::size_t k = start; k < end; ++k) out << ' ' << format_order(report.rows[k].coc) << " |";
    out << "\n| ACOC |";
    for (std::size_t k = start; k < end; ++k) out << ' ' << format_order(report.rows[k].acoc) << " |";
    out << "\n\n";
    start = end;
  }
}

void write_bench_csv(const BenchReport& report, std::ostream& out) {
  out << "problem,x0,method,err1,err2,err3,coc,acoc\n";
  for (const BenchRow& row : report.rows) {
    out << row.problem << ',' << row.x0 << ',' << method_name(row.method);
    for (const auto& e : row.errors) out << ',' << error_cell(e);
    out << ',' << format_order(row.coc) << ',' << format_order(row.acoc) << '\n';
  }
}

}  // namespace mroots
