#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mroots/methods.hpp"
#include "mroots/numerics.hpp"
#include "mroots/solver.hpp"

namespace mroots {

/// One (problem, method) column of the comparison table.
struct BenchRow {
  std::string problem;
  std::string x0;  // short display form of the starting point
  MethodKind method = MethodKind::ModifiedNewtonSecant;
  std::array<std::optional<Scalar>, 3> errors;  // |x_1 - alpha| .. |x_3 - alpha|
  std::optional<OrderEstimate> coc;
  std::optional<OrderEstimate> acoc;
  Termination termination = Termination::MaxIterations;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // sorted by (problem, method) in the requested order
};

/// Steps taken per run. Errors are reported for x_1..x_3; COC and ACOC are
/// taken from the whole run, whose last window ends at x_4.
inline constexpr int kBenchSteps = 4;

/// Runs each (problem, method) pair from the problem's default starting point.
/// Pairs run concurrently; row order is fixed by the argument order.
BenchReport run_bench(const PrecisionConfig& precision,
                      const std::vector<std::string>& problems = {"f1", "f2", "f3", "f4"},
                      const std::vector<MethodKind>& methods = {MethodKind::ModifiedNewtonSecant, MethodKind::Osada,
                                                                MethodKind::Dong, MethodKind::Chun});

/// "0.739e-3": three mantissa digits in [0.1, 1), truncated toward zero.
std::string shorthand(const Scalar& value);

/// "3.0000", "exact" for an exact hit, "n/a" when unavailable.
std::string format_order(const std::optional<OrderEstimate>& estimate);

void write_bench_markdown(const BenchReport& report, std::ostream& out);
void write_bench_csv(const BenchReport& report, std::ostream& out);

}  // namespace mroots
