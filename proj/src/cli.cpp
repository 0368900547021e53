#include "mroots/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mroots/basins.hpp"
#include "mroots/bench.hpp"
#include "mroots/methods.hpp"
#include "mroots/problems.hpp"
#include "mroots/solver.hpp"

namespace mroots::cli {

namespace {

struct SolveArgs {
  std::string problem;
  std::string method;
  std::optional<std::string> x0;
  int digits = PrecisionConfig::kDefaultDigits;
  int max_iter = 50;
  std::string gamma = "-1";
  std::string dong_sign = "minus";
  std::optional<int> fixed_steps;
};

struct BenchArgs {
  int digits = PrecisionConfig::kDefaultDigits;
  std::string format = "md";
  std::optional<std::string> out;
};

struct BasinArgs {
  std::string problem;
  std::string method;
  std::vector<int> size{512, 512};
  std::vector<double> bounds{-3.0, 3.0, -3.0, 3.0};
  int max_iter = 100;
  double tol = 1e-3;
  std::string out;
  bool stats = false;
  bool shade = false;
  unsigned threads = 0;
  std::string gamma = "-1";
  std::string dong_sign = "minus";
};

MethodSpec make_spec(const std::string& method, const std::string& gamma, const std::string& dong_sign) {
  MethodSpec spec = MethodSpec::of(parse_method(method));
  spec.gamma = rational_from_decimal(gamma);
  spec.dong_sign = dong_sign == "plus" ? DongSign::Plus : DongSign::Minus;
  return spec;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const PrecisionConfig precision = with_precision(a.digits);
  const Problem problem = builtin(a.problem, precision);
  const MethodSpec spec = make_spec(a.method, a.gamma, a.dong_sign);

  std::optional<Scalar> x0;
  if (a.x0) {
    x0 = scalar_from_decimal(*a.x0, precision);
  } else if (problem.default_x0) {
    x0 = problem.default_x0;
  } else {
    throw std::invalid_argument("problem '" + problem.name + "' has no default starting point; pass --x0");
  }

  SolverConfig cfg = a.fixed_steps ? SolverConfig::fixed_steps(precision, *a.fixed_steps)
                                   : SolverConfig::defaults(precision);
  if (!a.fixed_steps) cfg.max_iterations = a.max_iter;

  const Trace trace = solve(problem, spec, *x0, cfg);
  write_trace_csv(trace, out);
  err << "termination: " << termination_name(trace.termination);
  if (trace.termination == Termination::StepFailure) err << " (" << status_name(trace.failure) << ')';
  err << ", steps: " << trace.steps() << '\n';
  return trace.failed_at_start() ? kStepFailure : kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const BenchReport report = run_bench(with_precision(a.digits));
  std::ostringstream text;
  if (a.format == "csv") {
    write_bench_csv(report, text);
  } else {
    write_bench_markdown(report, text);
  }
  if (!a.out) {
    out << text.str();
    return kOk;
  }
  std::ofstream file(*a.out);
  file << text.str();
  if (!file) {
    err << "error: cannot write '" << *a.out << "'\n";
    return kIoFailure;
  }
  return kOk;
}

int cmd_basins(const BasinArgs& a, std::ostream& out, std::ostream& err) {
  const Problem problem = builtin(a.problem, with_precision(PrecisionConfig::kMinimumDigits));
  if (!problem.complex) throw std::invalid_argument("problem '" + a.problem + "' has no complex form");
  const MethodSpec spec = make_spec(a.method, a.gamma, a.dong_sign);

  BasinConfig cfg = BasinConfig::for_problem(problem);
  cfg.width = a.size[0];
  cfg.height = a.size[1];
  cfg.re_min = a.bounds[0];
  cfg.re_max = a.bounds[1];
  cfg.im_min = a.bounds[2];
  cfg.im_max = a.bounds[3];
  cfg.max_iterations = a.max_iter;
  cfg.attract_tolerance = a.tol;
  cfg.workers = a.threads;

  const BasinGrid grid = render(problem, spec, cfg);
  try {
    write_image(grid, default_palette(), a.out, ImageOptions{a.shade});
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  }
  if (a.stats) write_stats(stats(grid, cfg.roots.size()), out);
  return kOk;
}

int cmd_list(std::ostream& out) {
  const PrecisionConfig precision;
  out << "problems:\n";
  for (const std::string& name : builtin_names()) {
    const Problem p = builtin(name, precision);
    out << "  " << p.name << "  " << p.formula << "  m=" << p.multiplicity;
    if (p.known_root) out << "  root " << p.known_root->to_display(30);
    if (p.default_x0) out << "  x0=" << p.default_x0->to_display(10);
    if (!p.known_roots_complex.empty()) {
      out << "  roots";
      for (const ComplexScalar& z : p.known_roots_complex) {
        out << ' ' << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << 'i';
      }
    }
    out << '\n';
  }
  out << "methods:\n";
  for (const MethodKind kind : all_methods()) {
    out << "  " << method_name(kind) << " requires " << (requires_second_derivative(kind) ? "f''" : "f'");
    if (kind == MethodKind::Dong) out << ", m >= 2";
    out << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple-root finding with the theta-weighted Newton-Secant method", "mroots"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Iterate one method and print the trace as CSV");
  solve_cmd->add_option("--problem", solve_args.problem, "Registry problem name")->required();
  solve_cmd->add_option("--method", solve_args.method, "newton-secant, mns, schroder, osada, dong, chun")
      ->required();
  solve_cmd->add_option("--x0", solve_args.x0, "Starting point (decimal)");
  solve_cmd->add_option("--digits", solve_args.digits, "Working precision in decimal digits")
      ->check(CLI::Range(PrecisionConfig::kMinimumDigits, 100000));
  solve_cmd->add_option("--max-iter", solve_args.max_iter)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--gamma", solve_args.gamma, "Chun family parameter");
  solve_cmd->add_option("--dong-sign", solve_args.dong_sign)->check(CLI::IsMember({"minus", "plus"}));
  solve_cmd->add_option("--fixed-steps", solve_args.fixed_steps, "Run exactly N steps")->check(CLI::PositiveNumber);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Errors, COC and ACOC for f1-f4 under mns/osada/dong/chun");
  bench_cmd->add_option("--digits", bench_args.digits)->check(CLI::Range(PrecisionConfig::kMinimumDigits, 100000));
  bench_cmd->add_option("--format", bench_args.format)->check(CLI::IsMember({"md", "csv"}));
  bench_cmd->add_option("--out", bench_args.out, "Write the report here instead of stdout");

  BasinArgs basin_args;
  auto* basins_cmd = app.add_subcommand("basins", "Render basins of attraction to a PPM image");
  basins_cmd->add_option("--problem", basin_args.problem)->required();
  basins_cmd->add_option("--method", basin_args.method)->required();
  basins_cmd->add_option("--size", basin_args.size, "W H")->expected(2)->check(CLI::PositiveNumber);
  basins_cmd->add_option("--bounds", basin_args.bounds, "re_min re_max im_min im_max")->expected(4);
  basins_cmd->add_option("--max-iter", basin_args.max_iter)->check(CLI::PositiveNumber);
  basins_cmd->add_option("--tol", basin_args.tol)->check(CLI::PositiveNumber);
  basins_cmd->add_option("--out", basin_args.out, "PPM output path")->required();
  basins_cmd->add_flag("--stats", basin_args.stats, "Print per-root pixel counts");
  basins_cmd->add_flag("--shade", basin_args.shade, "Darken pixels by iterations used");
  basins_cmd->add_option("--threads", basin_args.threads, "Worker threads (0 = all cores)");
  basins_cmd->add_option("--gamma", basin_args.gamma);
  basins_cmd->add_option("--dong-sign", basin_args.dong_sign)->check(CLI::IsMember({"minus", "plus"}));

  auto* list_cmd = app.add_subcommand("list", "Show registry problems and methods");

  std::vector<const char*> argv{"mroots"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, out, err);
    if (*bench_cmd) return cmd_bench(bench_args, out, err);
    if (*basins_cmd) return cmd_basins(basin_args, out, err);
    if (*list_cmd) return cmd_list(out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }
  return kUsage;
}

}  // namespace mroots::cli
