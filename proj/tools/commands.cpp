// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include "ccm/io.hpp"
#include "ccm/kernels.hpp"
#include "ccm/manifold.hpp"
#include "ccm/optimizer.hpp"
#include "ccm/problems.hpp"
#include "ccm/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>

namespace ccm::cli {
namespace {

int exit_code(SolveStatus status) {
  switch (status) {
  case SolveStatus::converged:
    return kExitConverged;
  case SolveStatus::max_iters:
    return kExitMaxIters;
  case SolveStatus::line_search_failed:
    return kExitLineSearchFailed;
  }
  return kExitInputError;
}

ProblemInstance generate_instance(const GenerateArgs &args) {
  if (!args.n)
    throw io::InputError("generate: --n is required");
  if (args.kind == "random-hermitian") {
    if (!args.seed)
      throw io::InputError("generate: --seed is required for random-hermitian");
    return make_random_hermitian(*args.n, *args.seed, args.scale);
  }
  if (args.kind == "steering")
    return make_steering_problem(*args.n, args.angles, args.weights);
  throw io::InputError("generate: unknown --kind '" + args.kind +
                       "' (expected random-hermitian or steering)");
}

} // namespace

int cmd_generate(const GenerateArgs &args, std::ostream &out,
                 std::ostream &err) {
  try {
    const ProblemInstance instance = generate_instance(args);
    io::write_matrix(io::MatrixFile::from_instance(instance), args.out);
    out << "wrote " << instance.label << " to " << args.out << "\n";
    return kExitConverged;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_solve(const SolveArgs &args, std::ostream &out, std::ostream &err) {
  io::RunReport report;
  report.instance["path"] = args.matrix;
  report.seed = args.seed;
  report.kernel_backend = std::string(kernels::active().name);
  if (args.max_iters)
    report.config.max_iters = *args.max_iters;
  if (args.grad_tol)
    report.config.grad_tol = *args.grad_tol;
  report.config.initial_step = args.initial_step;

  const auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         started)
        .count();
  };

  std::optional<io::MatrixFile> matrix;
  try {
    report.config.validate();
    matrix = io::read_matrix(args.matrix);
  } catch (const std::exception &e) {
    report.status = "input_error";
    report.error = e.what();
    report.wall_time_s = elapsed();
    err << "error: " << e.what() << "\n";
    try {
      io::write_report(report, args.out);
    } catch (const std::exception &write_error) {
      err << "error: " << write_error.what() << "\n";
    }
    return kExitInputError;
  }

  report.instance["label"] = matrix->label;
  report.instance["generator"] = matrix->generator;
  for (const auto &[key, value] : matrix->parameters)
    report.instance["param." + key] = value;
  report.config.initial_step = report.config.resolved_initial_step(matrix->a);

  int code = kExitInputError;
  try {
    const ManifoldPoint x0 = random_point(matrix->a.dim(), args.seed);
    const SolveResult result = solve_rgd(matrix->a, x0, report.config);
    report.status = std::string(to_string(result.status));
    report.cost_final = result.cost_final;
    report.grad_norm_final = result.grad_norm_final();
    report.iterations = result.iterations();
    report.trace = result.trace;
    code = exit_code(result.status);
  } catch (const std::exception &e) {
    // Numerical breakdown inside the solver; reported like an input fault
    // since a valid matrix never triggers it.
    report.status = "input_error";
    report.error = e.what();
    err << "error: " << e.what() << "\n";
  }
  report.wall_time_s = elapsed();

  try {
    io::write_report(report, args.out);
    if (!args.trace_csv.empty())
      io::write_text(args.trace_csv, io::trace_csv(report.trace));
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (report.cost_final) {
    out << std::setprecision(17) << "status " << report.status << " cost "
        << *report.cost_final << " grad_norm " << *report.grad_norm_final
        << " iterations " << *report.iterations << "\n";
  }
  return code;
}

int cmd_check(const CheckArgs &args, std::ostream &out, std::ostream &err) {
  std::optional<HermitianMatrix> a;
  verify::SuiteOptions options;
  try {
    if (args.trials == 0)
      throw io::InputError("check: --trials must be at least 1");
    if (!args.matrix.empty() == args.random_n.has_value())
      throw io::InputError("check: give exactly one of --matrix or --random");
    if (!args.seed)
      throw io::InputError("check: --seed is required");
    if (args.random_n)
      a = make_random_hermitian(*args.random_n, *args.seed).a;
    else
      a = io::read_matrix(args.matrix).a;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  options.trials = args.trials;
  options.seed = *args.seed;
  options.point_modulus = args.perturb_modulus;

  std::vector<verify::CheckOutcome> outcomes;
  try {
    outcomes = verify::run_suite(*a, options);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }

  out << "n = " << a->dim() << ", trials = " << args.trials
      << ", kernels = " << kernels::active().name << "\n";
  out << std::scientific << std::setprecision(3);
  for (const auto &c : outcomes) {
    out << (c.passed() ? "PASS " : "FAIL ") << std::left << std::setw(28)
        << c.name << std::right;
    if (c.best != c.worst)
      out << " observed [" << c.best << ", " << c.worst << "]";
    else
      out << " observed " << c.worst;
    if (std::isinf(c.lower))
      out << " <= " << c.upper << "\n";
    else
      out << " within [" << c.lower << ", " << c.upper << "]\n";
  }
  if (!verify::all_passed(outcomes)) {
    for (const auto &c : outcomes)
      if (!c.passed())
        err << "check failed: " << c.name << "\n";
    return kExitCheckFailed;
  }
  return kExitConverged;
}

int run(int argc, char **argv) {
  CLI::App app{"Riemannian optimization of x^H A x over unit-modulus vectors"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto *generate = app.add_subcommand("generate", "write a problem matrix");
  generate->add_option("--kind", gen.kind, "random-hermitian or steering")
      ->required()
      ->check(CLI::IsMember({"random-hermitian", "steering"}));
  generate->add_option("--n", gen.n, "dimension / array elements")->required();
  generate->add_option("--seed", gen.seed, "random seed (random-hermitian)");
  generate->add_option("--scale", gen.scale, "matrix scale (random-hermitian)");
  generate->add_option("--angles", gen.angles, "steering angles in radians")
      ->delimiter(',');
  generate->add_option("--weights", gen.weights, "steering weights")
      ->delimiter(',');
  generate->add_option("--out", gen.out, "output matrix file")->required();

  SolveArgs solve;
  auto *solve_cmd = app.add_subcommand("solve", "run gradient descent");
  solve_cmd->add_option("--matrix", solve.matrix, "matrix file")->required();
  solve_cmd->add_option("--seed", solve.seed, "seed for the start point")
      ->required();
  solve_cmd->add_option("--max-iters", solve.max_iters);
  solve_cmd->add_option("--grad-tol", solve.grad_tol);
  solve_cmd->add_option("--initial-step", solve.initial_step);
  solve_cmd->add_option("--out", solve.out, "run report (JSON)")->required();
  solve_cmd->add_option("--trace-csv", solve.trace_csv,
                        "optional per-iteration CSV export");

  CheckArgs check;
  auto *check_cmd =
      app.add_subcommand("check", "verify gradient and projection identities");
  auto *matrix_opt = check_cmd->add_option("--matrix", check.matrix);
  auto *random_opt = check_cmd->add_option("--random", check.random_n,
                                           "use a random Hermitian of size N");
  matrix_opt->excludes(random_opt);
  check_cmd->add_option("--seed", check.seed)->required();
  check_cmd->add_option("--trials", check.trials)->required();
  // Test hook: scales sampled points off the manifold.
  check_cmd->add_option("--perturb-modulus", check.perturb_modulus)
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInputError;
  }

  if (*generate)
    return cmd_generate(gen, std::cout, std::cerr);
  if (*solve_cmd)
    return cmd_solve(solve, std::cout, std::cerr);
  return cmd_check(check, std::cout, std::cerr);
}

} // namespace ccm::cli
