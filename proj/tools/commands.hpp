// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ccm::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitConverged = 0,
  kExitCheckFailed = 1,
  kExitMaxIters = 2,
  kExitLineSearchFailed = 3,
  kExitInputError = 4,
};

struct GenerateArgs {
  std::string kind;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;
  double scale = 1.0;
  std::vector<double> angles;
  std::vector<double> weights;
  std::string out;
};

struct SolveArgs {
  std::string matrix;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_iters;
  std::optional<double> grad_tol;
  std::optional<double> initial_step;
  std::string out;
  std::string trace_csv;
};

struct CheckArgs {
  std::string matrix;
  std::optional<std::size_t> random_n;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 20;
  double perturb_modulus = 1.0;
};

int cmd_generate(const GenerateArgs &args, std::ostream &out,
                 std::ostream &err);
int cmd_solve(const SolveArgs &args, std::ostream &out, std::ostream &err);
int cmd_check(const CheckArgs &args, std::ostream &out, std::ostream &err);

/// Parses argv and dispatches to the commands above.
int run(int argc, char **argv);

} // namespace ccm::cli
