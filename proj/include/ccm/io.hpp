// SPDX-License-Identifier: Apache-2.0
//
// On-disk formats used by the command-line tool.
//
// Matrix file (JSON):
//   {
//     "format": "ccm-hermitian-matrix", "version": 1,
//     "n": 3, "label": "...",
//     "provenance": {"generator": "...", "parameters": {"seed": "7", ...}},
//     "re": [[...], ...], "im": [[...], ...]
//   }
// a_ik = re[i][k] + j im[i][k]. Numbers are written in the shortest decimal
// form that parses back to the identical double (at most 17 significant
// digits), so write -> read is exact.
//
// Run report (JSON): see `RunReport`. Every key is present on every run;
// fields that do not apply (e.g. after an input error) are null.

#pragma once

#include "ccm/optimizer.hpp"
#include "ccm/problems.hpp"
#include "ccm/types.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ccm::io {

inline constexpr const char *kMatrixFormat = "ccm-hermitian-matrix";
inline constexpr int kMatrixVersion = 1;
inline constexpr const char *kReportFormat = "ccm-run-report";

/// Raised for unreadable, malformed or invariant-violating input files.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct MatrixFile {
  HermitianMatrix a;
  std::string label;
  std::string generator;
  std::map<std::string, std::string> parameters;

  static MatrixFile from_instance(const ProblemInstance &p);
};

std::string serialize_matrix(const MatrixFile &m);
MatrixFile parse_matrix(const std::string &text);

/// Throws InputError on I/O failure.
void write_matrix(const MatrixFile &m, const std::filesystem::path &path);
MatrixFile read_matrix(const std::filesystem::path &path);

struct RunReport {
  /// Matrix path, label, generator and parameters of the instance.
  std::map<std::string, std::string> instance;
  std::uint64_t seed = 0;
  OptimizerConfig config;
  /// "converged", "max_iters", "line_search_failed" or "input_error".
  std::string status;
  std::optional<double> cost_final;
  std::optional<double> grad_norm_final;
  std::optional<std::size_t> iterations;
  std::vector<IterationRecord> trace;
  double wall_time_s = 0.0;
  std::optional<std::string> error;
  std::string kernel_backend;
};

std::string serialize_report(const RunReport &r);
void write_report(const RunReport &r, const std::filesystem::path &path);

/// One row per iteration: iter,cost,grad_norm,step,backtracks
std::string trace_csv(const std::vector<IterationRecord> &trace);

/// Writes `text` to `path`, throwing InputError on failure.
void write_text(const std::filesystem::path &path, const std::string &text);

} // namespace ccm::io
