// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Criterion 10 drives the built `ccm`
// binary in a fresh temporary directory.

#include "ccm/cr_calculus.hpp"
#include "ccm/manifold.hpp"
#include "ccm/optimizer.hpp"
#include "ccm/problems.hpp"
#include "ccm/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

using namespace ccm;
namespace fs = std::filesystem;

constexpr std::size_t kDims[] = {1, 2, 5, 16};

struct Outcome {
  bool ok;
  std::string detail;
};

// Traces from every solve in criteria 5-7 and 10, for criterion 9.
std::vector<std::vector<double>> g_cost_traces;

void record(const SolveResult &r) {
  std::vector<double> costs;
  for (const auto &rec : r.trace)
    costs.push_back(rec.cost);
  g_cost_traces.push_back(std::move(costs));
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double max_abs_diff(const ComplexVec &a, const ComplexVec &b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

Outcome gradient_identity() {
  double worst = 0.0;
  for (std::size_t n : kDims)
    for (std::uint64_t inst = 0; inst < 10; ++inst) {
      const HermitianMatrix a = make_random_hermitian(n, 100 * n + inst).a;
      const CostFunction f = [&](const ComplexVec &v) { return quadratic_cost(a, v); };
      for (std::uint64_t pt = 0; pt < 10; ++pt) {
        const ComplexVec x = verify::random_gaussian(n, 1000 * n + 10 * inst + pt);
        const ComplexVec g = euclidean_gradient(a, x);
        const ComplexVec fd = fd_gradient(f, x, 1e-6);
        worst = std::max(worst, norm(subtract(g, fd)) / (1.0 + norm(g)));
      }
    }
  return {worst <= 1e-6, "max |2Ax - fd|/(1+|2Ax|) = " + sci(worst) + " <= 1e-6"};
}

Outcome per_coordinate_formulas() {
  double worst = 0.0;
  for (std::size_t n : kDims)
    for (std::uint64_t inst = 0; inst < 10; ++inst) {
      const HermitianMatrix a = make_random_hermitian(n, 100 * n + inst).a;
      for (std::uint64_t pt = 0; pt < 10; ++pt) {
        const ComplexVec x = verify::random_gaussian(n, 1000 * n + 10 * inst + pt);
        const ComplexVec g = euclidean_gradient(a, x);
        for (std::size_t m = 0; m < n; ++m) {
          const cplx p(partial_derivative(a, x, m, Part::real),
                       partial_derivative(a, x, m, Part::imag));
          worst = std::max(worst, std::abs(g[m] - p) / (1.0 + std::abs(g[m])));
        }
      }
    }
  return {worst <= 1e-12, "max relative partial mismatch = " + sci(worst) + " <= 1e-12"};
}

Outcome projection_suite() {
  double tangency = 0.0, idem = 0.0, pyth = 0.0, real_form = 0.0;
  for (std::size_t n : kDims)
    for (std::uint64_t t = 0; t < 100; ++t) {
      const ManifoldPoint x = random_point(n, 7000 + 131 * n + t);
      const ComplexVec z = verify::random_gaussian(n, 9000 + 137 * n + t);
      const double z_inf = inf_norm(z);
      const ComplexVec p = project(x, z).vec();
      const ComplexVec v = normal_component(x, z).v;
      tangency = std::max(tangency, tangent_residual(x.vec(), p) / (1.0 + z_inf));
      idem = std::max(idem, max_abs_diff(project(x, p).vec(), p) /
                                std::max(1.0, inf_norm(p)));
      const double zz = squared_norm(z);
      pyth = std::max(pyth, std::fabs(zz - squared_norm(p) - squared_norm(v)) / zz);
      const ComplexVec r =
          to_complex(verify::project_real_form(to_real(x.vec()), to_real(z)));
      real_form = std::max(real_form, max_abs_diff(p, r) / std::max(1.0, z_inf));
    }
  const bool ok = tangency <= 1e-12 && idem <= 1e-14 && pyth <= 1e-10 &&
                  real_form <= 1e-15;
  return {ok, "tangency " + sci(tangency) + " <= 1e-12, idempotence " + sci(idem) +
                  " <= 1e-14, pythagoras " + sci(pyth) + " <= 1e-10, real form " +
                  sci(real_form) + " <= 1e-15"};
}

Outcome dimension_invariant() {
  double worst = 0.0;
  for (std::size_t n : kDims) {
    const ManifoldPoint x = random_point(n, 40 + n);
    worst = std::max(worst, std::fabs(verify::projection_trace(x.vec()) -
                                      static_cast<double>(n)));
  }
  return {worst <= 1e-10, "max |trace P - n| = " + sci(worst) + " <= 1e-10"};
}

Outcome identity_degeneracy() {
  bool ok = true;
  double worst_grad = 0.0, worst_cost = 0.0;
  for (std::size_t n : kDims) {
    const SolveResult r = solve_rgd(HermitianMatrix::identity(n), random_point(n, n));
    record(r);
    ok = ok && r.status == SolveStatus::converged && r.iterations() == 0;
    worst_grad = std::max(worst_grad, r.grad_norm_final());
    worst_cost = std::max(worst_cost, std::fabs(r.cost_final - static_cast<double>(n)));
  }
  ok = ok && worst_grad <= 1e-12 && worst_cost <= 1e-12;
  return {ok, "iteration 0, grad_norm " + sci(worst_grad) + " <= 1e-12, |cost - n| " +
                  sci(worst_cost) + " <= 1e-12"};
}

Outcome known_minimum() {
  const HermitianMatrix a(2, {1.0, -1.0, -1.0, 1.0});
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const SolveResult r = solve_rgd(a, random_point(2, 500 + s));
    record(r);
    worst = std::max(worst, r.cost_final);
  }
  return {worst <= 1e-8, "20 starts, max cost_final = " + sci(worst) + " <= 1e-8"};
}

Outcome oracle_agreement() {
  bool ok = true;
  double worst_gap = -INFINITY, worst_margin = INFINITY;
  std::ostringstream statuses;
  for (std::uint64_t inst = 0; inst < 5; ++inst) {
    const HermitianMatrix a = make_random_hermitian(3, 300 + inst).a;
    const SolveResult r = solve_rgd(a, random_point(3, 400 + inst));
    record(r);
    const GridLadder ladder = grid_resolution_ladder(a, 256);
    const double gap = r.cost_final - (ladder.mid + ladder.resolution_bound);
    const double lb = eigen_lower_bound(a);
    const double margin = r.cost_final - (lb - 1e-8);
    worst_gap = std::max(worst_gap, gap);
    worst_margin = std::min(worst_margin, margin);
    ok = ok && gap <= 0.0 && margin >= 0.0;
    statuses << (inst ? "," : "") << to_string(r.status);
  }
  return {ok, "max cost - (oracle + delta) = " + sci(worst_gap) +
                  " <= 0, min cost - (n lambda_min - 1e-8) = " + sci(worst_margin) +
                  " >= 0 [" + statuses.str() + "]"};
}

Outcome retraction_order() {
  double lo = INFINITY, hi = 0.0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const ManifoldPoint x = random_point(6, 600 + t);
    const ComplexVec xi = project(x, verify::random_gaussian(6, 700 + t)).vec();
    const double ratio = verify::retraction_error(x.vec(), xi, 1e-3) /
                         verify::retraction_error(x.vec(), xi, 1e-2);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {lo >= 0.005 && hi <= 0.02,
          "error ratio in [" + sci(lo) + ", " + sci(hi) + "] within [0.005, 0.02]"};
}

Outcome monotone_descent() {
  std::size_t steps = 0, violations = 0;
  for (const auto &costs : g_cost_traces)
    for (std::size_t k = 1; k < costs.size(); ++k, ++steps)
      if (!(costs[k] < costs[k - 1]))
        ++violations;
  return {violations == 0 && !g_cost_traces.empty(),
          std::to_string(g_cost_traces.size()) + " traces, " + std::to_string(steps) +
              " accepted steps, " + std::to_string(violations) + " non-decreasing"};
}

int run_cli(const std::string &args, const fs::path &log) {
  const std::string cmd =
      std::string(CCM_CLI_PATH) + " " + args + " >>" + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_contract() {
  const fs::path dir = fs::temp_directory_path() /
                       ("ccm_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path log = dir / "log.txt";
  const std::string m = (dir / "steer.json").string();
  const std::string report = (dir / "report.json").string();

  const int gen = run_cli("generate --kind steering --n 4 --angles 0,0.5236 "
                          "--weights 1,1 --out " + m, log);
  const int solve = run_cli("solve --matrix " + m + " --seed 1 --out " + report, log);
  const int check = run_cli("check --matrix " + m + " --seed 1 --trials 20", log);

  bool report_ok = false;
  try {
    std::ifstream in(report);
    const auto doc = nlohmann::json::parse(in);
    std::vector<double> costs;
    for (const auto &rec : doc.at("trace"))
      costs.push_back(rec.at("cost").get<double>());
    g_cost_traces.push_back(costs);
    report_ok = doc.at("status") == "converged";
  } catch (const std::exception &) {
  }

  // Corrupt the generated file: break Hermitian symmetry of one entry.
  std::string text;
  {
    std::ifstream in(m);
    auto doc = nlohmann::json::parse(in);
    doc["re"][0][1] = doc["re"][0][1].get<double>() + 0.5;
    text = doc.dump();
  }
  const std::string bad = (dir / "bad.json").string();
  std::ofstream(bad) << text;
  const int corrupted =
      run_cli("solve --matrix " + bad + " --seed 1 --out " + (dir / "bad_report.json").string(),
              log);

  const bool ok = gen == 0 && solve == 0 && check == 0 && report_ok && corrupted == 4;
  fs::remove_all(dir);
  return {ok, "generate " + std::to_string(gen) + ", solve " + std::to_string(solve) +
                  ", check " + std::to_string(check) + ", corrupted input " +
                  std::to_string(corrupted) + " (expected 0, 0, 0, 4)"};
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "gradient identity", 1.0, gradient_identity},
      {2, "per-coordinate formulas", 1.0, per_coordinate_formulas},
      {3, "projection suite", 1.0, projection_suite},
      {4, "dimension invariant", 1.0, dimension_invariant},
      {5, "identity-matrix degeneracy", 1.0, identity_degeneracy},
      {6, "known-minimum instance", 1.0, known_minimum},
      {7, "oracle agreement", 30.0, oracle_agreement},
      {8, "retraction order", 1.0, retraction_order},
      {9, "monotone descent", 1.0, monotone_descent},
      {10, "cli contract", 5.0, cli_contract},
  };

  int failures = 0;
  for (const Criterion &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs <= c.budget_s;
    const bool ok = o.ok && in_budget;
    failures += ok ? 0 : 1;
    std::printf("%s criterion %2d %-27s %s; %.3f s (budget %.0f s)\n",
                ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                c.budget_s);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
