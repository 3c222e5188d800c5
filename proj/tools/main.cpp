// Copyright 2026 The Fidelity Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "fidelity/errors.hpp"

namespace {

using fidelity::cli::RunReport;

int emit(const RunReport& report, const std::optional<std::string>& report_out,
         bool csv_to_stdout) {
  const std::string json = report.to_json().dump(2);
  if (report_out) {
    std::ofstream out(*report_out);
    if (!out) throw fidelity::Error(fidelity::ErrorKind::kInvalidArgument,
                                    "cannot write " + *report_out);
    out << json << '\n';
  }
  if (csv_to_stdout) {
    std::cout << report.csv;
  } else if (!report_out) {
    std::cout << json << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pure-state fidelity sampling: impossibility checks and optimal approximations"};
  app.require_subcommand(1);

  std::optional<std::string> report_out;
  app.add_option("--report-out", report_out, "Also write the JSON report to this file");

  fidelity::cli::WitnessArgs witness;
  auto* w = app.add_subcommand("witness", "Evaluate the linearized fidelity estimator on an entangled state");
  w->add_flag("--demo", witness.demo, "Use p=0, alpha=beta=1/sqrt2, gamma-delta=pi");
  w->add_option("--p", witness.p, "|<e0|f0>|^2 in [0,1]");
  w->add_option("--alpha", witness.alpha, "Amplitude of |e0 f0>");
  w->add_option("--beta", witness.beta, "Amplitude of |e1 f1>");
  w->add_option("--gamma", witness.gamma, "Phase of <e0|f1>");
  w->add_option("--delta", witness.delta, "Phase of <e1|f0>");

  fidelity::cli::OptimalTestArgs optimal;
  std::optional<std::string> optimal_out;
  std::optional<std::string> sweep_out;
  auto* o = app.add_subcommand("optimal-test", "Optimal invariant test sigma*Pi_S + alpha*Pi_A");
  o->add_option("--grid", optimal.grid, "Grid points in Tr(pi tau) for the numeric check")
      ->check(CLI::Range(2, 100000000));
  o->add_option("--d", optimal.d, "Local dimension")->check(CLI::PositiveNumber);
  o->add_option("--seed", optimal.seed, "Seed for the Haar safety-net pairs");
  o->add_option("--out", optimal_out, "Write the optimal operator as matrix JSON");
  o->add_flag("--sweep", optimal.sweep, "Emit a CSV table over the (sigma, alpha) grid");
  o->add_option("--sweep-steps", optimal.sweep_steps, "Grid points per axis for --sweep")
      ->check(CLI::Range(2, 1001));
  o->add_option("--sweep-out", sweep_out, "Write the sweep CSV to a file instead of stdout");

  fidelity::cli::NogoArgs nogo;
  std::optional<std::string> test_file;
  auto* g = app.add_subcommand("nogo", "Certify that a test cannot sample the fidelity exactly");
  g->add_option("--test-file", test_file, "Test operator T as matrix JSON");
  g->add_option("--random-family", nogo.random_family, "Check N randomly generated tests");
  g->add_option("--family", nogo.family, "passing | failing | mixed");
  g->add_option("--d", nogo.d, "Local dimension for --random-family")->check(CLI::Range(2, 8));
  g->add_option("--seed", nogo.seed, "Seed for all sampling");

  fidelity::cli::GeneralArgs general;
  std::optional<std::string> profile_out;
  std::optional<std::string> cache_dir;
  auto* n = app.add_subcommand("general", "Minimax strategy for n copies and m samples");
  n->add_option("--d", general.d, "Local dimension")->required();
  n->add_option("--n", general.n, "Copies of each state")->required();
  n->add_option("--m", general.m, "Samples to produce")->required();
  n->add_option("--grid", general.grid, "Initial number of gamma grid points");
  n->add_option("--refine-tol", general.refine_tol, "Grid refinement tolerance");
  n->add_option("--profile-points", general.profile_points, "Points in the error profile");
  n->add_option("--profile-out", profile_out, "Write (gamma, L1 error) CSV");
  n->add_option("--cache-dir", cache_dir, "Decomposition cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << fidelity::cli::error_line("usage", e.what()) << '\n';
    return 2;
  }

  try {
    if (*w) return emit(fidelity::cli::cmd_witness(witness), report_out, false);
    if (*o) {
      if (optimal_out) optimal.out = *optimal_out;
      RunReport report = fidelity::cli::cmd_optimal_test(optimal);
      if (optimal.sweep && sweep_out) {
        std::ofstream csv(*sweep_out);
        if (!csv) throw fidelity::Error(fidelity::ErrorKind::kInvalidArgument,
                                        "cannot write " + *sweep_out);
        csv << report.csv;
        report.results["sweep_file"] = *sweep_out;
        return emit(report, report_out, false);
      }
      return emit(report, report_out, optimal.sweep);
    }
    if (*g) {
      if (test_file) nogo.test_file = *test_file;
      return emit(fidelity::cli::cmd_nogo(nogo), report_out, false);
    }
    if (*n) {
      if (profile_out) general.profile_out = *profile_out;
      if (cache_dir) general.cache_dir = *cache_dir;
      return emit(fidelity::cli::cmd_general(general), report_out, false);
    }
  } catch (const fidelity::Error& e) {
    std::cerr << fidelity::cli::error_line(std::string(fidelity::to_string(e.kind())), e.what())
              << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << fidelity::cli::error_line("internal", e.what()) << '\n';
    return 3;
  }
  return 0;
}
