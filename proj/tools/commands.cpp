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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cache.hpp"
#include "fidelity/approx.hpp"
#include "fidelity/general.hpp"
#include "fidelity/matrix_io.hpp"
#include "fidelity/nogo.hpp"
#include "fidelity/symmetry.hpp"
#include "fidelity/witness.hpp"

namespace fidelity::cli {
namespace {

class Stopwatch {
 public:
  long elapsed_ms() const {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count());
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path.string());
  out << text;
}

}  // namespace

nlohmann::json RunReport::to_json() const {
  return {{"command", command},     {"inputs", inputs},
          {"results", results},     {"seed", seed},
          {"tolerances", tolerances}, {"wall_time_ms", wall_time_ms}};
}

std::string error_line(const std::string& kind, const std::string& message) {
  return nlohmann::json{{"error", {{"kind", kind}, {"message", message}}}}.dump();
}

RunReport cmd_witness(const WitnessArgs& args) {
  const Stopwatch clock;
  RunReport report;
  report.command = "witness";

  EntangledStateParams params;
  if (args.demo) {
    params = {0.0, 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2,
              std::numbers::pi, 0.0};
  } else {
    if (!args.p || !args.alpha || !args.beta) {
      throw Error(ErrorKind::kInvalidArgument,
                  "witness needs --p, --alpha and --beta (or --demo)");
    }
    params = {*args.p, *args.alpha, *args.beta, args.gamma, args.delta};
  }
  report.inputs = {{"demo", args.demo},        {"p", params.p},
                   {"alpha", params.alpha},    {"beta", params.beta},
                   {"gamma", params.gamma},    {"delta", params.delta}};

  const PureState psi = build_entangled_state(params);
  const ComplexMatrix w = construct_witness(matrix_unit_basis(2));
  const EstimatorOutput out = estimator_map(pure_state_projector(psi), w);
  report.results = {{"one_component", out.one_component},
                    {"zero_component", out.zero_component},
                    {"closed_form", entangled_one_component(params)},
                    {"state", io::state_to_json(psi)}};
  report.tolerances = {{"amplitude_norm", 1e-4}};
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

RunReport cmd_optimal_test(const OptimalTestArgs& args) {
  const Stopwatch clock;
  RunReport report;
  report.command = "optimal-test";
  report.seed = args.seed;
  report.inputs = {{"grid", args.grid}, {"d", args.d}, {"sweep", args.sweep}};
  if (args.d < 1) throw Error(ErrorKind::kInvalidArgument, "--d must be >= 1");

  const OptimalInvariantTest best = optimize_invariant_test();
  const InvariantTest test(best.sigma, best.alpha, args.d);
  const DeltaNumericOptions numeric{args.grid, 100, args.seed};
  report.results = {{"sigma", best.sigma},
                    {"alpha", best.alpha},
                    {"delta_min", best.delta},
                    {"delta_numeric", delta_numeric(test, numeric)},
                    {"d", args.d}};
  if (args.out) {
    io::write_json_file(*args.out, io::matrix_to_json(test.operator_form().matrix()));
    report.results["operator_file"] = args.out->string();
  }
  if (args.sweep) {
    std::ostringstream csv;
    csv.precision(17);
    csv << "sigma,alpha,delta_closed,delta_numeric\n";
    for (const SweepRow& row : delta_sweep(args.sweep_steps, args.d, numeric)) {
      csv << row.sigma << ',' << row.alpha << ',' << row.delta_closed << ','
          << row.delta_numeric << '\n';
    }
    report.csv = csv.str();
    report.results["sweep_rows"] = args.sweep_steps * args.sweep_steps;
  }
  report.tolerances = {{"optimizer_step", 1e-13}};
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

RunReport cmd_nogo(const NogoArgs& args) {
  const Stopwatch clock;
  RunReport report;
  report.command = "nogo";
  report.seed = args.seed;
  if (args.test_file.has_value() == args.random_family.has_value()) {
    throw Error(ErrorKind::kInvalidArgument,
                "nogo needs exactly one of --test-file or --random-family");
  }
  NoGoOptions opts;
  opts.seed = args.seed;

  nlohmann::json certificates = nlohmann::json::array();
  bool all_verified = true;
  if (args.test_file) {
    report.inputs = {{"test_file", args.test_file->string()}};
    const TestOperator t(io::read_matrix_file(*args.test_file));
    const ViolationCertificate primary = nogo_check(t, opts);
    all_verified = verify_certificate(primary, t);
    for (const ViolationCertificate& c : all_violations(t, opts)) {
      nlohmann::json j = certificate_to_json(c);
      j["self_verifying"] = verify_certificate(c, t);
      all_verified = all_verified && j["self_verifying"].get<bool>();
      certificates.push_back(std::move(j));
    }
    nlohmann::json primary_json = certificate_to_json(primary);
    primary_json["self_verifying"] = verify_certificate(primary, t);
    report.results["primary"] = std::move(primary_json);
  } else {
    const int count = *args.random_family;
    if (count < 1) throw Error(ErrorKind::kInvalidArgument, "--random-family must be >= 1");
    if (args.family != "passing" && args.family != "failing" && args.family != "mixed") {
      throw Error(ErrorKind::kInvalidArgument,
                  "--family must be passing, failing or mixed");
    }
    report.inputs = {{"random_family", count}, {"family", args.family}, {"d", args.d}};
    for (int i = 0; i < count; ++i) {
      const std::uint64_t test_seed = args.seed * 1000003ull + static_cast<std::uint64_t>(i);
      const bool passing =
          args.family == "passing" || (args.family == "mixed" && i % 2 == 0);
      const TestOperator t = passing ? random_equal_pair_passing_test(args.d, test_seed)
                                     : random_test_operator(args.d * args.d, test_seed);
      NoGoOptions local = opts;
      local.seed = test_seed;
      const ViolationCertificate c = nogo_check(t, local);
      nlohmann::json j = certificate_to_json(c);
      j["family"] = passing ? "passing" : "failing";
      j["self_verifying"] = verify_certificate(c, t);
      all_verified = all_verified && j["self_verifying"].get<bool>();
      certificates.push_back(std::move(j));
    }
  }
  report.results["count"] = certificates.size();
  report.results["certificates"] = std::move(certificates);
  report.results["all_self_verifying"] = all_verified;
  report.tolerances = {{"equal_pair_threshold", opts.threshold},
                       {"certificate_recompute", 1e-9},
                       {"test_operator", tol::kTestOperator}};
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

RunReport cmd_general(const GeneralArgs& args) {
  const Stopwatch clock;
  RunReport report;
  report.command = "general";
  report.inputs = {{"d", args.d}, {"n", args.n}, {"m", args.m},
                   {"grid", args.grid}, {"refine_tol", args.refine_tol}};
  check_supported_range(args.d, args.n, args.m);
  if (args.grid < 2) throw Error(ErrorKind::kInvalidArgument, "--grid must be >= 2");
  if (!(args.refine_tol > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "--refine-tol must be positive");
  }

  const CachedDecomposition cached =
      load_or_build_decomposition(args.d, args.n, cache_directory(args.cache_dir));
  const GeneralInstance inst(args.m, cached.decomposition, uniform_gamma_grid(args.grid));
  MinimaxOptions opts;
  opts.refine_tolerance = args.refine_tol;
  const MinimaxResult result = solve_minimax(inst, opts);

  const std::vector<ProfilePoint> profile =
      error_profile(inst, result.coeffs, uniform_gamma_grid(std::max(2, args.profile_points)));
  nlohmann::json profile_json = nlohmann::json::array();
  for (const ProfilePoint& p : profile) {
    profile_json.push_back({{"gamma", p.gamma}, {"error", p.error}});
  }
  if (args.profile_out) {
    std::ostringstream csv;
    csv.precision(17);
    csv << "gamma,l1_error\n";
    for (const ProfilePoint& p : profile) csv << p.gamma << ',' << p.error << '\n';
    write_text(*args.profile_out, csv.str());
  }

  nlohmann::json blocks = nlohmann::json::array();
  for (const IsotypicBlock& b : inst.decomposition().blocks()) {
    blocks.push_back({{"l", b.l}, {"dim", b.dim}});
  }
  report.results = {{"coefficients", coefficients_to_json(result.coeffs)},
                    {"value_l1", result.value},
                    {"per_outcome", result.value / 2.0},
                    {"continuous_value_l1", result.continuous_value},
                    {"grid_points", result.final_grid.size()},
                    {"refine_rounds", result.refine_rounds},
                    {"lp_solves", result.lp_solves},
                    {"blocks", std::move(blocks)},
                    {"profile", std::move(profile_json)},
                    {"cache", {{"path", cached.path.string()},
                               {"status", to_string(cached.status)}}}};
  report.tolerances = {{"refine_tol", args.refine_tol},
                       {"beta_fit_holdout", 1e-8}};
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

}  // namespace fidelity::cli
