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

// Subcommand implementations. Each returns a RunReport; the executable in
// main.cpp only parses flags and prints.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace fidelity::cli {

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances;
  long wall_time_ms = 0;
  /// Side output for commands that emit tables (not part of the JSON).
  std::string csv;

  nlohmann::json to_json() const;
};

struct WitnessArgs {
  bool demo = false;
  std::optional<double> p;
  std::optional<double> alpha;
  std::optional<double> beta;
  double gamma = 0.0;
  double delta = 0.0;
};
RunReport cmd_witness(const WitnessArgs& args);

struct OptimalTestArgs {
  int grid = 1000;
  int d = 2;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out;
  bool sweep = false;
  int sweep_steps = 21;
};
RunReport cmd_optimal_test(const OptimalTestArgs& args);

struct NogoArgs {
  std::optional<std::filesystem::path> test_file;
  std::optional<int> random_family;
  /// "passing", "failing" or "mixed" (alternating) random tests.
  std::string family = "mixed";
  int d = 2;
  std::uint64_t seed = 0;
};
RunReport cmd_nogo(const NogoArgs& args);

struct GeneralArgs {
  int d = 2;
  int n = 1;
  int m = 1;
  int grid = 200;
  double refine_tol = 1e-4;
  int profile_points = 181;
  std::optional<std::filesystem::path> profile_out;
  std::optional<std::filesystem::path> cache_dir;
};
RunReport cmd_general(const GeneralArgs& args);

/// Single-line JSON error record written to stderr on failure.
std::string error_line(const std::string& kind, const std::string& message);

}  // namespace fidelity::cli
