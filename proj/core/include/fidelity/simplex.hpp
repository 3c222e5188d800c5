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

// Small dense linear-programming solver (two-phase tableau simplex).
//
//   minimize  c.x   subject to  a_i.x (<=, =, >=) b_i,   x >= 0.
//
// Intended for problems with at most a few thousand rows and columns.

#pragma once

#include <string_view>
#include <vector>

namespace fidelity::lp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<double> coeffs;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

struct Problem {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<Constraint> constraints;
};

enum class Status { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string_view to_string(Status status);

struct Solution {
  Status status = Status::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
  int iterations = 0;
};

struct Options {
  int max_iterations = 100000;
  double pivot_tolerance = 1e-10;
  double optimality_tolerance = 1e-10;
  double feasibility_tolerance = 1e-9;
};

Solution solve(const Problem& problem, const Options& options = {});

}  // namespace fidelity::lp
