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

// Best universal approximation of the fidelity sampler by a single test on
// one copy of each state. Invariance under U (x) U and under the factor swap
// restricts the test to A = sigma Pi_S + alpha Pi_A.

#pragma once

#include <cstdint>
#include <vector>

#include "fidelity/qcore.hpp"

namespace fidelity {

class InvariantTest {
 public:
  /// Throws kInvalidArgument unless both coefficients lie in [0, 1] and d >= 1.
  InvariantTest(double sigma, double alpha, int d = 2);

  double sigma() const { return sigma_; }
  double alpha() const { return alpha_; }
  int d() const { return d_; }

  /// sigma Pi_S + alpha Pi_A on C^d (x) C^d.
  TestOperator operator_form() const;

  /// Acceptance probability for a pure pair with Tr(pi tau) = fidelity:
  /// alpha + (sigma - alpha)(1 + fidelity)/2.
  double acceptance(double fidelity) const;

 private:
  double sigma_;
  double alpha_;
  int d_;
};

/// max{(sigma + alpha)/2, 1 - sigma}.
double delta_closed_form(const InvariantTest& t);

struct DeltaNumericOptions {
  int grid_points = 1000;
  int haar_pairs = 100;
  std::uint64_t seed = 0;
};

/// Worst-case |Tr((pi (x) tau) A) - Tr(pi tau)| over a grid in x = Tr(pi tau)
/// (endpoints always included), plus direct evaluation on Haar-random pairs.
double delta_numeric(const InvariantTest& t, const DeltaNumericOptions& opts = {});

struct OptimalInvariantTest {
  double sigma = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
};

/// Minimizes delta_closed_form over the unit square: a coarse grid scan
/// followed by compass search refined down to 1e-13.
OptimalInvariantTest optimize_invariant_test(int grid = 101);

/// Same search restricted to sigma = alpha (multiples of the identity).
OptimalInvariantTest optimize_identity_multiple(int grid = 101);

struct PartialInfoReport {
  int trials = 0;
  int decided = 0;     // pairs with |Tr(pi tau) - 1/2| > 1e-9
  int agreements = 0;  // decided pairs where the two signs agree
  double max_identity_error = 0.0;  // max |Tr(pi(x)tau T) - (1 + F)/3|
};

/// For T = (2/3) Pi_S on C^d and Haar-random pairs, compares the sign of
/// Tr((pi (x) tau) T) - 1/2 with the sign of Tr(pi tau) - 1/2.
PartialInfoReport partial_info_check(int trials, std::uint64_t seed, int d = 2);

struct SweepRow {
  double sigma;
  double alpha;
  double delta_closed;
  double delta_numeric;
};

/// Closed and numeric delta on a steps x steps grid of [0, 1]^2.
std::vector<SweepRow> delta_sweep(int steps, int d, const DeltaNumericOptions& opts);

}  // namespace fidelity
