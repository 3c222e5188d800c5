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

// Impossibility side: the four-outcome decision rule on the product PVM
// (pi, 1 - pi) (x) (tau, 1 - tau), and constructive certificates that no test
// T on H (x) H accepts every equal pair with certainty while rejecting every
// orthogonal pair with certainty.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fidelity/qcore.hpp"

namespace fidelity {

/// Probability of voting 1 after observing outcome ij.
struct DecisionRule {
  double p11 = 1.0;
  double p10 = 0.0;
  double p01 = 0.0;
  double p00 = 0.0;

  /// Throws kInvalidArgument unless every entry lies in [0, 1].
  void validate() const;
};

/// Pr{1} from the four-term expansion over the PVM outcomes. The grouped
/// form (bilinear + two linear terms + constant) is evaluated as well and
/// must agree within 1e-10, otherwise kNumericalFailure is thrown.
double vote_probability(const DensityOperator& rho, const DensityOperator& pi,
                        const DensityOperator& tau, const DecisionRule& rule);

/// Grouped form only:
/// (p11-p10-p01+p00) Tr(rho pi(x)tau) + (p10-p00) Tr(rho1 pi)
///   + (p01-p00) Tr(rho2 tau) + p00.
double vote_probability_grouped(const DensityOperator& rho,
                                const DensityOperator& pi,
                                const DensityOperator& tau,
                                const DecisionRule& rule);

struct ForcingCounterexample {
  PureState sigma1;
  PureState sigma2;
  PureState pi;
  PureState tau;
  double vote = 0.0;      // Pr{1} with rho = sigma1 (x) sigma2
  double fidelity = 0.0;  // Tr(pi tau)
  double deviation = 0.0; // |vote - fidelity|
  int trial = 0;
};

struct ForcingResult {
  /// Largest deviation found; empty if it never exceeded `threshold`.
  std::optional<ForcingCounterexample> counterexample;
  int trials = 0;
  double best_deviation = 0.0;
};

/// Randomized search over product preparations rho = sigma1 (x) sigma2 and
/// pure pairs (pi, tau) for an instance where the rule's vote probability
/// differs from Tr(pi tau). Trials cycle through equal, orthogonal and
/// independent pairs. Every trial draws from its own stream derived from
/// (seed, trial), so the result does not depend on evaluation order.
ForcingResult forcing_check(const DecisionRule& rule, int trials,
                            std::uint64_t seed, int d = 2,
                            double threshold = 1e-6);

enum class ViolationKind { kEqualPairFails, kOrthogonalPairFails };

std::string_view to_string(ViolationKind kind);

struct ViolationCertificate {
  ViolationKind kind;
  PureState pi;
  PureState tau;
  /// Tr((pi (x) tau) T).
  double value = 0.0;
  /// The value the ideal test would have produced (1 or 0).
  double bound_violated = 0.0;
};

struct NoGoOptions {
  int samples = 200;
  int refine_steps = 20;
  double step = 0.1;
  double threshold = 1e-6;
  std::uint64_t seed = 0;
};

/// Minimum of <phi phi|T|phi phi> over unit phi (Haar sampling followed by
/// projected descent on the sphere). Returns the minimizer and the value.
std::pair<PureState, double> minimize_equal_pair(const TestOperator& t,
                                                 const NoGoOptions& opts = {});

/// Always returns a certificate. If some equal pair is accepted with
/// probability below 1 - threshold, the certificate is kEqualPairFails;
/// otherwise T dominates the symmetric projector and the orthogonal pair
/// (e0, e1) is accepted with probability >= 1/2.
ViolationCertificate nogo_check(const TestOperator& t,
                                       const NoGoOptions& opts = {});

/// Every violated condition found: the equal-pair minimum (if below
/// 1 - threshold) and the (e0, e1) orthogonal pair (if above 1e-9).
std::vector<ViolationCertificate> all_violations(const TestOperator& t,
                                                 const NoGoOptions& opts = {});

/// Recomputes <pi tau|T|pi tau>.
double certificate_value(const ViolationCertificate& cert, const TestOperator& t);

/// Checks the certificate invariants and that its value recomputes within
/// `tolerance`.
bool verify_certificate(const ViolationCertificate& cert, const TestOperator& t,
                        double tolerance = 1e-9);

/// U diag(lambda) U^dagger with lambda uniform in [0, 1].
TestOperator random_test_operator(int dim, std::uint64_t seed);

/// Pi_S + Pi_A T' Pi_A with T' = random_test_operator(d^2, seed). Every such
/// test accepts equal pairs with certainty.
TestOperator random_equal_pair_passing_test(int d, std::uint64_t seed);

nlohmann::json certificate_to_json(const ViolationCertificate& cert);

}  // namespace fidelity
