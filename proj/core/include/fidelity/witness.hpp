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

// Linear extension of the ideal two-state fidelity sampler
//   pi (x) tau  ->  Tr(pi tau) z1 + (1 - Tr(pi tau)) z0
// to all of L(H) (x) L(H), and its operator form W = sum_s X_s^dagger (x) X_s.
// W is nonnegative on product states and negative on some entangled ones.

#pragma once

#include <cstdint>
#include <vector>

#include "fidelity/qcore.hpp"

namespace fidelity {

/// Coefficients of z1 and z0. They sum to 1 but need not be nonnegative.
struct EstimatorOutput {
  double one_component = 0.0;
  double zero_component = 0.0;
};

/// one_component = Tr(rho W).
EstimatorOutput estimator_map(const DensityOperator& rho, const ComplexMatrix& w);

struct EntangledStateParams {
  double p = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

/// alpha |e0 f0> + beta |e1 f1> on C^2 (x) C^2, with e the computational
/// basis and {f0, f1} an orthonormal frame satisfying |<e0|f0>|^2 = p,
/// <e0|f1> = e^{i gamma} sqrt(q), <e1|f0> = e^{i delta} sqrt(q), q = 1 - p.
///
/// alpha and beta must be nonnegative with alpha^2 + beta^2 = 1 up to 1e-4;
/// they are rescaled to exact unit norm. Throws kInfeasibleInput otherwise.
PureState build_entangled_state(const EntangledStateParams& params);

/// The frame {f0, f1} used by build_entangled_state, as the columns of a
/// 2x2 unitary.
ComplexMatrix entangled_state_frame(double p, double gamma, double delta);

/// Closed form p + 2 q alpha beta cos(gamma - delta) for the state above.
double entangled_one_component(const EntangledStateParams& params);

/// W = sum_s X_s^dagger (x) X_s. The X_s must be d^2 operators on C^d that
/// are orthonormal under <X, Y> = Tr(X^dagger Y) to within 1e-10.
ComplexMatrix construct_witness(const std::vector<ComplexMatrix>& basis);

/// E_ij, row-major.
std::vector<ComplexMatrix> matrix_unit_basis(int d);
/// {I/sqrt(d)} plus the normalized generalized Gell-Mann matrices
/// (Pauli matrices / sqrt(2) for d = 2).
std::vector<ComplexMatrix> gell_mann_basis(int d);
/// U E_ij V for Haar-random U, V.
std::vector<ComplexMatrix> random_operator_basis(int d, std::uint64_t seed);

}  // namespace fidelity
