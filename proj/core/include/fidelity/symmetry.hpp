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

// Permutation-symmetric subspaces and the collective unitary action on them.
//
// Conventions:
//  * H_+^n, the symmetric subspace of (C^d)^{(x)n}, uses the occupation-number
//    basis ordered lexicographically on sorted index tuples, so for d = 2,
//    n = 2 the basis is |00>, (|01>+|10>)/sqrt2, |11>.
//  * Operators on H_+^n (x) H_+^n use index i * D + j, where i labels the
//    first (pi) factor and D = dim H_+^n.
//  * Block l of the isotypic decomposition carries the U(d) irrep of highest
//    weight (2n - l, l, 0, ..., 0). l = 0 is the totally symmetric part.

#pragma once

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "fidelity/qcore.hpp"

namespace fidelity {

struct SymAntisymProjectors {
  TestOperator symmetric;
  TestOperator antisymmetric;
};

/// (I + SWAP)/2 and (I - SWAP)/2 on C^d (x) C^d.
SymAntisymProjectors sym_antisym_projectors(int d);

struct SymmetricEmbedding {
  int d = 0;
  int n = 0;
  /// Sorted index tuple (i_1 <= ... <= i_n) labelling each basis vector.
  std::vector<std::vector<int>> tuples;
  /// Occupation numbers (n_0, ..., n_{d-1}) for each basis vector.
  std::vector<std::vector<int>> occupations;
  /// d^n x dim_plus isometry whose columns are the basis vectors.
  ComplexMatrix basis;

  int dim_plus() const { return static_cast<int>(basis.cols()); }
};

/// C(n + d - 1, d - 1).
long symmetric_dimension(int d, int n);

SymmetricEmbedding symmetric_embedding(int d, int n);

/// Coordinates of |s>^{(x)n} in the basis of `e`.
PureState embed_state_power(const PureState& s, int n,
                            const SymmetricEmbedding& e);

/// Restriction of U^{(x)n} to H_+^n.
ComplexMatrix embed_unitary_power(const ComplexMatrix& u,
                                  const SymmetricEmbedding& e);

/// Collective generator sum_i E_ab^{(i)} restricted to H_+^n, computed
/// directly on occupation numbers (a^dagger_a a_b).
ComplexMatrix collective_generator(const SymmetricEmbedding& e, int a, int b);

/// sum_{a,b} G_ab (x) G_ba on H_+^n (x) H_+^n. It commutes with the collective
/// action and acts as a distinct scalar on every isotypic block.
ComplexMatrix cross_casimir(const SymmetricEmbedding& e);

/// Dimension of the U(d) irrep with the given highest weight (Weyl formula).
long weyl_dimension(std::span<const int> highest_weight, int d);

/// Tr S_l for weight (2n - l, l, 0, ...).
long isotypic_block_dimension(int d, int n, int l);

/// Eigenvalue of cross_casimir on block l.
double cross_casimir_eigenvalue(int d, int n, int l);

struct IsotypicBlock {
  int l = 0;
  long dim = 0;
  ComplexMatrix projector;
};

class IsotypicDecomposition {
 public:
  IsotypicDecomposition(int d, int n, std::vector<IsotypicBlock> blocks);

  int d() const { return d_; }
  int n() const { return n_; }
  /// dim(H_+^n)^2.
  int space_dim() const;
  std::span<const IsotypicBlock> blocks() const { return blocks_; }
  const ComplexMatrix& projector(int l) const;
  long block_dim(int l) const;

 private:
  int d_;
  int n_;
  std::vector<IsotypicBlock> blocks_;
};

/// Builds S_0..S_n by diagonalizing a generic element of the commutant
/// (irrational combination of the factor swap and cross_casimir) and
/// clustering its spectrum. Requires d >= 2, n >= 1. Throws
/// kNumericalFailure if the spectrum cannot be split into n + 1 clusters
/// after three different combinations.
IsotypicDecomposition isotypic_projectors(int d, int n);

/// Collective Haar average: sum_l Tr(rho S_l) S_l / Tr S_l.
DensityOperator twirl(const DensityOperator& rho,
                      const IsotypicDecomposition& dec);
ComplexMatrix twirl(const ComplexMatrix& op, const IsotypicDecomposition& dec);

/// beta_l = Tr(rho S_l).
std::vector<double> beta_coefficients(const DensityOperator& rho,
                                      const IsotypicDecomposition& dec);
/// beta_l = <psi|S_l|psi> for a pure state on H_+^n (x) H_+^n.
std::vector<double> beta_coefficients(const ComplexVector& psi,
                                      const IsotypicDecomposition& dec);

/// Embedded pi^{(x)n} (x) tau^{(x)n} as a vector on H_+^n (x) H_+^n.
ComplexVector embed_pair_power(const PureState& pi, const PureState& tau,
                               const SymmetricEmbedding& e);

nlohmann::json decomposition_to_json(const IsotypicDecomposition& dec);
IsotypicDecomposition decomposition_from_json(const nlohmann::json& j);

}  // namespace fidelity
