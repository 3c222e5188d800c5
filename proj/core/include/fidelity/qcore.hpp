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

// Dense complex linear algebra and pure-state primitives shared by every
// other module. Matrices are plain Eigen::MatrixXcd; the wrapper types below
// add the physical invariants (normalization, positivity, trace) and check
// them once at construction.

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fidelity/errors.hpp"

namespace fidelity {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Seeded engine used by every randomized routine. There is no global RNG.
using Rng = std::mt19937_64;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kNorm = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kEigenFloor = -1e-10;
inline constexpr double kTestOperator = 1e-10;
inline constexpr double kProbability = 1e-12;
inline constexpr double kProbabilitySum = 1e-10;
}  // namespace tol

/// Unit vector in C^dim.
class PureState {
 public:
  /// Throws kNormalization if the 2-norm differs from 1 by more than 1e-12.
  explicit PureState(ComplexVector amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(const ComplexVector& v);
  static PureState basis(int dim, int index);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex operator[](int i) const { return amplitudes_(i); }

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit trace.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix matrix);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  struct Trusted {};
  DensityOperator(ComplexMatrix matrix, Trusted) : matrix_(std::move(matrix)) {}
  friend DensityOperator pure_state_projector(const PureState& s);

  ComplexMatrix matrix_;
};

/// POVM effect: Hermitian A with 0 <= A <= 1.
class TestOperator {
 public:
  explicit TestOperator(ComplexMatrix matrix,
                        double tolerance = tol::kTestOperator);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Probability vector over outcome labels 0..size-1.
class OutcomeDistribution {
 public:
  explicit OutcomeDistribution(std::vector<double> probabilities);

  std::size_t size() const { return probabilities_.size(); }
  double operator[](std::size_t k) const { return probabilities_[k]; }
  std::span<const double> probabilities() const { return probabilities_; }

 private:
  std::vector<double> probabilities_;
};

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are eigenvectors
};

bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::kHermitian);
double max_abs_entry(const ComplexMatrix& m);

/// Spectral decomposition of a Hermitian matrix. Throws kInvalidOperator if
/// the input deviates from Hermiticity by more than `tolerance`.
HermitianEigen hermitian_eigen(const ComplexMatrix& m,
                               double tolerance = 1e-9);

/// |s><s|.
DensityOperator pure_state_projector(const PureState& s);

/// Tr(p t). Symmetric in its arguments bit-for-bit.
double trace_fidelity(const DensityOperator& p, const DensityOperator& t);
double trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Re <v|op|v>.
double expectation(const ComplexMatrix& op, const ComplexVector& v);

/// Kronecker product a (x) b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

/// Reduced operator on factor `keep` of a system with the given factor
/// dimensions (first factor is the most significant index).
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const int> subsystem_dims, int keep);

/// Operator exchanging the two factors of C^d (x) C^d.
ComplexMatrix swap_operator(int d);

PureState haar_random_state(int dim, std::uint64_t seed);
PureState haar_random_state(int dim, Rng& rng);

/// Haar unitary from the QR factorization of a complex Ginibre matrix with
/// the diagonal phases of R divided out.
ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed);
ComplexMatrix haar_random_unitary(int dim, Rng& rng);

}  // namespace fidelity
