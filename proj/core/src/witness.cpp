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

#include "fidelity/witness.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fidelity {
namespace {

constexpr double kAmplitudeNormTolerance = 1e-4;
constexpr double kBasisTolerance = 1e-10;

}  // namespace

EstimatorOutput estimator_map(const DensityOperator& rho, const ComplexMatrix& w) {
  if (w.rows() != rho.dim() || w.cols() != rho.dim()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "estimator_map: witness and state dimensions differ");
  }
  const double one = trace_product(rho.matrix(), w);
  return {one, 1.0 - one};
}

ComplexMatrix entangled_state_frame(double p, double gamma, double delta) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kInfeasibleInput, "p must lie in [0, 1]");
  }
  const double q = 1.0 - p;
  const Complex i(0.0, 1.0);
  // f0 = (sqrt p, e^{i delta} sqrt q); f1 = (e^{i gamma} sqrt q, c).
  // <f0|f1> = 0 forces c = -sqrt(p) e^{i (gamma + delta)}, so every phase
  // pair is realizable and only the moduli can be infeasible.
  ComplexMatrix f(2, 2);
  f(0, 0) = std::sqrt(p);
  f(1, 0) = std::exp(i * delta) * std::sqrt(q);
  f(0, 1) = std::exp(i * gamma) * std::sqrt(q);
  f(1, 1) = -std::sqrt(p) * std::exp(i * (gamma + delta));
  return f;
}

PureState build_entangled_state(const EntangledStateParams& params) {
  const auto& [p, alpha, beta, gamma, delta] = params;
  if (!std::isfinite(p) || !std::isfinite(alpha) || !std::isfinite(beta) ||
      !std::isfinite(gamma) || !std::isfinite(delta)) {
    throw Error(ErrorKind::kInfeasibleInput, "non-finite entangled-state parameter");
  }
  if (alpha < 0.0 || beta < 0.0) {
    throw Error(ErrorKind::kInfeasibleInput, "alpha and beta must be nonnegative");
  }
  const double norm2 = alpha * alpha + beta * beta;
  if (std::abs(norm2 - 1.0) > kAmplitudeNormTolerance) {
    std::ostringstream os;
    os << "alpha^2 + beta^2 = " << norm2 << " is not 1";
    throw Error(ErrorKind::kInfeasibleInput, os.str());
  }
  const double scale = 1.0 / std::sqrt(norm2);
  const ComplexMatrix f = entangled_state_frame(p, gamma, delta);
  ComplexVector e0 = ComplexVector::Zero(2);
  ComplexVector e1 = ComplexVector::Zero(2);
  e0(0) = 1.0;
  e1(1) = 1.0;
  const ComplexVector psi = (alpha * scale) * tensor(e0, ComplexVector(f.col(0))) +
                            (beta * scale) * tensor(e1, ComplexVector(f.col(1)));
  return PureState::normalized(psi);
}

double entangled_one_component(const EntangledStateParams& params) {
  const double norm2 = params.alpha * params.alpha + params.beta * params.beta;
  const double q = 1.0 - params.p;
  return params.p +
         2.0 * q * params.alpha * params.beta / norm2 * std::cos(params.gamma - params.delta);
}

ComplexMatrix construct_witness(const std::vector<ComplexMatrix>& basis) {
  if (basis.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "construct_witness: empty basis");
  }
  const Eigen::Index d = basis.front().rows();
  if (static_cast<Eigen::Index>(basis.size()) != d * d) {
    throw Error(ErrorKind::kInvalidArgument,
                "construct_witness: an operator basis on C^d has d^2 elements");
  }
  for (const ComplexMatrix& x : basis) {
    if (x.rows() != d || x.cols() != d) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "construct_witness: basis elements have different shapes");
    }
  }
  for (std::size_t s = 0; s < basis.size(); ++s) {
    for (std::size_t t = s; t < basis.size(); ++t) {
      const Complex inner = (basis[s].adjoint() * basis[t]).trace();
      const double expected = s == t ? 1.0 : 0.0;
      if (std::abs(inner - expected) > kBasisTolerance) {
        throw Error(ErrorKind::kInvalidArgument,
                    "construct_witness: basis is not Hilbert-Schmidt orthonormal");
      }
    }
  }
  ComplexMatrix w = ComplexMatrix::Zero(d * d, d * d);
  for (const ComplexMatrix& x : basis) w += tensor(ComplexMatrix(x.adjoint()), x);
  return w;
}

std::vector<ComplexMatrix> matrix_unit_basis(int d) {
  if (d < 1) throw Error(ErrorKind::kInvalidArgument, "d must be >= 1");
  std::vector<ComplexMatrix> basis;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(d, d);
      e(i, j) = 1.0;
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

std::vector<ComplexMatrix> gell_mann_basis(int d) {
  if (d < 1) throw Error(ErrorKind::kInvalidArgument, "d must be >= 1");
  const double r2 = std::numbers::sqrt2;
  std::vector<ComplexMatrix> basis;
  basis.push_back(ComplexMatrix::Identity(d, d) / std::sqrt(double(d)));
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(j, k) = sym(k, j) = 1.0 / r2;
      basis.push_back(std::move(sym));
      ComplexMatrix anti = ComplexMatrix::Zero(d, d);
      anti(j, k) = Complex(0.0, -1.0 / r2);
      anti(k, j) = Complex(0.0, 1.0 / r2);
      basis.push_back(std::move(anti));
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    const double norm = 1.0 / std::sqrt(double(l) * (l + 1));
    for (int j = 0; j < l; ++j) diag(j, j) = norm;
    diag(l, l) = -l * norm;
    basis.push_back(std::move(diag));
  }
  return basis;
}

std::vector<ComplexMatrix> random_operator_basis(int d, std::uint64_t seed) {
  Rng rng(seed);
  const ComplexMatrix u = haar_random_unitary(d, rng);
  const ComplexMatrix v = haar_random_unitary(d, rng);
  std::vector<ComplexMatrix> basis = matrix_unit_basis(d);
  for (ComplexMatrix& e : basis) e = u * e * v;
  return basis;
}

}  // namespace fidelity
