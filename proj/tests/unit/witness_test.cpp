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

#include <gtest/gtest.h>

#include "fidelity/symmetry.hpp"
#include "support/oracles.hpp"

namespace fidelity {
namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix pauli_witness_reference() {
  // (1/2) sum over {I, X, Y, Z} of P^dagger (x) P, written out by hand.
  ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  return 0.5 * (tensor(i2, i2) + tensor(x, x) + tensor(y, y) + tensor(z, z));
}

TEST(Witness, MatrixUnitBasisGivesSwap) {
  for (int d = 1; d <= 4; ++d) {
    EXPECT_LE(max_abs_entry(construct_witness(matrix_unit_basis(d)) - swap_operator(d)), 1e-12);
  }
}

TEST(Witness, PauliBasisAgreesWithMatrixUnits) {
  const ComplexMatrix w_units = construct_witness(matrix_unit_basis(2));
  const ComplexMatrix w_gm = construct_witness(gell_mann_basis(2));
  EXPECT_LE(max_abs_entry(w_units - w_gm), 1e-12);
  EXPECT_LE(max_abs_entry(w_units - pauli_witness_reference()), 1e-12);
}

TEST(Witness, BasisIndependentAndEqualsSymMinusAntisym) {
  for (int d : {2, 3, 4}) {
    const SymAntisymProjectors p = sym_antisym_projectors(d);
    const ComplexMatrix reference = p.symmetric.matrix() - p.antisymmetric.matrix();
    const ComplexMatrix w1 = construct_witness(gell_mann_basis(d));
    EXPECT_LE(max_abs_entry(w1 - reference), 1e-12);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const ComplexMatrix w2 = construct_witness(random_operator_basis(d, seed));
      EXPECT_LE(max_abs_entry(w2 - reference), 1e-12) << "d=" << d << " seed=" << seed;
      EXPECT_TRUE(is_hermitian(w2, 1e-12));
    }
  }
}

TEST(Witness, SpectrumIsPlusMinusOne) {
  for (int d : {2, 3}) {
    const HermitianEigen eig = hermitian_eigen(construct_witness(gell_mann_basis(d)));
    EXPECT_NEAR(eig.values(0), -1.0, 1e-12);
    EXPECT_NEAR(eig.values(eig.values.size() - 1), 1.0, 1e-12);
    int negatives = 0;
    for (int i = 0; i < eig.values.size(); ++i) negatives += eig.values(i) < 0;
    EXPECT_EQ(negatives, d * (d - 1) / 2);
  }
}

TEST(Witness, RejectsNonOrthonormalBasis) {
  std::vector<ComplexMatrix> basis = matrix_unit_basis(2);
  basis[1] *= 1.001;
  EXPECT_THROW(construct_witness(basis), Error);
  basis = matrix_unit_basis(2);
  basis[1] = basis[0];
  EXPECT_THROW(construct_witness(basis), Error);
  basis = matrix_unit_basis(2);
  basis.pop_back();
  EXPECT_THROW(construct_witness(basis), Error);
}

TEST(OperatorBases, Orthonormal) {
  for (int d : {2, 3}) {
    for (const auto& basis : {matrix_unit_basis(d), gell_mann_basis(d),
                              random_operator_basis(d, 9)}) {
      ASSERT_EQ(static_cast<int>(basis.size()), d * d);
      for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
          const Complex ip = (basis[a].adjoint() * basis[b]).trace();
          EXPECT_NEAR(std::abs(ip - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-12);
        }
      }
    }
  }
}

TEST(EstimatorMap, ProductStatesGiveFidelity) {
  Rng rng(2);
  for (int d : {2, 3}) {
    const ComplexMatrix w = construct_witness(gell_mann_basis(d));
    for (int trial = 0; trial < 1000; ++trial) {
      const DensityOperator pi = pure_state_projector(haar_random_state(d, rng));
      const DensityOperator tau = pure_state_projector(haar_random_state(d, rng));
      const EstimatorOutput out = estimator_map(DensityOperator(tensor(pi.matrix(), tau.matrix())), w);
      EXPECT_NEAR(out.one_component, trace_fidelity(pi, tau), 1e-10);
      EXPECT_NEAR(out.one_component + out.zero_component, 1.0, 1e-10);
      EXPECT_GE(out.one_component, -1e-10);
    }
  }
}

TEST(EstimatorMap, DimensionMismatch) {
  const DensityOperator rho(ComplexMatrix::Identity(9, 9) / 9.0);
  EXPECT_THROW(estimator_map(rho, swap_operator(2)), Error);
}

TEST(EstimatorMap, MaximalViolator) {
  EntangledStateParams params;
  params.p = 0.0;
  params.alpha = params.beta = 1.0 / std::numbers::sqrt2;
  params.gamma = kPi;
  params.delta = 0.0;
  const PureState psi = build_entangled_state(params);
  const ComplexMatrix w = construct_witness(matrix_unit_basis(2));
  const EstimatorOutput out = estimator_map(pure_state_projector(psi), w);
  EXPECT_NEAR(out.one_component, -1.0, 1e-12);
  EXPECT_NEAR(out.zero_component, 2.0, 1e-12);
}

TEST(EstimatorMap, ViolatorDependsOnlyOnPhaseDifference) {
  const ComplexMatrix w = construct_witness(matrix_unit_basis(2));
  for (double shift : {0.0, 0.3, 1.7, -2.2}) {
    EntangledStateParams params;
    params.p = 0.0;
    params.alpha = params.beta = 1.0 / std::numbers::sqrt2;
    params.gamma = kPi + shift;
    params.delta = shift;
    EXPECT_NEAR(estimator_map(pure_state_projector(build_entangled_state(params)), w).one_component,
                -1.0, 1e-12);
  }
}

TEST(EstimatorMap, OneComponentFormulaOverRandomParameters) {
  Rng rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const ComplexMatrix w = construct_witness(matrix_unit_basis(2));
  for (int trial = 0; trial < 100; ++trial) {
    EntangledStateParams params;
    params.p = unit(rng);
    const double angle = unit(rng) * kPi / 2;
    params.alpha = std::cos(angle);
    params.beta = std::sin(angle);
    params.gamma = (unit(rng) - 0.5) * 4 * kPi;
    params.delta = (unit(rng) - 0.5) * 4 * kPi;
    const double q = 1.0 - params.p;
    const double expected =
        params.p + 2 * q * params.alpha * params.beta * std::cos(params.gamma - params.delta);
    const PureState psi = build_entangled_state(params);
    EXPECT_NEAR(estimator_map(pure_state_projector(psi), w).one_component, expected, 1e-10);
    EXPECT_NEAR(entangled_one_component(params), expected, 1e-12);
  }
}

TEST(BuildEntangledState, FrameRealizesRequestedOverlaps) {
  Rng rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double p = trial == 0 ? 0.0 : trial == 1 ? 1.0 : unit(rng);
    const double q = 1.0 - p;
    const double gamma = unit(rng) * 2 * kPi;
    const double delta = unit(rng) * 2 * kPi;
    const ComplexMatrix f = entangled_state_frame(p, gamma, delta);
    EXPECT_LE(max_abs_entry(f.adjoint() * f - ComplexMatrix::Identity(2, 2)), 1e-12);
    EXPECT_NEAR(std::norm(f(0, 0)), p, 1e-12);
    EXPECT_NEAR(std::abs(f(0, 1) - std::polar(std::sqrt(q), gamma)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(f(1, 0) - std::polar(std::sqrt(q), delta)), 0.0, 1e-12);
  }
}

TEST(BuildEntangledState, Examples) {
  EntangledStateParams product;
  product.p = 1.0;
  product.alpha = 1.0;
  product.beta = 0.0;
  const PureState psi = build_entangled_state(product);
  EXPECT_NEAR(std::abs(psi[0]), 1.0, 1e-12);

  EntangledStateParams half;
  half.p = 0.5;
  half.alpha = half.beta = 1.0 / std::numbers::sqrt2;
  EXPECT_NEAR(estimator_map(pure_state_projector(build_entangled_state(half)),
                            construct_witness(matrix_unit_basis(2)))
                  .one_component,
              1.0, 1e-12);
}

TEST(BuildEntangledState, RejectsInfeasibleInputs) {
  auto expect_infeasible = [](EntangledStateParams params) {
    try {
      (void)build_entangled_state(params);
      ADD_FAILURE() << "accepted p=" << params.p << " alpha=" << params.alpha;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInfeasibleInput);
    }
  };
  EntangledStateParams params;
  params.alpha = 0.8;
  params.beta = 0.8;
  expect_infeasible(params);
  params.alpha = 1.0;
  params.beta = 0.0;
  params.p = 1.5;
  expect_infeasible(params);
  params.p = 0.5;
  params.alpha = -0.6;
  params.beta = 0.8;
  expect_infeasible(params);
}

TEST(Witness, HaarSearchFindsNearMaximalNegativity) {
  const ComplexMatrix w = construct_witness(matrix_unit_basis(2));
  Rng rng(123);
  double best = 1.0;
  for (int s = 0; s < 100000; ++s) {
    const PureState psi = haar_random_state(4, rng);
    best = std::min(best, expectation(w, psi.amplitudes()));
  }
  EXPECT_LE(best, -0.95);
  EXPECT_GE(best, -1.0 - 1e-12);
}

}  // namespace
}  // namespace fidelity
