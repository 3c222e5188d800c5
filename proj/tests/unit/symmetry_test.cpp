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

#include "fidelity/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <tuple>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace fidelity {
namespace {

// Binomial coefficient by the multiplicative formula (independent of the
// library's stars-and-bars enumeration).
long choose(long a, long b) {
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// Applies the transposition of adjacent tensor factors (i, i+1) to a vector
// in (C^d)^{(x)n} by explicit index shuffling.
ComplexVector transpose_factors(const ComplexVector& v, int d, int n, int i) {
  ComplexVector out(v.size());
  for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
    std::vector<int> digits(n);
    Eigen::Index rest = idx;
    for (int f = n - 1; f >= 0; --f) {
      digits[f] = static_cast<int>(rest % d);
      rest /= d;
    }
    std::swap(digits[i], digits[i + 1]);
    Eigen::Index target = 0;
    for (int f = 0; f < n; ++f) target = target * d + digits[f];
    out(target) = v(idx);
  }
  return out;
}

// ---------------------------------------------------------------------------
// sym_antisym_projectors

TEST(SymAntisym, TracesAndDimensionOne) {
  const SymAntisymProjectors p2 = sym_antisym_projectors(2);
  EXPECT_NEAR(p2.symmetric.matrix().trace().real(), 3.0, 1e-12);
  EXPECT_NEAR(p2.antisymmetric.matrix().trace().real(), 1.0, 1e-12);
  const SymAntisymProjectors p1 = sym_antisym_projectors(1);
  EXPECT_NEAR(p1.symmetric.matrix()(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(p1.antisymmetric.matrix()(0, 0)), 0.0, 1e-15);
}

TEST(SymAntisym, FixesSymmetricVectors) {
  // Build v from the f_i = e_i(x)e_i and f_ij = (e_i(x)e_j + e_j(x)e_i)/sqrt2 basis.
  const int d = 3;
  Rng rng(17);
  std::normal_distribution<double> normal;
  ComplexVector v = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      const Complex c(normal(rng), normal(rng));
      ComplexVector f = ComplexVector::Zero(d * d);
      if (i == j) {
        f(i * d + i) = 1.0;
      } else {
        f(i * d + j) = f(j * d + i) = 1.0 / std::numbers::sqrt2;
      }
      v += c * f;
    }
  }
  v.normalize();
  const ComplexMatrix ps = sym_antisym_projectors(d).symmetric.matrix();
  EXPECT_LE((ps * v - v).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SymAntisym, ResolutionOfIdentityAndSwap) {
  for (int d = 1; d <= 6; ++d) {
    const SymAntisymProjectors p = sym_antisym_projectors(d);
    const ComplexMatrix& s = p.symmetric.matrix();
    const ComplexMatrix& a = p.antisymmetric.matrix();
    const int dd = d * d;
    EXPECT_LE(max_abs_entry(s + a - ComplexMatrix::Identity(dd, dd)), 1e-12) << d;
    EXPECT_LE(max_abs_entry(s * a), 1e-12) << d;
    EXPECT_LE(max_abs_entry(s - a - swap_operator(d)), 1e-12) << d;
    EXPECT_NEAR(s.trace().real(), d * (d + 1) / 2.0, 1e-12);
    EXPECT_NEAR(a.trace().real(), d * (d - 1) / 2.0, 1e-12);
  }
}

TEST(SymAntisym, OverlapIdentity) {
  Rng rng(1001);
  for (int d : {2, 3, 4}) {
    const ComplexMatrix ps = sym_antisym_projectors(d).symmetric.matrix();
    for (int trial = 0; trial < 1000; ++trial) {
      const DensityOperator pi = pure_state_projector(haar_random_state(d, rng));
      const DensityOperator tau = pure_state_projector(haar_random_state(d, rng));
      const double lhs = trace_product(tensor(pi.matrix(), tau.matrix()), ps);
      EXPECT_NEAR(lhs, (1.0 + trace_fidelity(pi, tau)) / 2.0, 1e-10);
    }
  }
}

// ---------------------------------------------------------------------------
// symmetric_embedding

TEST(SymmetricEmbedding, Examples) {
  const SymmetricEmbedding e21 = symmetric_embedding(2, 1);
  EXPECT_EQ(e21.dim_plus(), 2);
  EXPECT_LE(max_abs_entry(e21.basis - ComplexMatrix::Identity(2, 2)), 0.0);

  const SymmetricEmbedding e22 = symmetric_embedding(2, 2);
  ASSERT_EQ(e22.dim_plus(), 3);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 3);
  expected(0, 0) = 1.0;
  expected(1, 1) = expected(2, 1) = 1.0 / std::numbers::sqrt2;
  expected(3, 2) = 1.0;
  EXPECT_LE(max_abs_entry(e22.basis - expected), 1e-15);

  EXPECT_EQ(symmetric_embedding(3, 2).dim_plus(), 6);
  EXPECT_EQ(symmetric_dimension(3, 2), 6);
}

TEST(SymmetricEmbedding, OrthonormalAndPermutationInvariant) {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const SymmetricEmbedding e = symmetric_embedding(d, n);
      EXPECT_EQ(e.dim_plus(), choose(n + d - 1, d - 1)) << d << "," << n;
      EXPECT_EQ(symmetric_dimension(d, n), choose(n + d - 1, d - 1));
      const ComplexMatrix gram = e.basis.adjoint() * e.basis;
      EXPECT_LE(max_abs_entry(gram - ComplexMatrix::Identity(gram.rows(), gram.cols())),
                1e-12);
      for (int c = 0; c < e.dim_plus(); ++c) {
        for (int i = 0; i + 1 < n; ++i) {
          const ComplexVector col = e.basis.col(c);
          EXPECT_LE((transpose_factors(col, d, n, i) - col).cwiseAbs().maxCoeff(), 1e-12);
        }
      }
    }
  }
}

TEST(SymmetricEmbedding, RejectsNonPositive) {
  EXPECT_THROW(symmetric_embedding(0, 2), Error);
  EXPECT_THROW(symmetric_embedding(2, 0), Error);
}

// ---------------------------------------------------------------------------
// embed_state_power / embed_unitary_power

TEST(EmbedStatePower, Examples) {
  const SymmetricEmbedding e1 = symmetric_embedding(2, 1);
  const PureState s = haar_random_state(2, 4);
  EXPECT_LE((embed_state_power(s, 1, e1).amplitudes() - s.amplitudes()).cwiseAbs().maxCoeff(),
            1e-15);

  const SymmetricEmbedding e2 = symmetric_embedding(2, 2);
  const ComplexVector zero = embed_state_power(PureState::basis(2, 0), 2, e2).amplitudes();
  EXPECT_NEAR(std::abs(zero(0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(zero.tail(2).norm(), 0.0, 1e-15);

  const double r = 1.0 / std::numbers::sqrt2;
  ComplexVector plus(2);
  plus << r, r;
  const ComplexVector p2 = embed_state_power(PureState(plus), 2, e2).amplitudes();
  EXPECT_NEAR(p2(0).real(), 0.5, 1e-15);
  EXPECT_NEAR(p2(1).real(), r, 1e-15);
  EXPECT_NEAR(p2(2).real(), 0.5, 1e-15);
}

TEST(EmbedStatePower, MatchesKroneckerPower) {
  Rng rng(6);
  for (int d = 2; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const SymmetricEmbedding e = symmetric_embedding(d, n);
      const PureState s = haar_random_state(d, rng);
      const ComplexVector full = oracle::kron_power(s.amplitudes(), n);
      const ComplexVector coords = embed_state_power(s, n, e).amplitudes();
      EXPECT_NEAR(coords.norm(), 1.0, 1e-12);
      EXPECT_LE((e.basis * coords - full).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
  EXPECT_THROW(embed_state_power(haar_random_state(3, 0), 2, symmetric_embedding(2, 2)),
               Error);
}

TEST(EmbedUnitaryPower, MatchesKroneckerPowerAndIsUnitary) {
  Rng rng(8);
  for (int d = 2; d <= 3; ++d) {
    for (int n = 1; n <= 3; ++n) {
      const SymmetricEmbedding e = symmetric_embedding(d, n);
      const ComplexMatrix u = haar_random_unitary(d, rng);
      const ComplexMatrix eu = embed_unitary_power(u, e);
      EXPECT_LE(max_abs_entry(eu - oracle::embed_unitary_kron(u, e)), 1e-12);
      EXPECT_LE(max_abs_entry(eu.adjoint() * eu -
                              ComplexMatrix::Identity(eu.rows(), eu.cols())),
                1e-12);
    }
  }
}

// ---------------------------------------------------------------------------
// Commutant building blocks

TEST(CollectiveGenerator, MatchesSumOfSiteOperators) {
  for (int d = 2; d <= 3; ++d) {
    for (int n = 1; n <= 3; ++n) {
      const SymmetricEmbedding e = symmetric_embedding(d, n);
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          ComplexMatrix unit = ComplexMatrix::Zero(d, d);
          unit(a, b) = 1.0;
          ComplexMatrix full = ComplexMatrix::Zero(e.basis.rows(), e.basis.rows());
          for (int site = 0; site < n; ++site) full += oracle::site_operator(unit, site, n);
          const ComplexMatrix reference = e.basis.adjoint() * full * e.basis;
          EXPECT_LE(max_abs_entry(collective_generator(e, a, b) - reference), 1e-12);
        }
      }
    }
  }
}

TEST(WeylDimension, KnownValues) {
  // U(2): weight (k, 0) has dimension k + 1; U(3) (2,0,0) -> 6, (1,1,0) -> 3,
  // (2,1,0) -> 8 (adjoint), (4,0,0) -> 15, (3,1,0) -> 15, (2,2,0) -> 6.
  const std::vector<std::tuple<std::vector<int>, int, long>> cases = {
      {{3, 0}, 2, 4},    {{2, 2}, 2, 1},    {{2, 0, 0}, 3, 6}, {{1, 1, 0}, 3, 3},
      {{2, 1, 0}, 3, 8}, {{4, 0, 0}, 3, 15}, {{3, 1, 0}, 3, 15}, {{2, 2, 0}, 3, 6},
  };
  for (const auto& [weight, d, dim] : cases) EXPECT_EQ(weyl_dimension(weight, d), dim);
}

// ---------------------------------------------------------------------------
// isotypic_projectors

class IsotypicSuite : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(IsotypicSuite, ProjectorInvariants) {
  const auto [d, n] = GetParam();
  const IsotypicDecomposition dec = isotypic_projectors(d, n);
  ASSERT_EQ(static_cast<int>(dec.blocks().size()), n + 1);
  const int dim = dec.space_dim();
  const long dp = choose(n + d - 1, d - 1);
  EXPECT_EQ(dim, dp * dp);

  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  long total = 0;
  for (int l = 0; l <= n; ++l) {
    const ComplexMatrix& s = dec.projector(l);
    EXPECT_EQ(dec.blocks()[l].l, l);
    EXPECT_LE(max_abs_entry(s * s - s), 1e-8);
    EXPECT_TRUE(is_hermitian(s, 1e-8));
    EXPECT_NEAR(s.trace().real(), double(dec.block_dim(l)), 1e-8);
    EXPECT_EQ(dec.block_dim(l), isotypic_block_dimension(d, n, l));
    total += dec.block_dim(l);
    sum += s;
    for (int l2 = l + 1; l2 <= n; ++l2) {
      EXPECT_LE(max_abs_entry(s * dec.projector(l2)), 1e-8);
    }
  }
  EXPECT_EQ(total, dp * dp);
  EXPECT_LE(max_abs_entry(sum - ComplexMatrix::Identity(dim, dim)), 1e-8);

  const SymmetricEmbedding e = symmetric_embedding(d, n);
  Rng rng(100 * d + n);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix eu = embed_unitary_power(haar_random_unitary(d, rng), e);
    const ComplexMatrix g = tensor(eu, eu);
    for (int l = 0; l <= n; ++l) {
      const ComplexMatrix& s = dec.projector(l);
      EXPECT_LE(max_abs_entry(g * s - s * g), 1e-7);
    }
  }
}

TEST_P(IsotypicSuite, CrossCasimirActsAsScalarOnBlocks) {
  const auto [d, n] = GetParam();
  const IsotypicDecomposition dec = isotypic_projectors(d, n);
  const ComplexMatrix x = cross_casimir(symmetric_embedding(d, n));
  for (int l = 0; l <= n; ++l) {
    const ComplexMatrix& s = dec.projector(l);
    EXPECT_LE(max_abs_entry(x * s - cross_casimir_eigenvalue(d, n, l) * s), 1e-8);
  }
}

TEST_P(IsotypicSuite, TotallySymmetricBlockIsSymmetricSubspaceOfTwoN) {
  // S_0 is the part of H_+^n (x) H_+^n that is symmetric in all 2n factors.
  const auto [d, n] = GetParam();
  const IsotypicDecomposition dec = isotypic_projectors(d, n);
  EXPECT_EQ(dec.block_dim(0), choose(2 * n + d - 1, d - 1));
  const SymmetricEmbedding e = symmetric_embedding(d, n);
  const SymmetricEmbedding e2 = symmetric_embedding(d, 2 * n);
  const ComplexMatrix v = tensor(e.basis, e.basis);
  const ComplexMatrix sym_2n = v.adjoint() * e2.basis * e2.basis.adjoint() * v;
  EXPECT_LE(max_abs_entry(sym_2n - dec.projector(0)), 1e-8);
}

TEST_P(IsotypicSuite, JsonRoundTrip) {
  const auto [d, n] = GetParam();
  const IsotypicDecomposition dec = isotypic_projectors(d, n);
  const nlohmann::json j = decomposition_to_json(dec);
  const IsotypicDecomposition back =
      decomposition_from_json(nlohmann::json::parse(j.dump()));
  ASSERT_EQ(back.d(), d);
  ASSERT_EQ(back.n(), n);
  for (int l = 0; l <= n; ++l) EXPECT_EQ(back.projector(l), dec.projector(l));
}

INSTANTIATE_TEST_SUITE_P(DeskScale, IsotypicSuite,
                         ::testing::Values(std::pair{2, 1}, std::pair{2, 2},
                                           std::pair{2, 3}, std::pair{2, 4},
                                           std::pair{3, 1}, std::pair{3, 2},
                                           std::pair{3, 3}));

TEST(Isotypic, QubitSingleCopyMatchesSymAntisym) {
  const IsotypicDecomposition dec = isotypic_projectors(2, 1);
  EXPECT_EQ(dec.block_dim(0), 3);
  EXPECT_EQ(dec.block_dim(1), 1);
  const SymAntisymProjectors p = sym_antisym_projectors(2);
  EXPECT_LE(max_abs_entry(dec.projector(0) - p.symmetric.matrix()), 1e-8);
  EXPECT_LE(max_abs_entry(dec.projector(1) - p.antisymmetric.matrix()), 1e-8);
}

TEST(Isotypic, SingleCopyMatchesSymAntisymForQutrits) {
  const IsotypicDecomposition dec = isotypic_projectors(3, 1);
  const SymAntisymProjectors p = sym_antisym_projectors(3);
  EXPECT_LE(max_abs_entry(dec.projector(0) - p.symmetric.matrix()), 1e-8);
  EXPECT_LE(max_abs_entry(dec.projector(1) - p.antisymmetric.matrix()), 1e-8);
}

TEST(Isotypic, QubitBlockDimensions) {
  const IsotypicDecomposition dec = isotypic_projectors(2, 2);
  EXPECT_EQ(dec.block_dim(0), 5);
  EXPECT_EQ(dec.block_dim(1), 3);
  EXPECT_EQ(dec.block_dim(2), 1);
  // Spin n - l has dimension 2(n - l) + 1.
  const IsotypicDecomposition dec4 = isotypic_projectors(2, 4);
  for (int l = 0; l <= 4; ++l) EXPECT_EQ(dec4.block_dim(l), 2 * (4 - l) + 1);
}

TEST(Isotypic, QutritTwoCopyDimensions) {
  const IsotypicDecomposition dec = isotypic_projectors(3, 2);
  EXPECT_EQ(dec.block_dim(0), 15);
  EXPECT_EQ(dec.block_dim(1), 15);
  EXPECT_EQ(dec.block_dim(2), 6);
}

TEST(Isotypic, RejectsUnsupportedArguments) {
  EXPECT_THROW(isotypic_projectors(1, 2), Error);
  EXPECT_THROW(isotypic_projectors(2, 0), Error);
  EXPECT_THROW((void)isotypic_projectors(2, 2).projector(3), Error);
}

TEST(Isotypic, QubitBlocksAgreeWithTotalSpinProjectors) {
  // Independent route: on 2n qubits, restrict the total-spin projectors to
  // H_+^n (x) H_+^n.
  for (int n = 1; n <= 3; ++n) {
    const IsotypicDecomposition dec = isotypic_projectors(2, n);
    const SymmetricEmbedding e = symmetric_embedding(2, n);
    const ComplexMatrix v = tensor(e.basis, e.basis);
    for (int l = 0; l <= n; ++l) {
      const ComplexMatrix spin = oracle::total_spin_projector(2 * n, n - l);
      EXPECT_LE(max_abs_entry(v.adjoint() * spin * v - dec.projector(l)), 1e-8)
          << "n=" << n << " l=" << l;
    }
  }
}

// ---------------------------------------------------------------------------
// twirl and beta

TEST(Twirl, FixedPoints) {
  for (auto [d, n] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
    const IsotypicDecomposition dec = isotypic_projectors(d, n);
    const int dim = dec.space_dim();
    const DensityOperator mixed(ComplexMatrix::Identity(dim, dim) / double(dim));
    EXPECT_LE(max_abs_entry(twirl(mixed, dec).matrix() - mixed.matrix()), 1e-10);
    for (int l = 0; l <= n; ++l) {
      const DensityOperator block(dec.projector(l) / double(dec.block_dim(l)));
      EXPECT_LE(max_abs_entry(twirl(block, dec).matrix() - block.matrix()), 1e-10);
    }
  }
}

TEST(Twirl, TracePositivityIdempotence) {
  Rng rng(55);
  for (auto [d, n] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const IsotypicDecomposition dec = isotypic_projectors(d, n);
    for (int trial = 0; trial < 10; ++trial) {
      const DensityOperator rho(oracle::random_density(dec.space_dim(), rng, 1 + trial % 3));
      const DensityOperator once = twirl(rho, dec);
      const DensityOperator twice = twirl(once, dec);
      EXPECT_NEAR(once.matrix().trace().real(), 1.0, 1e-10);
      EXPECT_GE(hermitian_eigen(once.matrix()).values(0), -1e-10);
      EXPECT_LE(max_abs_entry(twice.matrix() - once.matrix()), 1e-10);
    }
  }
}

TEST(Twirl, MatchesMonteCarloHaarAverage) {
  Rng rng(91);
  const IsotypicDecomposition dec = isotypic_projectors(2, 1);
  const SymmetricEmbedding e = symmetric_embedding(2, 1);
  for (int trial = 0; trial < 3; ++trial) {
    const ComplexMatrix rho = oracle::random_density(4, rng);
    const ComplexMatrix mc = oracle::monte_carlo_twirl(rho, e, 10000, 500 + trial);
    EXPECT_LE(max_abs_entry(mc - twirl(rho, dec)), 2e-2);
  }
}

TEST(Twirl, DimensionMismatch) {
  const IsotypicDecomposition dec = isotypic_projectors(2, 2);
  EXPECT_THROW(twirl(ComplexMatrix(ComplexMatrix::Identity(4, 4)), dec), Error);
}

TEST(Beta, SingleCopyExamples) {
  const IsotypicDecomposition dec = isotypic_projectors(2, 1);
  const SymmetricEmbedding e = symmetric_embedding(2, 1);
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const PureState pi = haar_random_state(2, rng);
    const PureState tau = haar_random_state(2, rng);
    const double f = std::norm(pi.amplitudes().dot(tau.amplitudes()));
    const std::vector<double> beta = beta_coefficients(embed_pair_power(pi, tau, e), dec);
    EXPECT_NEAR(beta[0], (1.0 + f) / 2.0, 1e-10);
    EXPECT_NEAR(beta[1], (1.0 - f) / 2.0, 1e-10);
    const std::vector<double> same = beta_coefficients(embed_pair_power(pi, pi, e), dec);
    EXPECT_NEAR(same[1], 0.0, 1e-12);
  }
}

TEST(Beta, OrthogonalQubitPairTwoCopies) {
  // Independent 4-qubit total-spin computation at gamma = pi/2, plus the
  // Clebsch-Gordan values (1/6, 1/2, 1/3) for |00>|11> in spin 2, 1, 0.
  const IsotypicDecomposition dec = isotypic_projectors(2, 2);
  const SymmetricEmbedding e = symmetric_embedding(2, 2);
  const PureState zero = PureState::basis(2, 0);
  const PureState one = PureState::basis(2, 1);
  const std::vector<double> beta = beta_coefficients(embed_pair_power(zero, one, e), dec);
  const std::vector<double> oracle_beta =
      oracle::qubit_beta(zero.amplitudes(), one.amplitudes(), 2);
  double sum = 0.0;
  for (int l = 0; l <= 2; ++l) {
    EXPECT_NEAR(beta[l], oracle_beta[l], 1e-10);
    sum += beta[l];
  }
  EXPECT_NEAR(sum, 1.0, 1e-10);
  EXPECT_NEAR(beta[0], 1.0 / 6.0, 1e-10);
  EXPECT_NEAR(beta[1], 1.0 / 2.0, 1e-10);
  EXPECT_NEAR(beta[2], 1.0 / 3.0, 1e-10);
}

TEST(Beta, RandomQubitPairsMatchSpinOracle) {
  Rng rng(3);
  for (int n = 1; n <= 3; ++n) {
    const IsotypicDecomposition dec = isotypic_projectors(2, n);
    const SymmetricEmbedding e = symmetric_embedding(2, n);
    for (int trial = 0; trial < 5; ++trial) {
      const PureState pi = haar_random_state(2, rng);
      const PureState tau = haar_random_state(2, rng);
      const std::vector<double> beta = beta_coefficients(embed_pair_power(pi, tau, e), dec);
      const std::vector<double> ref = oracle::qubit_beta(pi.amplitudes(), tau.amplitudes(), n);
      for (int l = 0; l <= n; ++l) EXPECT_NEAR(beta[l], ref[l], 1e-9);
    }
  }
}

TEST(Beta, DependsOnlyOnOverlap) {
  Rng rng(21);
  for (auto [d, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const IsotypicDecomposition dec = isotypic_projectors(d, n);
    const SymmetricEmbedding e = symmetric_embedding(d, n);
    for (int trial = 0; trial < 10; ++trial) {
      const PureState pi = haar_random_state(d, rng);
      const PureState tau = haar_random_state(d, rng);
      // Rotate the pair by a random unitary: same overlap, different states.
      const ComplexMatrix u = haar_random_unitary(d, rng);
      const PureState upi = PureState::normalized(u * pi.amplitudes());
      const PureState utau = PureState::normalized(u * tau.amplitudes());
      const std::vector<double> a = beta_coefficients(embed_pair_power(pi, tau, e), dec);
      const std::vector<double> b = beta_coefficients(embed_pair_power(upi, utau, e), dec);
      for (int l = 0; l <= n; ++l) EXPECT_NEAR(a[l], b[l], 1e-9);
    }
  }
}

TEST(Beta, DensityOverloadAgreesAndSumsToOne) {
  Rng rng(5);
  const IsotypicDecomposition dec = isotypic_projectors(3, 2);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityOperator rho(oracle::random_density(dec.space_dim(), rng));
    const std::vector<double> beta = beta_coefficients(rho, dec);
    double sum = 0.0;
    for (double b : beta) {
      EXPECT_GE(b, -1e-10);
      sum += b;
    }
    EXPECT_NEAR(sum, 1.0, 1e-10);
  }
}

}  // namespace
}  // namespace fidelity
