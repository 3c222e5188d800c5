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

// n copies of each state, m samples of the fidelity coin.
//
// Invariant strategies are F_k = sum_l alpha_{kl} S_l, where k counts the
// outcome-1 samples and S_l are the isotypic projectors on H_+^n (x) H_+^n.
// For a pair at angle gamma (Tr pi tau = cos^2 gamma) the strategy produces
//   f_k = sum_l alpha_{kl} beta_l(gamma)
// against the binomial target p_k = C(m,k) cos^{2k} gamma sin^{2(m-k)} gamma.
// The figure of merit is max_gamma sum_k |f_k - p_k| (an L1 distance).

#pragma once

#include <memory>
#include <vector>

#include <nlohmann/json.hpp>

#include "fidelity/symmetry.hpp"

namespace fidelity {

inline constexpr int kMaxSupportedD = 3;
inline constexpr int kMaxSupportedN = 4;
inline constexpr int kMaxSupportedM = 4;

/// Throws kUnsupportedRange outside d in [2, 3], n in [1, 4], m in [1, 4].
void check_supported_range(int d, int n, int m);

/// alpha_{kl}, (m+1) x (n+1), columns are probability vectors.
class CoefficientMatrix {
 public:
  explicit CoefficientMatrix(Eigen::MatrixXd alpha);

  int m() const { return static_cast<int>(alpha_.rows()) - 1; }
  int n() const { return static_cast<int>(alpha_.cols()) - 1; }
  double operator()(int k, int l) const { return alpha_(k, l); }
  const Eigen::MatrixXd& values() const { return alpha_; }

  /// alpha_{kl} = 1/(m+1).
  static CoefficientMatrix uniform(int m, int n);

 private:
  Eigen::MatrixXd alpha_;
};

/// Degree <= n polynomial in x = cos^2 gamma, monomial coefficients.
struct BetaPolynomial {
  std::vector<double> coeffs;
  double holdout_residual = 0.0;

  double operator()(double x) const;
};

/// `points` equally spaced angles in [0, pi/2], endpoints included.
std::vector<double> uniform_gamma_grid(int points);

class GeneralInstance {
 public:
  /// Fits and validates the beta polynomials on construction.
  GeneralInstance(int m, std::shared_ptr<const IsotypicDecomposition> dec,
                  std::vector<double> gamma_grid);

  int d() const { return dec_->d(); }
  int n() const { return dec_->n(); }
  int m() const { return m_; }
  const IsotypicDecomposition& decomposition() const { return *dec_; }
  const SymmetricEmbedding& embedding() const { return embedding_; }
  const std::vector<double>& gamma_grid() const { return gamma_grid_; }
  const std::vector<BetaPolynomial>& beta_polynomials() const { return beta_; }

  /// beta_l(gamma) from the fitted polynomials.
  std::vector<double> beta_fast(double gamma) const;

  /// Same instance with a different grid (reuses the decomposition and fit).
  GeneralInstance with_grid(std::vector<double> gamma_grid) const;

 private:
  int m_;
  std::shared_ptr<const IsotypicDecomposition> dec_;
  SymmetricEmbedding embedding_;
  std::vector<double> gamma_grid_;
  std::vector<BetaPolynomial> beta_;
};

/// Convenience: builds the decomposition and a uniform grid.
GeneralInstance make_instance(int d, int n, int m, int grid_points);

/// Canonical pair: pi = |e_0>, tau = cos(gamma)|e_0> + sin(gamma)|e_1>.
std::pair<PureState, PureState> canonical_pair(int d, double gamma);

/// beta_l(gamma) computed directly as <psi|S_l|psi> on the canonical pair.
std::vector<double> beta_at(const IsotypicDecomposition& dec,
                            const SymmetricEmbedding& e, double gamma);

/// Binomial(m, cos^2 gamma).
OutcomeDistribution target_distribution(int m, double gamma);

/// f_k = sum_l alpha_{kl} beta_l(gamma), beta from the isotypic projectors.
OutcomeDistribution achieved_distribution(const GeneralInstance& inst,
                                          const CoefficientMatrix& coeffs,
                                          double gamma);

/// sum_k |f_k - p_k| at one angle (fitted beta).
double l1_error(const GeneralInstance& inst, const CoefficientMatrix& coeffs,
                double gamma);

/// max over the instance grid of l1_error.
double objective(const GeneralInstance& inst, const CoefficientMatrix& coeffs);

/// Interpolates beta_l through n + 1 Chebyshev-spaced values of cos^2 gamma
/// and checks the fit at 10 held-out angles. Throws kNumericalFailure if the
/// held-out residual exceeds `tolerance`.
BetaPolynomial beta_polynomial_fit(const IsotypicDecomposition& dec,
                                   const SymmetricEmbedding& e, int l,
                                   double tolerance = 1e-8);
BetaPolynomial beta_polynomial_fit(const GeneralInstance& inst, int l);

struct MinimaxOptions {
  /// Stop refining once the continuous maximum exceeds the grid optimum by
  /// less than this.
  double refine_tolerance = 1e-4;
  int max_refine_rounds = 50;
  int max_cut_rounds = 1000;
};

struct ProfilePoint {
  double gamma;
  double error;
};

struct MinimaxResult {
  CoefficientMatrix coeffs;
  /// LP optimum t on the final (refined) grid.
  double value = 0.0;
  /// max over continuous gamma of the L1 error of `coeffs`.
  double continuous_value = 0.0;
  std::vector<double> final_grid;
  int refine_rounds = 0;
  int lp_solves = 0;
};

/// Minimizes the grid objective by linear programming over alpha and t,
/// then refines the grid at continuous maximizers (golden-section search
/// per interval) until continuous_value - value < refine_tolerance.
MinimaxResult solve_minimax(const GeneralInstance& inst,
                            const MinimaxOptions& opts = {});

/// Grid-only LP optimum (no refinement).
MinimaxResult solve_minimax_on_grid(const GeneralInstance& inst,
                                    const MinimaxOptions& opts = {});

/// Continuous maximum of l1_error and its location.
ProfilePoint continuous_maximum(const GeneralInstance& inst,
                                const CoefficientMatrix& coeffs,
                                const std::vector<double>& grid);

std::vector<ProfilePoint> error_profile(const GeneralInstance& inst,
                                        const CoefficientMatrix& coeffs,
                                        const std::vector<double>& gammas);

/// Distribution of the first sample: alpha'_{1l} = sum_k (k/m) alpha_{kl}.
CoefficientMatrix marginalize_first_sample(const CoefficientMatrix& coeffs);

/// alpha_{kl} = Tr(F_k S_l) / Tr S_l for operators F_k on H_+^n (x) H_+^n.
CoefficientMatrix invariant_coefficients(const std::vector<ComplexMatrix>& effects,
                                         const IsotypicDecomposition& dec);

/// The single-copy test A (on C^d (x) C^d) applied to the first copy of each
/// state, as an operator on H_+^n (x) H_+^n.
ComplexMatrix lift_single_copy_test(const ComplexMatrix& a,
                                    const SymmetricEmbedding& e);

nlohmann::json coefficients_to_json(const CoefficientMatrix& coeffs);

}  // namespace fidelity
