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

#include "fidelity/general.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "fidelity/simplex.hpp"

namespace fidelity {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kCutSlack = 1e-10;

double binomial(int m, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

std::vector<double> target_probabilities(int m, double gamma) {
  const double c2 = std::cos(gamma) * std::cos(gamma);
  const double s2 = std::sin(gamma) * std::sin(gamma);
  std::vector<double> p(m + 1);
  for (int k = 0; k <= m; ++k) {
    p[k] = binomial(m, k) * std::pow(c2, k) * std::pow(s2, m - k);
  }
  return p;
}

std::vector<double> achieved_fast(const GeneralInstance& inst,
                                  const CoefficientMatrix& coeffs, double gamma) {
  const std::vector<double> beta = inst.beta_fast(gamma);
  std::vector<double> f(coeffs.m() + 1, 0.0);
  for (int k = 0; k <= coeffs.m(); ++k) {
    for (int l = 0; l <= coeffs.n(); ++l) f[k] += coeffs(k, l) * beta[l];
  }
  return f;
}

void check_compatible(const GeneralInstance& inst, const CoefficientMatrix& c) {
  if (c.m() != inst.m() || c.n() != inst.n()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "coefficient matrix shape does not match the instance (m, n)");
  }
}

void validate_grid(const std::vector<double>& grid) {
  if (grid.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "gamma grid needs at least 2 points");
  }
  if (grid.front() != 0.0 || grid.back() != kHalfPi) {
    throw Error(ErrorKind::kInvalidArgument,
                "gamma grid must include the endpoints 0 and pi/2");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw Error(ErrorKind::kInvalidArgument, "gamma grid must be strictly increasing");
    }
  }
}

// One grid LP, solved by adding the sign-pattern cuts
//   sum_k s_k (f_k(g) - p_k(g)) <= t
// that the current solution violates. The cut family over all sign vectors
// is equivalent to t >= sum_k |f_k(g) - p_k(g)|.
struct GridSolve {
  CoefficientMatrix coeffs;
  double t;
  int lp_solves;
};

GridSolve solve_grid_lp(const GeneralInstance& inst, const std::vector<double>& grid,
                        const CoefficientMatrix& warm, const MinimaxOptions& opts) {
  const int m = inst.m();
  const int n = inst.n();
  const int nv = (m + 1) * (n + 1) + 1;
  const int t_index = nv - 1;

  std::vector<std::vector<double>> betas;
  std::vector<std::vector<double>> targets;
  betas.reserve(grid.size());
  targets.reserve(grid.size());
  for (double g : grid) {
    betas.push_back(inst.beta_fast(g));
    targets.push_back(target_probabilities(m, g));
  }

  lp::Problem problem;
  problem.num_vars = nv;
  problem.objective.assign(nv, 0.0);
  problem.objective[t_index] = 1.0;
  for (int l = 0; l <= n; ++l) {
    lp::Constraint c;
    c.coeffs.assign(nv, 0.0);
    for (int k = 0; k <= m; ++k) c.coeffs[k * (n + 1) + l] = 1.0;
    c.relation = lp::Relation::kEqual;
    c.rhs = 1.0;
    problem.constraints.push_back(std::move(c));
  }

  std::set<std::pair<std::size_t, unsigned>> cuts;
  auto add_cut = [&](std::size_t g, const std::vector<double>& f) {
    unsigned mask = 0;
    for (int k = 0; k <= m; ++k) {
      if (f[k] - targets[g][k] >= 0.0) mask |= 1u << k;
    }
    if (!cuts.emplace(g, mask).second) return false;
    lp::Constraint c;
    c.coeffs.assign(nv, 0.0);
    double rhs = 0.0;
    for (int k = 0; k <= m; ++k) {
      const double s = (mask >> k) & 1u ? 1.0 : -1.0;
      for (int l = 0; l <= n; ++l) c.coeffs[k * (n + 1) + l] = s * betas[g][l];
      rhs += s * targets[g][k];
    }
    c.coeffs[t_index] = -1.0;
    c.relation = lp::Relation::kLessEqual;
    c.rhs = rhs;
    problem.constraints.push_back(std::move(c));
    return true;
  };

  auto achieved = [&](const Eigen::MatrixXd& alpha, std::size_t g) {
    std::vector<double> f(m + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
      for (int l = 0; l <= n; ++l) f[k] += alpha(k, l) * betas[g][l];
    }
    return f;
  };

  for (std::size_t g = 0; g < grid.size(); ++g) add_cut(g, achieved(warm.values(), g));

  int solves = 0;
  for (int round = 0; round < opts.max_cut_rounds; ++round) {
    const lp::Solution sol = lp::solve(problem);
    ++solves;
    if (sol.status != lp::Status::kOptimal) {
      throw Error(ErrorKind::kNumericalFailure,
                  std::string("minimax LP ended with status ") +
                      std::string(lp::to_string(sol.status)));
    }
    Eigen::MatrixXd alpha(m + 1, n + 1);
    for (int k = 0; k <= m; ++k) {
      for (int l = 0; l <= n; ++l) alpha(k, l) = sol.x[k * (n + 1) + l];
    }
    // Renormalize columns against round-off before validating.
    for (int l = 0; l <= n; ++l) {
      alpha.col(l) = alpha.col(l).cwiseMax(0.0);
      alpha.col(l) /= alpha.col(l).sum();
    }
    const double t = sol.x[t_index];
    bool added = false;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const std::vector<double> f = achieved(alpha, g);
      double err = 0.0;
      for (int k = 0; k <= m; ++k) err += std::abs(f[k] - targets[g][k]);
      if (err > t + kCutSlack) added |= add_cut(g, f);
    }
    if (!added) return {CoefficientMatrix(std::move(alpha)), t, solves};
  }
  throw Error(ErrorKind::kNumericalFailure, "minimax cutting planes did not converge");
}

// Golden-section maximization of a function on [a, b].
template <typename F>
ProfilePoint golden_max(F&& f, double a, double b) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - ratio * (b - a);
  double x2 = a + ratio * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 80 && b - a > 1e-13; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + ratio * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - ratio * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? ProfilePoint{x1, f1} : ProfilePoint{x2, f2};
}

std::vector<ProfilePoint> interval_maxima(const GeneralInstance& inst,
                                          const CoefficientMatrix& coeffs,
                                          const std::vector<double>& grid) {
  auto err = [&](double g) { return l1_error(inst, coeffs, g); };
  std::vector<ProfilePoint> maxima;
  maxima.reserve(grid.size());
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    maxima.push_back(golden_max(err, grid[i], grid[i + 1]));
  }
  return maxima;
}

}  // namespace

void check_supported_range(int d, int n, int m) {
  if (d < 2 || d > kMaxSupportedD || n < 1 || n > kMaxSupportedN || m < 1 ||
      m > kMaxSupportedM) {
    std::ostringstream os;
    os << "(d, n, m) = (" << d << ", " << n << ", " << m
       << ") is outside the supported range d in [2, " << kMaxSupportedD
       << "], n in [1, " << kMaxSupportedN << "], m in [1, " << kMaxSupportedM << "]";
    throw Error(ErrorKind::kUnsupportedRange, os.str());
  }
}

CoefficientMatrix::CoefficientMatrix(Eigen::MatrixXd alpha) : alpha_(std::move(alpha)) {
  if (alpha_.rows() < 2 || alpha_.cols() < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "coefficient matrix needs m >= 1 and n >= 0");
  }
  for (Eigen::Index l = 0; l < alpha_.cols(); ++l) {
    for (Eigen::Index k = 0; k < alpha_.rows(); ++k) {
      const double a = alpha_(k, l);
      if (!std::isfinite(a) || a < 0.0 || a > 1.0 + 1e-12) {
        throw Error(ErrorKind::kInvalidArgument,
                    "coefficient matrix entries must lie in [0, 1]");
      }
    }
    if (std::abs(alpha_.col(l).sum() - 1.0) > 1e-10) {
      throw Error(ErrorKind::kInvalidArgument,
                  "coefficient matrix columns must sum to 1");
    }
  }
}

CoefficientMatrix CoefficientMatrix::uniform(int m, int n) {
  return CoefficientMatrix(Eigen::MatrixXd::Constant(m + 1, n + 1, 1.0 / (m + 1)));
}

double BetaPolynomial::operator()(double x) const {
  double r = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

std::vector<double> uniform_gamma_grid(int points) {
  if (points < 2) throw Error(ErrorKind::kInvalidArgument, "grid needs >= 2 points");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = kHalfPi * i / (points - 1);
  grid.back() = kHalfPi;
  return grid;
}

std::pair<PureState, PureState> canonical_pair(int d, double gamma) {
  if (d < 2) throw Error(ErrorKind::kInvalidArgument, "canonical pair needs d >= 2");
  ComplexVector tau = ComplexVector::Zero(d);
  tau(0) = std::cos(gamma);
  tau(1) = std::sin(gamma);
  return {PureState::basis(d, 0), PureState::normalized(tau)};
}

std::vector<double> beta_at(const IsotypicDecomposition& dec,
                            const SymmetricEmbedding& e, double gamma) {
  const auto [pi, tau] = canonical_pair(dec.d(), gamma);
  return beta_coefficients(embed_pair_power(pi, tau, e), dec);
}

BetaPolynomial beta_polynomial_fit(const IsotypicDecomposition& dec,
                                   const SymmetricEmbedding& e, int l,
                                   double tolerance) {
  const int n = dec.n();
  if (l < 0 || l > n) throw Error(ErrorKind::kInvalidArgument, "block index out of range");
  // Chebyshev nodes in x = cos^2 gamma keep the Vandermonde system tame.
  Eigen::MatrixXd vandermonde(n + 1, n + 1);
  Eigen::VectorXd values(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double x = 0.5 * (1.0 - std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * (n + 1))));
    const double gamma = std::acos(std::sqrt(x));
    for (int p = 0; p <= n; ++p) vandermonde(j, p) = std::pow(x, p);
    values(j) = beta_at(dec, e, gamma)[l];
  }
  const Eigen::VectorXd c = vandermonde.colPivHouseholderQr().solve(values);
  BetaPolynomial poly;
  poly.coeffs.assign(c.data(), c.data() + c.size());
  for (int k = 0; k < 10; ++k) {
    const double gamma = (k + 0.5) * kHalfPi / 10.0;
    const double x = std::cos(gamma) * std::cos(gamma);
    poly.holdout_residual =
        std::max(poly.holdout_residual, std::abs(poly(x) - beta_at(dec, e, gamma)[l]));
  }
  if (poly.holdout_residual > tolerance) {
    std::ostringstream os;
    os << "beta_" << l << " is not reproduced by a degree-" << n
       << " polynomial in cos^2(gamma): held-out residual " << poly.holdout_residual;
    throw Error(ErrorKind::kNumericalFailure, os.str());
  }
  return poly;
}

BetaPolynomial beta_polynomial_fit(const GeneralInstance& inst, int l) {
  return beta_polynomial_fit(inst.decomposition(), inst.embedding(), l);
}

GeneralInstance::GeneralInstance(int m, std::shared_ptr<const IsotypicDecomposition> dec,
                                 std::vector<double> gamma_grid)
    : m_(m), dec_(std::move(dec)), gamma_grid_(std::move(gamma_grid)) {
  if (!dec_) throw Error(ErrorKind::kInvalidArgument, "missing decomposition");
  if (m_ < 1) throw Error(ErrorKind::kInvalidArgument, "m must be >= 1");
  validate_grid(gamma_grid_);
  embedding_ = symmetric_embedding(dec_->d(), dec_->n());
  for (int l = 0; l <= dec_->n(); ++l) {
    beta_.push_back(beta_polynomial_fit(*dec_, embedding_, l));
  }
}

std::vector<double> GeneralInstance::beta_fast(double gamma) const {
  const double x = std::cos(gamma) * std::cos(gamma);
  std::vector<double> beta(beta_.size());
  for (std::size_t l = 0; l < beta_.size(); ++l) beta[l] = beta_[l](x);
  return beta;
}

GeneralInstance GeneralInstance::with_grid(std::vector<double> gamma_grid) const {
  validate_grid(gamma_grid);
  GeneralInstance copy = *this;
  copy.gamma_grid_ = std::move(gamma_grid);
  return copy;
}

GeneralInstance make_instance(int d, int n, int m, int grid_points) {
  return GeneralInstance(m, std::make_shared<const IsotypicDecomposition>(isotypic_projectors(d, n)),
                         uniform_gamma_grid(grid_points));
}

OutcomeDistribution target_distribution(int m, double gamma) {
  if (m < 1) throw Error(ErrorKind::kInvalidArgument, "m must be >= 1");
  if (!(gamma >= 0.0 && gamma <= kHalfPi + 1e-15)) {
    throw Error(ErrorKind::kInvalidArgument, "gamma must lie in [0, pi/2]");
  }
  return OutcomeDistribution(target_probabilities(m, gamma));
}

OutcomeDistribution achieved_distribution(const GeneralInstance& inst,
                                          const CoefficientMatrix& coeffs,
                                          double gamma) {
  check_compatible(inst, coeffs);
  const std::vector<double> beta = beta_at(inst.decomposition(), inst.embedding(), gamma);
  std::vector<double> f(coeffs.m() + 1, 0.0);
  for (int k = 0; k <= coeffs.m(); ++k) {
    for (int l = 0; l <= coeffs.n(); ++l) f[k] += coeffs(k, l) * beta[l];
  }
  return OutcomeDistribution(std::move(f));
}

double l1_error(const GeneralInstance& inst, const CoefficientMatrix& coeffs,
                double gamma) {
  check_compatible(inst, coeffs);
  const std::vector<double> f = achieved_fast(inst, coeffs, gamma);
  const std::vector<double> p = target_probabilities(inst.m(), gamma);
  double err = 0.0;
  for (int k = 0; k <= inst.m(); ++k) err += std::abs(f[k] - p[k]);
  return err;
}

double objective(const GeneralInstance& inst, const CoefficientMatrix& coeffs) {
  double worst = 0.0;
  for (double g : inst.gamma_grid()) worst = std::max(worst, l1_error(inst, coeffs, g));
  return worst;
}

ProfilePoint continuous_maximum(const GeneralInstance& inst,
                                const CoefficientMatrix& coeffs,
                                const std::vector<double>& grid) {
  ProfilePoint best{grid.front(), l1_error(inst, coeffs, grid.front())};
  for (double g : grid) {
    const double e = l1_error(inst, coeffs, g);
    if (e > best.error) best = {g, e};
  }
  for (const ProfilePoint& p : interval_maxima(inst, coeffs, grid)) {
    if (p.error > best.error) best = p;
  }
  return best;
}

MinimaxResult solve_minimax_on_grid(const GeneralInstance& inst,
                                    const MinimaxOptions& opts) {
  const CoefficientMatrix start = CoefficientMatrix::uniform(inst.m(), inst.n());
  GridSolve gs = solve_grid_lp(inst, inst.gamma_grid(), start, opts);
  MinimaxResult result{gs.coeffs, gs.t, 0.0, inst.gamma_grid(), 0, gs.lp_solves};
  result.continuous_value = continuous_maximum(inst, result.coeffs, result.final_grid).error;
  return result;
}

MinimaxResult solve_minimax(const GeneralInstance& inst, const MinimaxOptions& opts) {
  std::vector<double> grid = inst.gamma_grid();
  CoefficientMatrix warm = CoefficientMatrix::uniform(inst.m(), inst.n());
  int solves = 0;
  for (int round = 0; round <= opts.max_refine_rounds; ++round) {
    GridSolve gs = solve_grid_lp(inst, grid, warm, opts);
    solves += gs.lp_solves;
    const std::vector<ProfilePoint> maxima = interval_maxima(inst, gs.coeffs, grid);
    double continuous = gs.t;
    for (double g : grid) continuous = std::max(continuous, l1_error(inst, gs.coeffs, g));
    for (const ProfilePoint& p : maxima) continuous = std::max(continuous, p.error);
    if (continuous - gs.t < opts.refine_tolerance) {
      return {gs.coeffs, gs.t, continuous, std::move(grid), round, solves};
    }
    for (const ProfilePoint& p : maxima) {
      if (p.error > gs.t + opts.refine_tolerance) grid.push_back(p.gamma);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double a, double b) { return b - a < 1e-12; }),
               grid.end());
    warm = gs.coeffs;
  }
  throw Error(ErrorKind::kNumericalFailure, "minimax grid refinement did not converge");
}

std::vector<ProfilePoint> error_profile(const GeneralInstance& inst,
                                        const CoefficientMatrix& coeffs,
                                        const std::vector<double>& gammas) {
  std::vector<ProfilePoint> out;
  out.reserve(gammas.size());
  for (double g : gammas) out.push_back({g, l1_error(inst, coeffs, g)});
  return out;
}

CoefficientMatrix marginalize_first_sample(const CoefficientMatrix& coeffs) {
  const int m = coeffs.m();
  Eigen::MatrixXd out(2, coeffs.n() + 1);
  for (int l = 0; l <= coeffs.n(); ++l) {
    double one = 0.0;
    for (int k = 0; k <= m; ++k) one += double(k) / m * coeffs(k, l);
    one = std::clamp(one, 0.0, 1.0);
    out(1, l) = one;
    out(0, l) = 1.0 - one;
  }
  return CoefficientMatrix(std::move(out));
}

CoefficientMatrix invariant_coefficients(const std::vector<ComplexMatrix>& effects,
                                         const IsotypicDecomposition& dec) {
  if (effects.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "need at least two effects (m >= 1)");
  }
  Eigen::MatrixXd alpha(effects.size(), dec.n() + 1);
  for (std::size_t k = 0; k < effects.size(); ++k) {
    if (effects[k].rows() != dec.space_dim() || effects[k].cols() != dec.space_dim()) {
      throw Error(ErrorKind::kDimensionMismatch, "effect does not act on H_+^n (x) H_+^n");
    }
    for (int l = 0; l <= dec.n(); ++l) {
      alpha(k, l) = trace_product(effects[k], dec.projector(l)) / double(dec.block_dim(l));
    }
  }
  for (int l = 0; l <= dec.n(); ++l) {
    alpha.col(l) = alpha.col(l).cwiseMax(0.0);
    alpha.col(l) /= alpha.col(l).sum();
  }
  return CoefficientMatrix(std::move(alpha));
}

ComplexMatrix lift_single_copy_test(const ComplexMatrix& a, const SymmetricEmbedding& e) {
  const int d = e.d;
  const int n = e.n;
  if (a.rows() != d * d || a.cols() != d * d) {
    throw Error(ErrorKind::kDimensionMismatch,
                "lift_single_copy_test: test must act on C^d (x) C^d");
  }
  const ComplexMatrix w = tensor(e.basis, e.basis);
  const long full = w.rows();
  // Factor 0 is the first pi copy, factor n the first tau copy.
  long stride_pi = 1;
  for (int i = 0; i < 2 * n - 1; ++i) stride_pi *= d;
  long stride_tau = 1;
  for (int i = 0; i < n - 1; ++i) stride_tau *= d;

  ComplexMatrix applied = ComplexMatrix::Zero(full, w.cols());
  for (long idx = 0; idx < full; ++idx) {
    const int x = static_cast<int>((idx / stride_pi) % d);
    const int y = static_cast<int>((idx / stride_tau) % d);
    const long base = idx - x * stride_pi - y * stride_tau;
    for (int xp = 0; xp < d; ++xp) {
      for (int yp = 0; yp < d; ++yp) {
        const Complex coeff = a(xp * d + yp, x * d + y);
        if (coeff == Complex(0.0)) continue;
        applied.row(base + xp * stride_pi + yp * stride_tau) += coeff * w.row(idx);
      }
    }
  }
  return w.adjoint() * applied;
}

nlohmann::json coefficients_to_json(const CoefficientMatrix& coeffs) {
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 0; k <= coeffs.m(); ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (int l = 0; l <= coeffs.n(); ++l) row.push_back(coeffs(k, l));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fidelity
