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

#include "fidelity/nogo.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "fidelity/matrix_io.hpp"
#include "fidelity/symmetry.hpp"

namespace fidelity {
namespace {

constexpr double kFormAgreement = 1e-10;

int factor_dimension(int total) {
  const int d = static_cast<int>(std::lround(std::sqrt(double(total))));
  if (d * d != total) {
    throw Error(ErrorKind::kDimensionMismatch,
                "operator dimension is not a square d^2");
  }
  return d;
}

void check_pair_dims(const DensityOperator& rho, const DensityOperator& pi,
                     const DensityOperator& tau) {
  if (pi.dim() != tau.dim() || rho.dim() != pi.dim() * tau.dim()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "vote_probability: rho must act on the product of pi and tau spaces");
  }
}

Rng trial_rng(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), 0x9e3779b9u};
  return Rng(seq);
}

PureState orthogonal_to(const PureState& s, Rng& rng) {
  for (;;) {
    ComplexVector v = haar_random_state(s.dim(), rng).amplitudes();
    v -= s.amplitudes() * s.amplitudes().dot(v);
    if (v.norm() > 1e-6) return PureState::normalized(v);
  }
}

double equal_pair_value(const ComplexMatrix& t, const ComplexVector& phi) {
  return expectation(t, tensor(phi, phi));
}

}  // namespace

void DecisionRule::validate() const {
  for (double p : {p11, p10, p01, p00}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "decision rule entries must lie in [0, 1]");
    }
  }
}

double vote_probability_grouped(const DensityOperator& rho,
                                const DensityOperator& pi,
                                const DensityOperator& tau,
                                const DecisionRule& rule) {
  check_pair_dims(rho, pi, tau);
  rule.validate();
  const std::array<int, 2> dims = {pi.dim(), tau.dim()};
  const ComplexMatrix rho1 = partial_trace(rho.matrix(), dims, 0);
  const ComplexMatrix rho2 = partial_trace(rho.matrix(), dims, 1);
  const double bilinear = trace_product(rho.matrix(), tensor(pi.matrix(), tau.matrix()));
  return (rule.p11 - rule.p10 - rule.p01 + rule.p00) * bilinear +
         (rule.p10 - rule.p00) * trace_product(rho1, pi.matrix()) +
         (rule.p01 - rule.p00) * trace_product(rho2, tau.matrix()) + rule.p00;
}

double vote_probability(const DensityOperator& rho, const DensityOperator& pi,
                        const DensityOperator& tau, const DecisionRule& rule) {
  check_pair_dims(rho, pi, tau);
  rule.validate();
  const ComplexMatrix id = ComplexMatrix::Identity(pi.dim(), pi.dim());
  const ComplexMatrix not_pi = id - pi.matrix();
  const ComplexMatrix not_tau = id - tau.matrix();
  const ComplexMatrix& r = rho.matrix();
  const double expanded =
      rule.p11 * trace_product(r, tensor(pi.matrix(), tau.matrix())) +
      rule.p10 * trace_product(r, tensor(pi.matrix(), not_tau)) +
      rule.p01 * trace_product(r, tensor(not_pi, tau.matrix())) +
      rule.p00 * trace_product(r, tensor(not_pi, not_tau));
  const double grouped = vote_probability_grouped(rho, pi, tau, rule);
  if (std::abs(expanded - grouped) > kFormAgreement) {
    std::ostringstream os;
    os.precision(17);
    os << "vote_probability: expanded form " << expanded
       << " disagrees with grouped form " << grouped;
    throw Error(ErrorKind::kNumericalFailure, os.str());
  }
  return expanded;
}

ForcingResult forcing_check(const DecisionRule& rule, int trials,
                            std::uint64_t seed, int d, double threshold) {
  rule.validate();
  if (trials < 1) throw Error(ErrorKind::kInvalidArgument, "trials must be >= 1");
  if (d < 2) throw Error(ErrorKind::kInvalidArgument, "forcing_check needs d >= 2");

  ForcingResult result;
  result.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed, trial);
    PureState sigma1 = haar_random_state(d, rng);
    PureState sigma2 = haar_random_state(d, rng);
    PureState pi = haar_random_state(d, rng);
    PureState tau = pi;
    switch (trial % 3) {
      case 0: break;
      case 1: tau = orthogonal_to(pi, rng); break;
      default: tau = haar_random_state(d, rng); break;
    }
    const DensityOperator rho(tensor(pure_state_projector(sigma1).matrix(),
                                     pure_state_projector(sigma2).matrix()));
    const DensityOperator pi_op = pure_state_projector(pi);
    const DensityOperator tau_op = pure_state_projector(tau);
    const double vote = vote_probability(rho, pi_op, tau_op, rule);
    const double fid = trace_fidelity(pi_op, tau_op);
    const double deviation = std::abs(vote - fid);
    if (deviation > result.best_deviation) {
      result.best_deviation = deviation;
      if (deviation > threshold) {
        result.counterexample = ForcingCounterexample{
            std::move(sigma1), std::move(sigma2), std::move(pi), std::move(tau),
            vote, fid, deviation, trial};
      }
    }
  }
  return result;
}

std::string_view to_string(ViolationKind kind) {
  return kind == ViolationKind::kEqualPairFails ? "equal_pair_fails"
                                                : "orthogonal_pair_fails";
}

std::pair<PureState, double> minimize_equal_pair(const TestOperator& t,
                                                 const NoGoOptions& opts) {
  const int d = factor_dimension(t.dim());
  const ComplexMatrix& op = t.matrix();
  Rng rng(opts.seed);

  ComplexVector best = haar_random_state(d, rng).amplitudes();
  double best_value = equal_pair_value(op, best);
  for (int s = 1; s < opts.samples; ++s) {
    ComplexVector phi = haar_random_state(d, rng).amplitudes();
    const double value = equal_pair_value(op, phi);
    if (value < best_value) {
      best_value = value;
      best = std::move(phi);
    }
  }

  // Projected descent on the unit sphere of C^d viewed as R^{2d}, with a
  // central-difference gradient. A step is only taken if it improves.
  const double h = 1e-6;
  double step = opts.step;
  for (int it = 0; it < opts.refine_steps; ++it) {
    ComplexVector grad(d);
    for (int k = 0; k < d; ++k) {
      double partial[2];
      for (int part = 0; part < 2; ++part) {
        const Complex dir = part == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
        ComplexVector plus = best;
        ComplexVector minus = best;
        plus(k) += h * dir;
        minus(k) -= h * dir;
        partial[part] = (equal_pair_value(op, plus.normalized()) -
                         equal_pair_value(op, minus.normalized())) / (2.0 * h);
      }
      grad(k) = Complex(partial[0], partial[1]);
    }
    grad -= best * best.dot(grad).real();
    if (grad.norm() < 1e-14) break;
    for (int tries = 0; tries < 30; ++tries) {
      const ComplexVector candidate = (best - step * grad).normalized();
      const double value = equal_pair_value(op, candidate);
      if (value < best_value) {
        best = candidate;
        best_value = value;
        break;
      }
      step *= 0.5;
    }
  }
  return {PureState::normalized(best), best_value};
}

ViolationCertificate nogo_check(const TestOperator& t,
                                       const NoGoOptions& opts) {
  const int d = factor_dimension(t.dim());
  if (d < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "nogo_check needs d >= 2 to form an orthogonal pair");
  }
  auto [phi, min_value] = minimize_equal_pair(t, opts);
  if (min_value < 1.0 - opts.threshold) {
    return {ViolationKind::kEqualPairFails, phi, phi, min_value, 1.0};
  }
  const PureState e0 = PureState::basis(d, 0);
  const PureState e1 = PureState::basis(d, 1);
  const double value = expectation(t.matrix(), tensor(e0.amplitudes(), e1.amplitudes()));
  if (!(value > 1e-9)) {
    throw Error(ErrorKind::kNumericalFailure,
                "test passes every sampled equal pair and rejects (e0, e1); "
                "equal-pair search did not converge");
  }
  return {ViolationKind::kOrthogonalPairFails, e0, e1, value, 0.0};
}

std::vector<ViolationCertificate> all_violations(const TestOperator& t,
                                                 const NoGoOptions& opts) {
  const int d = factor_dimension(t.dim());
  std::vector<ViolationCertificate> out;
  auto [phi, min_value] = minimize_equal_pair(t, opts);
  if (min_value < 1.0 - opts.threshold) {
    out.push_back({ViolationKind::kEqualPairFails, phi, phi, min_value, 1.0});
  }
  if (d >= 2) {
    const PureState e0 = PureState::basis(d, 0);
    const PureState e1 = PureState::basis(d, 1);
    const double value =
        expectation(t.matrix(), tensor(e0.amplitudes(), e1.amplitudes()));
    if (value > 1e-9) {
      out.push_back({ViolationKind::kOrthogonalPairFails, e0, e1, value, 0.0});
    }
  }
  return out;
}

double certificate_value(const ViolationCertificate& cert, const TestOperator& t) {
  return expectation(t.matrix(),
                     tensor(cert.pi.amplitudes(), cert.tau.amplitudes()));
}

bool verify_certificate(const ViolationCertificate& cert, const TestOperator& t,
                        double tolerance) {
  if (cert.pi.dim() * cert.tau.dim() != t.dim()) return false;
  const double value = certificate_value(cert, t);
  if (std::abs(value - cert.value) > tolerance) return false;
  if (cert.kind == ViolationKind::kEqualPairFails) {
    const double overlap = std::abs(cert.pi.amplitudes().dot(cert.tau.amplitudes()));
    return std::abs(overlap - 1.0) <= 1e-10 && value < 1.0 - 1e-9 &&
           cert.bound_violated == 1.0;
  }
  const double overlap = std::abs(cert.pi.amplitudes().dot(cert.tau.amplitudes()));
  return overlap <= 1e-10 && value > 1e-9 && cert.bound_violated == 0.0;
}

TestOperator random_test_operator(int dim, std::uint64_t seed) {
  Rng rng(seed);
  const ComplexMatrix u = haar_random_unitary(dim, rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RealVector lambda(dim);
  for (int i = 0; i < dim; ++i) lambda(i) = unit(rng);
  ComplexMatrix t = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
  t = 0.5 * (t + t.adjoint());
  return TestOperator(std::move(t));
}

TestOperator random_equal_pair_passing_test(int d, std::uint64_t seed) {
  const auto [sym, anti] = sym_antisym_projectors(d);
  const TestOperator inner = random_test_operator(d * d, seed);
  ComplexMatrix t = sym.matrix() + anti.matrix() * inner.matrix() * anti.matrix();
  t = 0.5 * (t + t.adjoint());
  return TestOperator(std::move(t));
}

nlohmann::json certificate_to_json(const ViolationCertificate& cert) {
  return {{"kind", to_string(cert.kind)},
          {"value", cert.value},
          {"bound_violated", cert.bound_violated},
          {"pi", io::state_to_json(cert.pi)},
          {"tau", io::state_to_json(cert.tau)}};
}

}  // namespace fidelity
