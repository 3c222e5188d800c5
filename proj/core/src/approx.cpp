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

#include "fidelity/approx.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "fidelity/symmetry.hpp"

namespace fidelity {
namespace {

template <typename Objective>
OptimalInvariantTest compass_search(Objective&& f, double sigma, double alpha,
                                    double step, bool diagonal_only) {
  double best = f(sigma, alpha);
  while (step > 1e-13) {
    bool moved = false;
    const std::array<std::array<double, 2>, 4> dirs = {
        {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}};
    for (const auto& dir : dirs) {
      if (diagonal_only && dir[1] != 0.0) continue;
      const double s = std::clamp(sigma + step * dir[0], 0.0, 1.0);
      const double a = diagonal_only ? s : std::clamp(alpha + step * dir[1], 0.0, 1.0);
      const double value = f(s, a);
      if (value < best) {
        best = value;
        sigma = s;
        alpha = a;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return {sigma, alpha, best};
}

}  // namespace

InvariantTest::InvariantTest(double sigma, double alpha, int d)
    : sigma_(sigma), alpha_(alpha), d_(d) {
  if (!(sigma >= 0.0 && sigma <= 1.0 && alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "invariant test coefficients must lie in [0, 1]");
  }
  if (d < 1) throw Error(ErrorKind::kInvalidArgument, "d must be >= 1");
}

TestOperator InvariantTest::operator_form() const {
  const auto [sym, anti] = sym_antisym_projectors(d_);
  return TestOperator(sigma_ * sym.matrix() + alpha_ * anti.matrix());
}

double InvariantTest::acceptance(double fidelity) const {
  return alpha_ + (sigma_ - alpha_) * (1.0 + fidelity) / 2.0;
}

double delta_closed_form(const InvariantTest& t) {
  return std::max((t.sigma() + t.alpha()) / 2.0, 1.0 - t.sigma());
}

double delta_numeric(const InvariantTest& t, const DeltaNumericOptions& opts) {
  if (opts.grid_points < 2) {
    throw Error(ErrorKind::kInvalidArgument, "grid_points must be >= 2");
  }
  double worst = 0.0;
  for (int g = 0; g < opts.grid_points; ++g) {
    const double x = g == opts.grid_points - 1 ? 1.0 : double(g) / (opts.grid_points - 1);
    worst = std::max(worst, std::abs(t.acceptance(x) - x));
  }
  if (opts.haar_pairs > 0) {
    const ComplexMatrix a = t.operator_form().matrix();
    Rng rng(opts.seed);
    for (int k = 0; k < opts.haar_pairs; ++k) {
      const PureState pi = haar_random_state(t.d(), rng);
      const PureState tau = haar_random_state(t.d(), rng);
      const double accept = expectation(a, tensor(pi.amplitudes(), tau.amplitudes()));
      const double fid = std::norm(pi.amplitudes().dot(tau.amplitudes()));
      worst = std::max(worst, std::abs(accept - fid));
    }
  }
  return worst;
}

OptimalInvariantTest optimize_invariant_test(int grid) {
  if (grid < 2) throw Error(ErrorKind::kInvalidArgument, "grid must be >= 2");
  const auto f = [](double s, double a) {
    return delta_closed_form(InvariantTest(s, a));
  };
  double best = std::numeric_limits<double>::infinity();
  double best_s = 0.0;
  double best_a = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double s = double(i) / (grid - 1);
      const double a = double(j) / (grid - 1);
      const double value = f(s, a);
      if (value < best) {
        best = value;
        best_s = s;
        best_a = a;
      }
    }
  }
  return compass_search(f, best_s, best_a, 1.0 / (grid - 1), false);
}

OptimalInvariantTest optimize_identity_multiple(int grid) {
  if (grid < 2) throw Error(ErrorKind::kInvalidArgument, "grid must be >= 2");
  const auto f = [](double s, double a) {
    return delta_closed_form(InvariantTest(s, a));
  };
  double best = std::numeric_limits<double>::infinity();
  double best_c = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double c = double(i) / (grid - 1);
    if (f(c, c) < best) {
      best = f(c, c);
      best_c = c;
    }
  }
  return compass_search(f, best_c, best_c, 1.0 / (grid - 1), true);
}

PartialInfoReport partial_info_check(int trials, std::uint64_t seed, int d) {
  if (trials < 1) throw Error(ErrorKind::kInvalidArgument, "trials must be >= 1");
  const InvariantTest optimal(2.0 / 3.0, 0.0, d);
  const ComplexMatrix t = optimal.operator_form().matrix();
  Rng rng(seed);
  PartialInfoReport report;
  report.trials = trials;
  for (int k = 0; k < trials; ++k) {
    const PureState pi = haar_random_state(d, rng);
    const PureState tau = haar_random_state(d, rng);
    const double accept = expectation(t, tensor(pi.amplitudes(), tau.amplitudes()));
    const double fid = std::norm(pi.amplitudes().dot(tau.amplitudes()));
    report.max_identity_error =
        std::max(report.max_identity_error, std::abs(accept - (1.0 + fid) / 3.0));
    if (std::abs(fid - 0.5) > 1e-9) {
      ++report.decided;
      if ((accept > 0.5) == (fid > 0.5)) ++report.agreements;
    }
  }
  return report;
}

std::vector<SweepRow> delta_sweep(int steps, int d, const DeltaNumericOptions& opts) {
  if (steps < 2) throw Error(ErrorKind::kInvalidArgument, "steps must be >= 2");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps) * steps);
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      const InvariantTest t(double(i) / (steps - 1), double(j) / (steps - 1), d);
      rows.push_back({t.sigma(), t.alpha(), delta_closed_form(t), delta_numeric(t, opts)});
    }
  }
  return rows;
}

}  // namespace fidelity
