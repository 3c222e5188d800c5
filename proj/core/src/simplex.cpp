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

#include "fidelity/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fidelity/errors.hpp"

namespace fidelity::lp {
namespace {

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), data_(std::size_t(rows) * (cols + 1), 0.0),
        cost_(cols + 1, 0.0), basis_(rows, -1) {}

  double& at(int r, int c) { return data_[std::size_t(r) * (cols_ + 1) + c]; }
  double at(int r, int c) const { return data_[std::size_t(r) * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double rhs(int r) const { return at(r, cols_); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::vector<double>& cost() { return cost_; }
  std::vector<int>& basis() { return basis_; }

  // Reduced-cost row for the column costs c: d_j = c_j - c_B^T B^{-1} A_j;
  // the last entry holds minus the objective value.
  void price(const std::vector<double>& c) {
    std::fill(cost_.begin(), cost_.end(), 0.0);
    for (int j = 0; j < cols_; ++j) cost_[j] = c[j];
    for (int r = 0; r < rows_; ++r) {
      const double cb = c[basis_[r]];
      if (cb == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) cost_[j] -= cb * at(r, j);
    }
  }

  void pivot(int pr, int pc) {
    const double inv = 1.0 / at(pr, pc);
    for (int j = 0; j <= cols_; ++j) at(pr, j) *= inv;
    at(pr, pc) = 1.0;
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double factor = at(r, pc);
      if (factor == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) at(r, j) -= factor * at(pr, j);
      at(r, pc) = 0.0;
    }
    const double factor = cost_[pc];
    if (factor != 0.0) {
      for (int j = 0; j <= cols_; ++j) cost_[j] -= factor * at(pr, j);
      cost_[pc] = 0.0;
    }
    basis_[pr] = pc;
  }

  void remove_row(int r) {
    const std::size_t width = cols_ + 1;
    data_.erase(data_.begin() + std::ptrdiff_t(r * width),
                data_.begin() + std::ptrdiff_t((r + 1) * width));
    basis_.erase(basis_.begin() + r);
    --rows_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
  std::vector<double> cost_;
  std::vector<int> basis_;
};

// Runs simplex iterations on the current reduced-cost row. Columns with
// allowed[j] == false never enter. Dantzig pricing, switching to Bland's
// rule after a run of degenerate pivots.
Status iterate(Tableau& t, const std::vector<bool>& allowed, const Options& opt,
               int& iterations) {
  int degenerate_run = 0;
  while (iterations < opt.max_iterations) {
    const bool bland = degenerate_run > 50;
    int enter = -1;
    double most_negative = -opt.optimality_tolerance;
    for (int j = 0; j < t.cols(); ++j) {
      if (!allowed[j]) continue;
      const double d = t.cost()[j];
      if (d < most_negative) {
        enter = j;
        if (bland) break;
        most_negative = d;
      }
    }
    if (enter < 0) return Status::kOptimal;

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, enter);
      if (a <= opt.pivot_tolerance) continue;
      const double ratio = std::max(t.rhs(r), 0.0) / a;
      if (ratio < best_ratio - 1e-12 ||
          (ratio <= best_ratio + 1e-12 && leave >= 0 &&
           t.basis()[r] < t.basis()[leave])) {
        best_ratio = std::min(ratio, best_ratio);
        leave = r;
      }
    }
    if (leave < 0) return Status::kUnbounded;
    degenerate_run = best_ratio <= 1e-12 ? degenerate_run + 1 : 0;
    t.pivot(leave, enter);
    ++iterations;
  }
  return Status::kIterationLimit;
}

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kOptimal: return "optimal";
    case Status::kInfeasible: return "infeasible";
    case Status::kUnbounded: return "unbounded";
    case Status::kIterationLimit: return "iteration_limit";
  }
  return "unknown";
}

Solution solve(const Problem& problem, const Options& options) {
  const int n = problem.num_vars;
  if (n < 1 || static_cast<int>(problem.objective.size()) != n) {
    throw Error(ErrorKind::kInvalidArgument, "lp: objective size must equal num_vars");
  }
  for (const Constraint& c : problem.constraints) {
    if (static_cast<int>(c.coeffs.size()) != n) {
      throw Error(ErrorKind::kInvalidArgument, "lp: constraint width mismatch");
    }
  }

  // Normalize to nonnegative right-hand sides, then count helper columns.
  struct Row {
    std::vector<double> a;
    Relation rel;
    double b;
  };
  std::vector<Row> rows;
  rows.reserve(problem.constraints.size());
  int slack_count = 0;
  int artificial_count = 0;
  for (const Constraint& c : problem.constraints) {
    Row row{c.coeffs, c.relation, c.rhs};
    if (row.b < 0.0) {
      for (double& v : row.a) v = -v;
      row.b = -row.b;
      if (row.rel == Relation::kLessEqual) row.rel = Relation::kGreaterEqual;
      else if (row.rel == Relation::kGreaterEqual) row.rel = Relation::kLessEqual;
    }
    if (row.rel != Relation::kEqual) ++slack_count;
    if (row.rel != Relation::kLessEqual) ++artificial_count;
    rows.push_back(std::move(row));
  }

  const int m = static_cast<int>(rows.size());
  const int first_slack = n;
  const int first_artificial = n + slack_count;
  const int cols = n + slack_count + artificial_count;
  Tableau t(m, cols);
  int next_slack = first_slack;
  int next_artificial = first_artificial;
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) t.at(r, j) = rows[r].a[j];
    t.rhs(r) = rows[r].b;
    switch (rows[r].rel) {
      case Relation::kLessEqual:
        t.at(r, next_slack) = 1.0;
        t.basis()[r] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        t.at(r, next_slack++) = -1.0;
        t.at(r, next_artificial) = 1.0;
        t.basis()[r] = next_artificial++;
        break;
      case Relation::kEqual:
        t.at(r, next_artificial) = 1.0;
        t.basis()[r] = next_artificial++;
        break;
    }
  }

  Solution sol;
  std::vector<bool> allowed(cols, true);

  if (artificial_count > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (int j = first_artificial; j < cols; ++j) phase1[j] = 1.0;
    t.price(phase1);
    const Status s = iterate(t, allowed, options, sol.iterations);
    if (s == Status::kIterationLimit) {
      sol.status = s;
      return sol;
    }
    const double infeasibility = -t.cost()[cols];
    if (infeasibility > options.feasibility_tolerance) {
      sol.status = Status::kInfeasible;
      return sol;
    }
    // Pivot remaining zero-level artificials out of the basis; rows where
    // that is impossible are linearly dependent and are dropped.
    for (int r = t.rows() - 1; r >= 0; --r) {
      if (t.basis()[r] < first_artificial) continue;
      int pc = -1;
      double best = options.pivot_tolerance;
      for (int j = 0; j < first_artificial; ++j) {
        if (std::abs(t.at(r, j)) > best) {
          best = std::abs(t.at(r, j));
          pc = j;
        }
      }
      if (pc >= 0) t.pivot(r, pc);
      else t.remove_row(r);
    }
    for (int j = first_artificial; j < cols; ++j) allowed[j] = false;
  }

  std::vector<double> phase2(cols, 0.0);
  for (int j = 0; j < n; ++j) phase2[j] = problem.objective[j];
  t.price(phase2);
  sol.status = iterate(t, allowed, options, sol.iterations);
  if (sol.status != Status::kOptimal) return sol;

  sol.x.assign(n, 0.0);
  for (int r = 0; r < t.rows(); ++r) {
    if (t.basis()[r] < n) sol.x[t.basis()[r]] = std::max(t.rhs(r), 0.0);
  }
  sol.objective = 0.0;
  for (int j = 0; j < n; ++j) sol.objective += problem.objective[j] * sol.x[j];
  return sol;
}

}  // namespace fidelity::lp
