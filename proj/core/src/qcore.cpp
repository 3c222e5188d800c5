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

#include "fidelity/qcore.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace fidelity {
namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a nonempty square matrix, got " << m.rows()
       << "x" << m.cols();
    throw Error(ErrorKind::kDimensionMismatch, os.str());
  }
}

ComplexMatrix ginibre(int dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

PureState::PureState(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw Error(ErrorKind::kDimensionMismatch, "pure state of dimension 0");
  }
  const double norm = amplitudes_.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > tol::kNorm) {
    std::ostringstream os;
    os.precision(17);
    os << "state vector has norm " << norm << ", expected 1";
    throw Error(ErrorKind::kNormalization, os.str());
  }
}

PureState PureState::normalized(const ComplexVector& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorKind::kNormalization, "cannot normalize a zero vector");
  }
  return PureState(v / norm);
}

PureState PureState::basis(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim) {
    throw Error(ErrorKind::kInvalidArgument, "basis index out of range");
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return PureState(std::move(v));
}

DensityOperator::DensityOperator(ComplexMatrix matrix)
    : matrix_(std::move(matrix)) {
  require_square(matrix_, "density operator");
  if (!is_hermitian(matrix_)) {
    throw Error(ErrorKind::kInvalidOperator, "density operator is not Hermitian");
  }
  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > tol::kTrace) {
    std::ostringstream os;
    os.precision(17);
    os << "density operator has trace " << trace << ", expected 1";
    throw Error(ErrorKind::kInvalidOperator, os.str());
  }
  const HermitianEigen eig = hermitian_eigen(matrix_);
  if (eig.values.minCoeff() < tol::kEigenFloor) {
    throw Error(ErrorKind::kInvalidOperator,
                "density operator has a negative eigenvalue");
  }
}

TestOperator::TestOperator(ComplexMatrix matrix, double tolerance)
    : matrix_(std::move(matrix)) {
  require_square(matrix_, "test operator");
  if (!is_hermitian(matrix_, tolerance)) {
    throw Error(ErrorKind::kInvalidOperator, "test operator is not Hermitian");
  }
  const HermitianEigen eig = hermitian_eigen(matrix_, tolerance);
  if (eig.values.minCoeff() < -tolerance ||
      eig.values.maxCoeff() > 1.0 + tolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "test operator spectrum [" << eig.values.minCoeff() << ", "
       << eig.values.maxCoeff() << "] is not inside [0, 1]";
    throw Error(ErrorKind::kInvalidOperator, os.str());
  }
}

OutcomeDistribution::OutcomeDistribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty outcome distribution");
  }
  double sum = 0.0;
  for (double p : probabilities_) {
    if (!std::isfinite(p) || p < -tol::kProbability ||
        p > 1.0 + tol::kProbability) {
      throw Error(ErrorKind::kInvalidArgument,
                  "outcome probability outside [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::kProbabilitySum) {
    throw Error(ErrorKind::kInvalidArgument,
                "outcome probabilities do not sum to 1");
  }
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return max_abs_entry(m - m.adjoint()) <= tolerance;
}

double max_abs_entry(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m, double tolerance) {
  require_square(m, "hermitian_eigen");
  if (!is_hermitian(m, tolerance)) {
    throw Error(ErrorKind::kInvalidOperator,
                "eigendecomposition requested for a non-Hermitian matrix");
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kNumericalFailure,
                "Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

DensityOperator pure_state_projector(const PureState& s) {
  const ComplexVector& v = s.amplitudes();
  return DensityOperator(v * v.adjoint(), DensityOperator::Trusted{});
}

double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows() || a.rows() != a.cols()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "trace of product: incompatible dimensions");
  }
  // Pairs (i,j) and (j,i) are summed together so that swapping a and b
  // reproduces exactly the same floating-point operations.
  const Eigen::Index n = a.rows();
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    sum += a(i, i) * b(i, i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      sum += a(i, j) * b(j, i) + a(j, i) * b(i, j);
    }
  }
  return sum.real();
}

double trace_fidelity(const DensityOperator& p, const DensityOperator& t) {
  if (p.dim() != t.dim()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "trace_fidelity: states have different dimensions");
  }
  return trace_product(p.matrix(), t.matrix());
}

double expectation(const ComplexMatrix& op, const ComplexVector& v) {
  if (op.rows() != v.size() || op.cols() != v.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "expectation: operator and vector dimensions differ");
  }
  return v.dot(op * v).real();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const int> subsystem_dims, int keep) {
  if (subsystem_dims.empty() || keep < 0 ||
      keep >= static_cast<int>(subsystem_dims.size())) {
    throw Error(ErrorKind::kInvalidArgument,
                "partial_trace: kept subsystem index out of range");
  }
  long total = 1;
  for (int d : subsystem_dims) {
    if (d < 1) {
      throw Error(ErrorKind::kInvalidArgument,
                  "partial_trace: subsystem dimensions must be positive");
    }
    total *= d;
  }
  if (m.rows() != total || m.cols() != total) {
    throw Error(ErrorKind::kDimensionMismatch,
                "partial_trace: subsystem dimensions do not match the matrix");
  }
  // Index = (outer, kept, inner) with the kept factor in the middle.
  long outer = 1;
  for (int s = 0; s < keep; ++s) outer *= subsystem_dims[s];
  const long kd = subsystem_dims[keep];
  const long inner = total / (outer * kd);

  ComplexMatrix out = ComplexMatrix::Zero(kd, kd);
  for (long a = 0; a < kd; ++a) {
    for (long b = 0; b < kd; ++b) {
      Complex sum = 0.0;
      for (long o = 0; o < outer; ++o) {
        for (long in = 0; in < inner; ++in) {
          sum += m((o * kd + a) * inner + in, (o * kd + b) * inner + in);
        }
      }
      out(a, b) = sum;
    }
  }
  return out;
}

ComplexMatrix swap_operator(int d) {
  if (d < 1) throw Error(ErrorKind::kInvalidArgument, "swap_operator: d < 1");
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
  }
  return s;
}

PureState haar_random_state(int dim, Rng& rng) {
  if (dim < 1) throw Error(ErrorKind::kInvalidArgument, "dimension must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return PureState::normalized(v);
}

PureState haar_random_state(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_state(dim, rng);
}

ComplexMatrix haar_random_unitary(int dim, Rng& rng) {
  if (dim < 1) throw Error(ErrorKind::kInvalidArgument, "dimension must be >= 1");
  const ComplexMatrix g = ginibre(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(dim, rng);
}

}  // namespace fidelity
