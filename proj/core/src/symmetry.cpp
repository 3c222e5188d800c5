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

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "fidelity/matrix_io.hpp"

namespace fidelity {
namespace {

void require_positive(int value, const char* name) {
  if (value < 1) {
    throw Error(ErrorKind::kInvalidArgument, std::string(name) + " must be >= 1");
  }
}

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

double multinomial(std::span<const int> occupation) {
  int total = 0;
  double log_value = 0.0;
  for (int k : occupation) {
    total += k;
    log_value -= std::lgamma(k + 1.0);
  }
  log_value += std::lgamma(total + 1.0);
  return std::round(std::exp(log_value));
}

void nondecreasing_tuples(int d, int n, std::vector<int>& current,
                          std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == n) {
    out.push_back(current);
    return;
  }
  const int start = current.empty() ? 0 : current.back();
  for (int i = start; i < d; ++i) {
    current.push_back(i);
    nondecreasing_tuples(d, n, current, out);
    current.pop_back();
  }
}

std::map<std::vector<int>, int> occupation_index(const SymmetricEmbedding& e) {
  std::map<std::vector<int>, int> index;
  for (int k = 0; k < e.dim_plus(); ++k) index.emplace(e.occupations[k], k);
  return index;
}

// Clusters ascending eigenvalues separated by gaps larger than `gap`.
std::vector<std::pair<int, int>> cluster_spectrum(const RealVector& values,
                                                  double gap) {
  std::vector<std::pair<int, int>> clusters;
  int begin = 0;
  for (int i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values(i) - values(i - 1) > gap) {
      clusters.emplace_back(begin, i);
      begin = i;
    }
  }
  return clusters;
}

constexpr double kClusterGap = 1e-6;
constexpr int kMaxAttempts = 3;

// Irrational weights for the factor swap; the cross Casimir always has
// weight 1. Swap eigenvalues are +-1 and Casimir eigenvalues are
// half-integers, so no two blocks can collide.
constexpr std::array<double, kMaxAttempts> kSwapWeights = {
    0.70710678118654752, 0.57721566490153286, 0.38196601125010515};

}  // namespace

SymAntisymProjectors sym_antisym_projectors(int d) {
  require_positive(d, "d");
  const ComplexMatrix id = ComplexMatrix::Identity(d * d, d * d);
  const ComplexMatrix swap = swap_operator(d);
  return {TestOperator(0.5 * (id + swap)), TestOperator(0.5 * (id - swap))};
}

long symmetric_dimension(int d, int n) {
  require_positive(d, "d");
  require_positive(n, "n");
  // C(n + d - 1, d - 1) built incrementally stays integral at each step.
  long r = 1;
  for (int k = 1; k < d; ++k) r = r * (n + k) / k;
  return r;
}

SymmetricEmbedding symmetric_embedding(int d, int n) {
  require_positive(d, "d");
  require_positive(n, "n");
  SymmetricEmbedding e;
  e.d = d;
  e.n = n;
  std::vector<int> current;
  nondecreasing_tuples(d, n, current, e.tuples);

  std::map<std::vector<int>, int> tuple_index;
  for (std::size_t k = 0; k < e.tuples.size(); ++k) {
    std::vector<int> occ(d, 0);
    for (int i : e.tuples[k]) ++occ[i];
    e.occupations.push_back(std::move(occ));
    tuple_index.emplace(e.tuples[k], static_cast<int>(k));
  }

  const long full = ipow(d, n);
  e.basis = ComplexMatrix::Zero(full, static_cast<long>(e.tuples.size()));
  std::vector<int> digits(n);
  for (long idx = 0; idx < full; ++idx) {
    long rest = idx;
    for (int pos = n - 1; pos >= 0; --pos) {
      digits[pos] = static_cast<int>(rest % d);
      rest /= d;
    }
    std::vector<int> sorted = digits;
    std::sort(sorted.begin(), sorted.end());
    const int col = tuple_index.at(sorted);
    e.basis(idx, col) = 1.0 / std::sqrt(multinomial(e.occupations[col]));
  }
  return e;
}

PureState embed_state_power(const PureState& s, int n,
                            const SymmetricEmbedding& e) {
  if (s.dim() != e.d || n != e.n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "embed_state_power: state or power does not match embedding");
  }
  ComplexVector out(e.dim_plus());
  for (int k = 0; k < e.dim_plus(); ++k) {
    Complex amp = std::sqrt(multinomial(e.occupations[k]));
    for (int i : e.tuples[k]) amp *= s[i];
    out(k) = amp;
  }
  return PureState::normalized(out);
}

ComplexMatrix embed_unitary_power(const ComplexMatrix& u,
                                  const SymmetricEmbedding& e) {
  if (u.rows() != e.d || u.cols() != e.d) {
    throw Error(ErrorKind::kDimensionMismatch,
                "embed_unitary_power: unitary does not match embedding");
  }
  // Apply U to one tensor factor at a time instead of forming U^{(x)n}.
  ComplexMatrix image = e.basis;
  const long full = e.basis.rows();
  for (int pos = 0; pos < e.n; ++pos) {
    const long stride = ipow(e.d, e.n - 1 - pos);
    ComplexMatrix next = ComplexMatrix::Zero(full, image.cols());
    for (long idx = 0; idx < full; ++idx) {
      const int digit = static_cast<int>((idx / stride) % e.d);
      const long base = idx - digit * stride;
      for (int a = 0; a < e.d; ++a) {
        next.row(base + a * stride) += u(a, digit) * image.row(idx);
      }
    }
    image = std::move(next);
  }
  return e.basis.adjoint() * image;
}

ComplexMatrix collective_generator(const SymmetricEmbedding& e, int a, int b) {
  if (a < 0 || b < 0 || a >= e.d || b >= e.d) {
    throw Error(ErrorKind::kInvalidArgument, "collective_generator: bad index");
  }
  const int dim = e.dim_plus();
  const auto index = occupation_index(e);
  ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const std::vector<int>& occ = e.occupations[k];
    if (a == b) {
      g(k, k) = occ[a];
    } else if (occ[b] > 0) {
      std::vector<int> target = occ;
      --target[b];
      ++target[a];
      g(index.at(target), k) = std::sqrt(double(occ[b]) * (occ[a] + 1));
    }
  }
  return g;
}

ComplexMatrix cross_casimir(const SymmetricEmbedding& e) {
  std::vector<ComplexMatrix> gens;
  gens.reserve(e.d * e.d);
  for (int a = 0; a < e.d; ++a) {
    for (int b = 0; b < e.d; ++b) gens.push_back(collective_generator(e, a, b));
  }
  const int dim = e.dim_plus();
  ComplexMatrix x = ComplexMatrix::Zero(dim * dim, dim * dim);
  for (int a = 0; a < e.d; ++a) {
    for (int b = 0; b < e.d; ++b) {
      x += tensor(gens[a * e.d + b], gens[b * e.d + a]);
    }
  }
  return x;
}

long weyl_dimension(std::span<const int> highest_weight, int d) {
  require_positive(d, "d");
  std::vector<long> w(d, 0);
  for (int i = 0; i < d && i < static_cast<int>(highest_weight.size()); ++i) {
    w[i] = highest_weight[i];
  }
  for (int i = d; i < static_cast<int>(highest_weight.size()); ++i) {
    if (highest_weight[i] != 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "weight has more nonzero rows than the dimension allows");
    }
  }
  // prod_{i<j} (w_i - w_j + j - i) / (j - i); integral at the end.
  long double num = 1.0L;
  long double den = 1.0L;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      num *= static_cast<long double>(w[i] - w[j] + j - i);
      den *= static_cast<long double>(j - i);
    }
  }
  return std::lround(static_cast<double>(num / den));
}

long isotypic_block_dimension(int d, int n, int l) {
  if (l < 0 || l > n) {
    throw Error(ErrorKind::kInvalidArgument, "block index out of range");
  }
  const std::array<int, 2> weight = {2 * n - l, l};
  if (d == 1) return l == 0 ? 1 : 0;
  return weyl_dimension(weight, d);
}

double cross_casimir_eigenvalue(int d, int n, int l) {
  // Quadratic Casimir sum_ab E_ab E_ba of weight w is sum_i w_i (w_i + d + 1 - 2i)
  // (rows counted from 1). The full Casimir splits as C_1 + C_2 + 2 X with
  // C_1 = C_2 = n (n + d - 1) on H_+^n.
  const double w1 = 2.0 * n - l;
  const double w2 = l;
  const double total = w1 * (w1 + d - 1) + w2 * (w2 + d - 3);
  const double single = double(n) * (n + d - 1);
  return 0.5 * (total - 2.0 * single);
}

IsotypicDecomposition::IsotypicDecomposition(int d, int n,
                                             std::vector<IsotypicBlock> blocks)
    : d_(d), n_(n), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != n_ + 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "isotypic decomposition needs exactly n + 1 blocks");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const IsotypicBlock& x, const IsotypicBlock& y) { return x.l < y.l; });
  const long dim = symmetric_dimension(d, n);
  for (int l = 0; l <= n_; ++l) {
    const IsotypicBlock& b = blocks_[l];
    if (b.l != l || b.projector.rows() != dim * dim ||
        b.projector.cols() != dim * dim) {
      throw Error(ErrorKind::kInvalidArgument, "malformed isotypic block");
    }
  }
}

int IsotypicDecomposition::space_dim() const {
  return static_cast<int>(blocks_.front().projector.rows());
}

const ComplexMatrix& IsotypicDecomposition::projector(int l) const {
  if (l < 0 || l > n_) throw Error(ErrorKind::kInvalidArgument, "bad block index");
  return blocks_[l].projector;
}

long IsotypicDecomposition::block_dim(int l) const {
  if (l < 0 || l > n_) throw Error(ErrorKind::kInvalidArgument, "bad block index");
  return blocks_[l].dim;
}

IsotypicDecomposition isotypic_projectors(int d, int n) {
  if (d < 2) {
    throw Error(ErrorKind::kInvalidArgument, "isotypic_projectors requires d >= 2");
  }
  require_positive(n, "n");
  const SymmetricEmbedding e = symmetric_embedding(d, n);
  const int dim = e.dim_plus();
  const ComplexMatrix x = cross_casimir(e);
  const ComplexMatrix swap = swap_operator(dim);

  std::string last_failure;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const ComplexMatrix generic = kSwapWeights[attempt] * swap + x;
    const HermitianEigen eig = hermitian_eigen(generic);
    const auto clusters = cluster_spectrum(eig.values, kClusterGap);
    if (static_cast<int>(clusters.size()) != n + 1) {
      std::ostringstream os;
      os << "found " << clusters.size() << " eigenvalue clusters, expected "
         << n + 1;
      last_failure = os.str();
      continue;
    }

    std::vector<IsotypicBlock> blocks;
    std::vector<bool> seen(n + 1, false);
    bool ok = true;
    for (const auto& [begin, end] : clusters) {
      const ComplexMatrix v = eig.vectors.middleCols(begin, end - begin);
      ComplexMatrix projector = v * v.adjoint();
      projector = 0.5 * (projector + projector.adjoint());
      const double casimir = trace_product(projector, x) / (end - begin);
      // The block label comes from the Casimir value, not the block size;
      // sizes can coincide (d = 3, n = 2 has two 15-dimensional blocks).
      int label = -1;
      for (int l = 0; l <= n; ++l) {
        if (std::abs(casimir - cross_casimir_eigenvalue(d, n, l)) < 1e-6) label = l;
      }
      if (label < 0 || seen[label] ||
          isotypic_block_dimension(d, n, label) != end - begin) {
        ok = false;
        std::ostringstream os;
        os << "cluster of size " << end - begin << " with Casimir value "
           << casimir << " matches no highest weight";
        last_failure = os.str();
        break;
      }
      seen[label] = true;
      blocks.push_back({label, end - begin, std::move(projector)});
    }
    if (ok) return IsotypicDecomposition(d, n, std::move(blocks));
  }
  throw Error(ErrorKind::kNumericalFailure,
              "isotypic_projectors: ambiguous spectrum (" + last_failure + ")");
}

ComplexMatrix twirl(const ComplexMatrix& op, const IsotypicDecomposition& dec) {
  if (op.rows() != dec.space_dim() || op.cols() != dec.space_dim()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "twirl: operator does not act on H_+^n (x) H_+^n");
  }
  ComplexMatrix out = ComplexMatrix::Zero(op.rows(), op.cols());
  for (const IsotypicBlock& b : dec.blocks()) {
    const Complex weight = (op * b.projector).trace() / double(b.dim);
    out += weight * b.projector;
  }
  return out;
}

DensityOperator twirl(const DensityOperator& rho,
                      const IsotypicDecomposition& dec) {
  ComplexMatrix out = twirl(rho.matrix(), dec);
  out = 0.5 * (out + out.adjoint());
  return DensityOperator(std::move(out));
}

std::vector<double> beta_coefficients(const DensityOperator& rho,
                                      const IsotypicDecomposition& dec) {
  if (rho.dim() != dec.space_dim()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "beta_coefficients: state does not act on H_+^n (x) H_+^n");
  }
  std::vector<double> beta;
  beta.reserve(dec.blocks().size());
  for (const IsotypicBlock& b : dec.blocks()) {
    beta.push_back(trace_product(rho.matrix(), b.projector));
  }
  return beta;
}

std::vector<double> beta_coefficients(const ComplexVector& psi,
                                      const IsotypicDecomposition& dec) {
  if (psi.size() != dec.space_dim()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "beta_coefficients: vector does not live on H_+^n (x) H_+^n");
  }
  std::vector<double> beta;
  beta.reserve(dec.blocks().size());
  for (const IsotypicBlock& b : dec.blocks()) {
    beta.push_back(expectation(b.projector, psi));
  }
  return beta;
}

ComplexVector embed_pair_power(const PureState& pi, const PureState& tau,
                               const SymmetricEmbedding& e) {
  return tensor(embed_state_power(pi, e.n, e).amplitudes(),
                embed_state_power(tau, e.n, e).amplitudes());
}

nlohmann::json decomposition_to_json(const IsotypicDecomposition& dec) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const IsotypicBlock& b : dec.blocks()) {
    blocks.push_back({{"l", b.l}, {"dim", b.dim},
                      {"projector", io::matrix_to_json(b.projector)}});
  }
  return {{"d", dec.d()}, {"n", dec.n()}, {"blocks", std::move(blocks)}};
}

IsotypicDecomposition decomposition_from_json(const nlohmann::json& j) {
  try {
    const int d = j.at("d").get<int>();
    const int n = j.at("n").get<int>();
    std::vector<IsotypicBlock> blocks;
    for (const auto& b : j.at("blocks")) {
      blocks.push_back({b.at("l").get<int>(), b.at("dim").get<long>(),
                        io::matrix_from_json(b.at("projector"))});
    }
    return IsotypicDecomposition(d, n, std::move(blocks));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("decomposition JSON: ") + e.what());
  }
}

}  // namespace fidelity
