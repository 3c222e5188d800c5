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

#include "cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace fidelity::cli {
namespace {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

bool consistent(const IsotypicDecomposition& dec, int d, int n) {
  if (dec.d() != d || dec.n() != n) return false;
  const long dim = symmetric_dimension(d, n);
  if (dec.space_dim() != dim * dim) return false;
  // Equal block dimensions can occur (d = 3, n = 2), so labels are checked
  // against the cross Casimir eigenvalue as well.
  const ComplexMatrix casimir = cross_casimir(symmetric_embedding(d, n));
  ComplexMatrix sum = ComplexMatrix::Zero(dec.space_dim(), dec.space_dim());
  for (const IsotypicBlock& b : dec.blocks()) {
    if (b.dim != isotypic_block_dimension(d, n, b.l)) return false;
    const ComplexMatrix scaled = cross_casimir_eigenvalue(d, n, b.l) * b.projector;
    if (max_abs_entry(casimir * b.projector - scaled) > 1e-8) return false;
    if (max_abs_entry(b.projector * b.projector - b.projector) > 1e-8) return false;
    if (std::abs(b.projector.trace().real() - double(b.dim)) > 1e-8) return false;
    sum += b.projector;
  }
  return max_abs_entry(sum - ComplexMatrix::Identity(sum.rows(), sum.cols())) <= 1e-8;
}

}  // namespace

std::filesystem::path cache_directory(const std::optional<std::filesystem::path>& override_dir) {
  if (override_dir) return *override_dir;
  if (const char* env = std::getenv("FIDELITY_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "fidelity";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "fidelity";
  }
  return std::filesystem::temp_directory_path() / "fidelity-cache";
}

std::string cache_file_name(int d, int n) {
  std::ostringstream key;
  key << "isotypic-projectors/v1/d=" << d << "/n=" << n;
  std::ostringstream name;
  name << "isotypic-" << std::hex << std::setw(16) << std::setfill('0')
       << fnv1a64(key.str()) << ".json";
  return name.str();
}

const char* to_string(CacheStatus status) {
  switch (status) {
    case CacheStatus::kHit: return "hit";
    case CacheStatus::kMiss: return "miss";
    case CacheStatus::kStale: return "stale";
    case CacheStatus::kUnwritable: return "unwritable";
  }
  return "unknown";
}

CachedDecomposition load_or_build_decomposition(int d, int n,
                                                const std::filesystem::path& dir) {
  CachedDecomposition out;
  out.path = dir / cache_file_name(d, n);
  std::error_code ec;
  if (std::filesystem::exists(out.path, ec)) {
    try {
      std::ifstream in(out.path);
      nlohmann::json j;
      in >> j;
      auto dec = std::make_shared<const IsotypicDecomposition>(decomposition_from_json(j));
      if (consistent(*dec, d, n)) {
        out.decomposition = std::move(dec);
        out.status = CacheStatus::kHit;
        return out;
      }
    } catch (const std::exception&) {
      // Unreadable cache entries are rebuilt below.
    }
    out.status = CacheStatus::kStale;
  }

  out.decomposition = std::make_shared<const IsotypicDecomposition>(isotypic_projectors(d, n));
  std::filesystem::create_directories(dir, ec);
  const std::filesystem::path tmp = out.path.string() + ".tmp";
  {
    std::ofstream file(tmp);
    if (file) file << decomposition_to_json(*out.decomposition).dump() << '\n';
    if (!file) {
      out.status = CacheStatus::kUnwritable;
      return out;
    }
  }
  std::filesystem::rename(tmp, out.path, ec);
  if (ec) out.status = CacheStatus::kUnwritable;
  return out;
}

}  // namespace fidelity::cli
