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

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "fidelity/symmetry.hpp"

namespace fidelity::cli {

/// Explicit override, then $FIDELITY_CACHE_DIR, then $XDG_CACHE_HOME/fidelity,
/// then ~/.cache/fidelity, then <tmp>/fidelity-cache.
std::filesystem::path cache_directory(const std::optional<std::filesystem::path>& override_dir);

/// Content-addressed file name for the (d, n) decomposition.
std::string cache_file_name(int d, int n);

enum class CacheStatus { kHit, kMiss, kStale, kUnwritable };
const char* to_string(CacheStatus status);

struct CachedDecomposition {
  std::shared_ptr<const IsotypicDecomposition> decomposition;
  std::filesystem::path path;
  CacheStatus status = CacheStatus::kMiss;
};

/// Loads the decomposition from the cache if present and consistent,
/// otherwise rebuilds it and (best effort) writes it back.
CachedDecomposition load_or_build_decomposition(int d, int n,
                                                const std::filesystem::path& dir);

}  // namespace fidelity::cli
