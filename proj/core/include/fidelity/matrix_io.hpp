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

// JSON encoding of matrices and states:
//   { "rows": int, "cols": int, "entries": [[re, im], ...] }   (row-major)
// States are column vectors (cols = 1). Non-finite entries are rejected.

#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "fidelity/qcore.hpp"

namespace fidelity::io {

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const PureState& s);
PureState state_from_json(const nlohmann::json& j);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace fidelity::io
