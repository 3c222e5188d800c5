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

#include "fidelity/matrix_io.hpp"

#include <cmath>
#include <fstream>

namespace fidelity::io {
namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorKind::kParse, "matrix JSON: " + what);
}

double finite_number(const nlohmann::json& v) {
  if (!v.is_number()) parse_error("entry component is not a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) parse_error("entry component is NaN or infinite");
  return x;
}

}  // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) parse_error("expected an object");
  for (const char* key : {"rows", "cols", "entries"}) {
    if (!j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  }
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
    parse_error("rows/cols must be integers");
  }
  const long rows = j["rows"].get<long>();
  const long cols = j["cols"].get<long>();
  if (rows < 1 || cols < 1) parse_error("rows/cols must be positive");
  const auto& entries = j["entries"];
  if (!entries.is_array() || static_cast<long>(entries.size()) != rows * cols) {
    parse_error("entries must be an array of rows*cols pairs");
  }
  ComplexMatrix m(rows, cols);
  for (long k = 0; k < rows * cols; ++k) {
    const auto& e = entries[k];
    if (!e.is_array() || e.size() != 2) parse_error("entry is not a [re, im] pair");
    m(k / cols, k % cols) = Complex(finite_number(e[0]), finite_number(e[1]));
  }
  return m;
}

nlohmann::json state_to_json(const PureState& s) {
  return matrix_to_json(s.amplitudes());
}

PureState state_from_json(const nlohmann::json& j) {
  const ComplexMatrix m = matrix_from_json(j);
  if (m.cols() != 1) parse_error("state must have cols = 1");
  return PureState(ComplexVector(m.col(0)));
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, path.string() + ": " + e.what());
  }
  return matrix_from_json(j);
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace fidelity::io
