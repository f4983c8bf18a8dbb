// Copyright 2026 The sabc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON file formats. Complex numbers are [re, im] arrays, matrices are
// row-major nested arrays, and every document carries a top-level "n".
//
//   matrix pair:     {"n": 1, "a": [[[1,0],[0,0]], ...], "b": [...]}
//   canonical form:  {"n": 1, "u": ..., "cosines": [...], "sines": [...],
//                     "u1": ..., "u2": ..., "v1": ..., "v2": ...}

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sabc/boundary.hpp"
#include "sabc/canonical.hpp"

namespace sabc::io {

using json = nlohmann::json;

/// Malformed or unreadable input.
class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j, const char* what);

json vector_to_json(const RealVector& v);
RealVector vector_from_json(const json& j, const char* what);

json pair_to_json(const BoundaryPair& bc);
BoundaryPair pair_from_json(const json& j);

json form_to_json(const CanonicalForm& cf);
CanonicalForm form_from_json(const json& j);

/// Reads a whole file, or standard input for "-".
std::string read_text(const std::string& path);
/// Writes to a file, or standard output for "-". Adds a trailing newline.
void write_text(const std::string& path, const std::string& text);

json read_json(const std::string& path);
void write_json(const std::string& path, const json& j);

/// Machine-readable summary printed by the CLI.
struct Report {
  bool selfadjoint = false;
  double residual = 0.0;
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  std::optional<std::string> class_name;
  std::optional<int> r;
  std::optional<RealVector> sines;
  std::optional<RealVector> cosines;
  std::optional<double> roundtrip_residual;

  json to_json() const;
};

inline constexpr const char* not_self_adjoint_class = "not-self-adjoint";

}  // namespace sabc::io
