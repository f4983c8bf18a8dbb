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

#include "sabc/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace sabc::io {

namespace {

[[noreturn]] void fail(const char* what, const std::string& msg) {
  throw format_error(std::string(what) + ": " + msg);
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) fail(what, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(what, "non-finite value");
  return x;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw format_error("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) fail(key, "missing field");
  return *it;
}

int order_from_json(const json& j) {
  const json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1 ||
      n.get<long long>() > 1024) {
    fail("n", "expected a positive integer");
  }
  return n.get<int>();
}

void require_shape(const ComplexMatrix& m, Eigen::Index rows, Eigen::Index cols,
                   const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    fail(what, "expected " + std::to_string(rows) + "x" +
                   std::to_string(cols) + ", got " + std::to_string(m.rows()) +
                   "x" + std::to_string(m.cols()));
  }
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) fail(what, "expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) fail(what, "expected non-empty rows");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      fail(what, "ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& z = row[c];
      if (!z.is_array() || z.size() != 2) fail(what, "entries must be [re, im]");
      m(r, c) = complex(finite_number(z[0], what), finite_number(z[1], what));
    }
  }
  return m;
}

json vector_to_json(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

RealVector vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) fail(what, "expected an array");
  RealVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = finite_number(j[i], what);
  }
  return v;
}

json pair_to_json(const BoundaryPair& bc) {
  return {{"n", bc.n()}, {"a", matrix_to_json(bc.a())},
          {"b", matrix_to_json(bc.b())}};
}

BoundaryPair pair_from_json(const json& j) {
  const int n = order_from_json(j);
  const ComplexMatrix a = matrix_from_json(field(j, "a"), "a");
  const ComplexMatrix b = matrix_from_json(field(j, "b"), "b");
  require_shape(a, 2 * n, 2 * n, "a");
  require_shape(b, 2 * n, 2 * n, "b");
  return BoundaryPair(n, a, b);
}

json form_to_json(const CanonicalForm& cf) {
  return {{"n", cf.n},
          {"u", matrix_to_json(cf.u)},
          {"cosines", vector_to_json(cf.cosines)},
          {"sines", vector_to_json(cf.sines)},
          {"u1", matrix_to_json(cf.u1)},
          {"u2", matrix_to_json(cf.u2)},
          {"v1", matrix_to_json(cf.v1)},
          {"v2", matrix_to_json(cf.v2)}};
}

CanonicalForm form_from_json(const json& j) {
  CanonicalForm cf;
  cf.n = order_from_json(j);
  const Eigen::Index n = cf.n;
  cf.u = matrix_from_json(field(j, "u"), "u");
  require_shape(cf.u, 2 * n, 2 * n, "u");
  cf.cosines = vector_from_json(field(j, "cosines"), "cosines");
  cf.sines = vector_from_json(field(j, "sines"), "sines");
  if (cf.cosines.size() != n || cf.sines.size() != n) {
    fail("cosines/sines", "expected n entries each");
  }
  const std::pair<const char*, ComplexMatrix*> blocks[] = {
      {"u1", &cf.u1}, {"u2", &cf.u2}, {"v1", &cf.v1}, {"v2", &cf.v2}};
  for (const auto& [key, target] : blocks) {
    *target = matrix_from_json(field(j, key), key);
    require_shape(*target, n, n, key);
  }
  return cf;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw format_error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << '\n';
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw format_error("cannot open '" + path + "' for writing");
  out << text << '\n';
  if (!out) throw format_error("write to '" + path + "' failed");
}

json read_json(const std::string& path) {
  const std::string text = read_text(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw format_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  write_text(path, j.dump(2));
}

json Report::to_json() const {
  json j = {{"selfadjoint", selfadjoint},
            {"residual", residual},
            {"rank_a", rank_a},
            {"rank_b", rank_b}};
  if (class_name) j["class"] = *class_name;
  if (r) j["r"] = *r;
  if (sines) j["sines"] = vector_to_json(*sines);
  if (cosines) j["cosines"] = vector_to_json(*cosines);
  if (roundtrip_residual) j["roundtrip_residual"] = *roundtrip_residual;
  return j;
}

}  // namespace sabc::io
