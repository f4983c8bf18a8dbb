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

// Test-only helpers and oracles. Nothing here calls into the code paths it
// is used to check.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sabc/boundary.hpp"
#include "sabc/canonical.hpp"
#include "sabc/generator.hpp"

namespace sabc::testing {

inline const double sqrt2 = std::sqrt(2.0);
inline const complex I{0.0, 1.0};

inline ComplexMatrix eye(Eigen::Index k) { return ComplexMatrix::Identity(k, k); }
inline ComplexMatrix zeros(Eigen::Index r, Eigen::Index c) {
  return ComplexMatrix::Zero(r, c);
}

// C_3 as printed, [[0,0,-1],[0,1,0],[-1,0,0]].
inline ComplexMatrix literal_c3() {
  ComplexMatrix c(3, 3);
  c << 0, 0, -1, 0, 1, 0, -1, 0, 0;
  return c;
}

// (A : B) = [sqrt2 I_3, 0, 0, 0; 0, 0, sqrt2 I_3, 0]
inline BoundaryPair golden_separated() {
  ComplexMatrix ab = zeros(6, 12);
  ab.block(0, 0, 3, 3) = sqrt2 * eye(3);
  ab.block(3, 6, 3, 3) = sqrt2 * eye(3);
  return BoundaryPair::from_joined(3, ab);
}

// (A : B) = [I, -iC_3, I, -iC_3; I, iC_3, I, iC_3] / sqrt2
inline BoundaryPair golden_coupled() {
  const ComplexMatrix c3 = literal_c3();
  ComplexMatrix ab(6, 12);
  ab << eye(3), -I * c3, eye(3), -I * c3,
        eye(3), I * c3, eye(3), I * c3;
  return BoundaryPair::from_joined(3, ab / sqrt2);
}

inline BoundaryPair dirichlet_n1() {
  ComplexMatrix a(2, 2), b(2, 2);
  a << 1, 0, 0, 0;
  b << 0, 0, 1, 0;
  return BoundaryPair(1, a, b);
}

inline BoundaryPair periodic_n1() { return BoundaryPair(1, eye(2), eye(2)); }

// Exact rank of an integer matrix by Gaussian elimination over the
// rationals.
inline std::size_t exact_rank(const std::vector<std::vector<long long>>& in) {
  using rational = boost::multiprecision::cpp_rational;
  std::vector<std::vector<rational>> m;
  for (const auto& row : in) m.emplace_back(row.begin(), row.end());
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Cosine/sine core assembled from its definition, for building unitaries
// with prescribed angles.
inline ComplexMatrix cs_unitary(const ComplexMatrix& u1, const ComplexMatrix& u2,
                                const ComplexMatrix& v1, const ComplexMatrix& v2,
                                const RealVector& c, const RealVector& s) {
  const Eigen::Index n = c.size();
  ComplexMatrix left = zeros(2 * n, 2 * n), right = zeros(2 * n, 2 * n),
                core(2 * n, 2 * n);
  left.topLeftCorner(n, n) = u1;
  left.bottomRightCorner(n, n) = u2;
  right.topLeftCorner(n, n) = v1;
  right.bottomRightCorner(n, n) = v2;
  const ComplexMatrix cd = c.cast<complex>().asDiagonal();
  const ComplexMatrix sd = s.cast<complex>().asDiagonal();
  core << cd, sd, -sd, cd;
  return left * core * right;
}

inline double max_abs_diff(const RealVector& x, const RealVector& y) {
  return (x - y).cwiseAbs().maxCoeff();
}

}  // namespace sabc::testing
