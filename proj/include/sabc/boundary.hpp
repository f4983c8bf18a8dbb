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

#pragma once

#include <cstddef>
#include <string_view>

#include "sabc/linalg.hpp"

namespace sabc {

/// Boundary conditions A Y(a) + B Y(b) = 0 for a differential operator of
/// order 2n; A and B are 2n x 2n.
class BoundaryPair {
 public:
  BoundaryPair(int n, ComplexMatrix a, ComplexMatrix b);

  int n() const { return n_; }
  Eigen::Index size() const { return 2 * n_; }
  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& b() const { return b_; }

  /// The 2n x 4n concatenation (A : B).
  ComplexMatrix joined() const;
  static BoundaryPair from_joined(int n, const ComplexMatrix& ab);

 private:
  int n_;
  ComplexMatrix a_;
  ComplexMatrix b_;
};

/// Real 2n x 2n matrix with entry (r, s) = (-1)^r if s = 2n + 1 - r (1-based).
/// Skew-symmetric with square -I.
struct SymplecticMatrix {
  int n;
  Eigen::MatrixXi entries;

  ComplexMatrix as_complex() const { return entries.cast<complex>(); }
};

SymplecticMatrix build_symplectic(int n);

/// The n x n signed antidiagonal with the same sign rule as the symplectic
/// matrix; its square is (-1)^(n+1) I.
ComplexMatrix build_small_c(int n);

enum class BCTag { separated, mixed, coupled };

std::string_view to_string(BCTag tag) noexcept;

/// Coupling class with its rank r = rank(A) - n.
struct BCClass {
  BCTag tag;
  int r;

  static BCClass from_rank(int n, int r);
  friend bool operator==(const BCClass&, const BCClass&) = default;
};

/// Frobenius norm of A C A^* - B C B^* divided by (|A|^2 + |B|^2 + 1).
double selfadjoint_residual(const BoundaryPair& bc);

bool is_selfadjoint(const BoundaryPair& bc, double tol = default_tol);

struct RankReport {
  std::size_t rank_a;
  std::size_t rank_b;
  bool ok;
};

/// Checks n <= rank A = rank B <= 2n on a self-adjoint pair.
RankReport check_rank_theorem(const BoundaryPair& bc, double tol = default_tol);

/// Left multiplication (G A, G B); G must be non-singular.
BoundaryPair row_transform(const BoundaryPair& bc, const ComplexMatrix& g,
                           double tol = default_tol);

/// Frobenius distance between the orthogonal projectors onto the row spaces
/// of the two (A : B) matrices; zero iff the pairs are row-equivalent.
double row_space_distance(const BoundaryPair& lhs, const BoundaryPair& rhs);

/// True when both pairs describe the same boundary conditions, i.e. their
/// (A : B) rows span the same subspace.
bool row_equivalent(const BoundaryPair& lhs, const BoundaryPair& rhs,
                    double tol = default_tol);

}  // namespace sabc
