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

#include "sabc/boundary.hpp"

#include <string>
#include <utility>

namespace sabc {

namespace {

void require_order(int n, const char* what) {
  if (n < 1) {
    throw error(errc::invalid_order,
                std::string(what) + ": order parameter n must be >= 1");
  }
}

// (-1)^r on the antidiagonal of a k x k matrix, 1-based r.
Eigen::MatrixXi signed_antidiagonal(int k) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(k, k);
  for (int r = 1; r <= k; ++r) {
    m(r - 1, k - r) = (r % 2 == 0) ? 1 : -1;
  }
  return m;
}

}  // namespace

BoundaryPair::BoundaryPair(int n, ComplexMatrix a, ComplexMatrix b)
    : n_(n), a_(std::move(a)), b_(std::move(b)) {
  require_order(n, "BoundaryPair");
  const Eigen::Index k = 2 * static_cast<Eigen::Index>(n);
  if (a_.rows() != k || a_.cols() != k || b_.rows() != k || b_.cols() != k) {
    throw error(errc::dimension_mismatch,
                "BoundaryPair: A and B must both be " + std::to_string(k) +
                    "x" + std::to_string(k));
  }
  require_finite(a_, "BoundaryPair A");
  require_finite(b_, "BoundaryPair B");
}

ComplexMatrix BoundaryPair::joined() const {
  ComplexMatrix ab(size(), 2 * size());
  ab << a_, b_;
  return ab;
}

BoundaryPair BoundaryPair::from_joined(int n, const ComplexMatrix& ab) {
  require_order(n, "BoundaryPair::from_joined");
  const Eigen::Index k = 2 * static_cast<Eigen::Index>(n);
  if (ab.rows() != k || ab.cols() != 2 * k) {
    throw error(errc::dimension_mismatch,
                "BoundaryPair::from_joined: expected a " + std::to_string(k) +
                    "x" + std::to_string(2 * k) + " matrix");
  }
  return BoundaryPair(n, ab.leftCols(k), ab.rightCols(k));
}

SymplecticMatrix build_symplectic(int n) {
  require_order(n, "build_symplectic");
  return {n, signed_antidiagonal(2 * n)};
}

ComplexMatrix build_small_c(int n) {
  require_order(n, "build_small_c");
  return signed_antidiagonal(n).cast<complex>();
}

std::string_view to_string(BCTag tag) noexcept {
  switch (tag) {
    case BCTag::separated: return "separated";
    case BCTag::mixed: return "mixed";
    case BCTag::coupled: return "coupled";
  }
  return "unknown";
}

BCClass BCClass::from_rank(int n, int r) {
  if (r < 0 || r > n) {
    throw error(errc::invalid_spec, "BCClass: coupling rank out of range");
  }
  if (r == 0) return {BCTag::separated, 0};
  if (r == n) return {BCTag::coupled, r};
  return {BCTag::mixed, r};
}

double selfadjoint_residual(const BoundaryPair& bc) {
  const ComplexMatrix c = build_symplectic(bc.n()).as_complex();
  const ComplexMatrix& a = bc.a();
  const ComplexMatrix& b = bc.b();
  const double diff =
      (a * c * a.adjoint() - b * c * b.adjoint()).norm();
  return diff / (a.squaredNorm() + b.squaredNorm() + 1.0);
}

bool is_selfadjoint(const BoundaryPair& bc, double tol) {
  if (rank_with_tol(bc.joined(), tol) !=
      static_cast<std::size_t>(bc.size())) {
    return false;
  }
  return selfadjoint_residual(bc) <= tol;
}

RankReport check_rank_theorem(const BoundaryPair& bc, double tol) {
  if (!is_selfadjoint(bc, tol)) {
    throw error(errc::not_self_adjoint,
                "check_rank_theorem: boundary pair is not self-adjoint");
  }
  RankReport rep{rank_with_tol(bc.a(), tol), rank_with_tol(bc.b(), tol), false};
  const auto n = static_cast<std::size_t>(bc.n());
  rep.ok = rep.rank_a == rep.rank_b && rep.rank_a >= n && rep.rank_a <= 2 * n;
  return rep;
}

BoundaryPair row_transform(const BoundaryPair& bc, const ComplexMatrix& g,
                           double tol) {
  require_finite(g, "row_transform");
  if (g.rows() != bc.size() || g.cols() != bc.size()) {
    throw error(errc::dimension_mismatch,
                "row_transform: transform must match the pair's row count");
  }
  if (rank_with_tol(g, tol) != static_cast<std::size_t>(bc.size())) {
    throw error(errc::singular_transform, "row_transform: singular transform");
  }
  return BoundaryPair(bc.n(), g * bc.a(), g * bc.b());
}

namespace {

// Orthogonal projector onto the row space of a full-row-rank matrix.
ComplexMatrix row_projector(const ComplexMatrix& x) {
  const SvdResult f = svd(x);
  const ComplexMatrix basis = f.right.leftCols(x.rows());
  return basis * basis.adjoint();
}

}  // namespace

double row_space_distance(const BoundaryPair& lhs, const BoundaryPair& rhs) {
  if (lhs.n() != rhs.n()) {
    throw error(errc::dimension_mismatch,
                "row_space_distance: pairs of different order");
  }
  return (row_projector(lhs.joined()) - row_projector(rhs.joined())).norm();
}

bool row_equivalent(const BoundaryPair& lhs, const BoundaryPair& rhs,
                    double tol) {
  if (lhs.n() != rhs.n()) return false;
  const auto k = static_cast<std::size_t>(lhs.size());
  if (rank_with_tol(lhs.joined(), tol) != k ||
      rank_with_tol(rhs.joined(), tol) != k) {
    return false;
  }
  return row_space_distance(lhs, rhs) <= tol;
}

}  // namespace sabc
