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

#include "sabc/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace sabc {

std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::non_finite: return "NonFinite";
    case errc::not_square: return "NotSquare";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_unitary: return "NotUnitary";
    case errc::not_hermitian: return "NotHermitian";
    case errc::degenerate_cluster_failure: return "DegenerateClusterFailure";
    case errc::invalid_order: return "InvalidOrder";
    case errc::not_self_adjoint: return "NotSelfAdjoint";
    case errc::singular_transform: return "SingularTransform";
    case errc::eigen_equation_failure: return "EigenEquationFailure";
    case errc::rank_deficient: return "RankDeficient";
    case errc::reconstruction_failure: return "ReconstructionFailure";
    case errc::unit_eigenvalue: return "UnitEigenvalue";
    case errc::singular_a21: return "SingularA21";
    case errc::invalid_spec: return "InvalidSpec";
  }
  return "Unknown";
}

ComplexMatrix SvdResult::reconstruct() const {
  const auto k = singular_values.size();
  return left.leftCols(k) * singular_values.cast<complex>().asDiagonal() *
         right.leftCols(k).adjoint();
}

SvdResult svd(const ComplexMatrix& m) {
  require_finite(m, "svd");
  Eigen::JacobiSVD<ComplexMatrix> jsvd(m,
                                       Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {jsvd.matrixU(), jsvd.singularValues(), jsvd.matrixV()};
}

RealVector singular_values(const ComplexMatrix& m) {
  require_finite(m, "singular_values");
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
}

std::size_t rank_with_tol(const ComplexMatrix& m, double tol) {
  const RealVector sv = singular_values(m);
  if (sv.size() == 0) return 0;
  const double threshold = tol * std::max(1.0, sv(0));
  return static_cast<std::size_t>((sv.array() > threshold).count());
}

ComplexMatrix nearest_unitary(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> jsvd(m,
                                       Eigen::ComputeThinU | Eigen::ComputeThinV);
  return jsvd.matrixU() * jsvd.matrixV().adjoint();
}

ComplexMatrix CsDecomposition::reconstruct() const {
  const Eigen::Index n = half();
  const ComplexMatrix c = cosines.cast<complex>().asDiagonal();
  const ComplexMatrix s = sines.cast<complex>().asDiagonal();
  ComplexMatrix w(2 * n, 2 * n);
  w.topLeftCorner(n, n) = u1 * c * v1;
  w.topRightCorner(n, n) = u1 * s * v2;
  w.bottomLeftCorner(n, n) = -u2 * s * v1;
  w.bottomRightCorner(n, n) = u2 * c * v2;
  return w;
}

namespace {

// Forces c^2 + s^2 = 1 using whichever of the pair is known to full
// absolute accuracy, then restores the monotone ordering that rounding may
// have broken inside ties.
void reconcile_angles(RealVector& c, RealVector& s) {
  const Eigen::Index n = c.size();
  for (Eigen::Index j = 0; j < n; ++j) {
    c(j) = std::clamp(c(j), 0.0, 1.0);
    s(j) = std::clamp(s(j), 0.0, 1.0);
    if (c(j) >= s(j)) {
      c(j) = std::sqrt(1.0 - s(j) * s(j));
    } else {
      s(j) = std::sqrt(1.0 - c(j) * c(j));
    }
  }
  for (Eigen::Index j = 1; j < n; ++j) {
    c(j) = std::min(c(j), c(j - 1));
    s(j) = std::max(s(j), s(j - 1));
  }
}

}  // namespace

CsDecomposition cs_decompose(const ComplexMatrix& w, Eigen::Index n,
                             double tol) {
  require_finite(w, "cs_decompose");
  require_square(w, "cs_decompose");
  if (n < 1) throw error(errc::invalid_order, "cs_decompose: n must be >= 1");
  if (w.rows() != 2 * n) {
    throw error(errc::dimension_mismatch,
                "cs_decompose: expected a " + std::to_string(2 * n) + "x" +
                    std::to_string(2 * n) + " matrix");
  }
  const double defect =
      (w * w.adjoint() - ComplexMatrix::Identity(2 * n, 2 * n)).norm();
  if (defect > tol) {
    throw error(errc::not_unitary, "cs_decompose: input is not unitary");
  }

  const ComplexMatrix w1 = w.topLeftCorner(n, n);
  const ComplexMatrix w2 = w.topRightCorner(n, n);
  const ComplexMatrix w3 = w.bottomLeftCorner(n, n);
  const ComplexMatrix w4 = w.bottomRightCorner(n, n);

  CsDecomposition cs;
  Eigen::JacobiSVD<ComplexMatrix> svd1(w1,
                                       Eigen::ComputeFullU | Eigen::ComputeFullV);
  cs.u1 = svd1.matrixU();
  cs.v1 = svd1.matrixV().adjoint();
  cs.cosines = svd1.singularValues();

  // w3 v1^* = -u2 S has orthogonal columns. Pivoting takes the large columns
  // first so that near-zero ones cannot contaminate the leading directions.
  const ComplexMatrix t = w3 * cs.v1.adjoint();
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(t);
  const ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r =
      qr.matrixQR().topRows(n).template triangularView<Eigen::Upper>();
  const auto& perm = qr.colsPermutation().indices();
  cs.u2.resize(n, n);
  cs.sines.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index j = perm(k);
    const double mag = std::abs(r(k, k));
    const complex phase = mag > 0.0 ? r(k, k) / mag : complex(1.0, 0.0);
    cs.u2.col(j) = -q.col(k) * phase;
    cs.sines(j) = mag;
  }

  reconcile_angles(cs.cosines, cs.sines);

  // u1^* w2 = S v2 and u2^* w4 = C v2, so S u1^* w2 + C u2^* w4 = v2 with no
  // division by a small angle.
  const ComplexMatrix c = cs.cosines.cast<complex>().asDiagonal();
  const ComplexMatrix s = cs.sines.cast<complex>().asDiagonal();
  cs.v2 = s * (cs.u1.adjoint() * w2) + c * (cs.u2.adjoint() * w4);

  // Re-orthonormalize v2 one cosine cluster at a time. Inside a cluster the
  // rows are only defined up to the joint gauge of u1/v1, so this is the
  // only place rounding can accumulate.
  Eigen::Index begin = 0;
  while (begin < n) {
    Eigen::Index end = begin + 1;
    while (end < n &&
           std::abs(cs.cosines(end) - cs.cosines(begin)) <= cs_cluster_tol) {
      ++end;
    }
    const ComplexMatrix block = cs.v2.middleRows(begin, end - begin);
    cs.v2.middleRows(begin, end - begin) =
        nearest_unitary(block.adjoint()).adjoint();
    begin = end;
  }

  const double bound = std::max(1e-10 * w.norm(), 10.0 * defect);
  if ((cs.reconstruct() - w).norm() > bound) {
    throw error(errc::degenerate_cluster_failure,
                "cs_decompose: cluster correction did not reach the "
                "reconstruction bound");
  }
  return cs;
}

}  // namespace sabc
