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

#include <Eigen/Dense>

#include <complex>
#include <string>

#include "sabc/error.hpp"

namespace sabc {

using complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Library-wide default for every tolerance-taking predicate.
inline constexpr double default_tol = 1e-9;

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (!m.allFinite()) {
    throw error(errc::non_finite, std::string(what) + ": non-finite entry");
  }
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw error(errc::not_square,
                std::string(what) + ": expected a square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

/// Thin SVD of a dense complex matrix, m = left * diag(singular_values) * right^*.
/// Both factors are square and unitary; singular values are non-increasing.
struct SvdResult {
  ComplexMatrix left;
  RealVector singular_values;
  ComplexMatrix right;

  ComplexMatrix reconstruct() const;
};

SvdResult svd(const ComplexMatrix& m);

/// Singular values only, non-increasing.
RealVector singular_values(const ComplexMatrix& m);

/// Number of singular values above tol * max(1, largest singular value).
std::size_t rank_with_tol(const ComplexMatrix& m, double tol = default_tol);

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol = default_tol) {
  require_square(m, "is_unitary");
  using Plain = typename Derived::PlainObject;
  const Plain id = Plain::Identity(m.rows(), m.cols());
  return (m * m.adjoint() - id).norm() <= tol;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m,
                  double tol = default_tol) {
  require_square(m, "is_hermitian");
  return (m - m.adjoint()).norm() <= tol;
}

/// Balanced 2x2-block CS decomposition of a 2n x 2n unitary
///
///   w = diag(u1, u2) * [[C, S], [-S, C]] * diag(v1, v2)
///
/// with C = diag(cosines) non-increasing and S = diag(sines) non-decreasing.
struct CsDecomposition {
  ComplexMatrix u1, u2, v1, v2;
  RealVector cosines, sines;

  Eigen::Index half() const { return cosines.size(); }
  ComplexMatrix reconstruct() const;
};

/// Relative tolerance under which two cosines are treated as one cluster.
inline constexpr double cs_cluster_tol = 1e-8;

CsDecomposition cs_decompose(const ComplexMatrix& w, Eigen::Index n,
                             double tol = default_tol);

/// Closest unitary in Frobenius norm (polar factor of m).
ComplexMatrix nearest_unitary(const ComplexMatrix& m);

}  // namespace sabc
