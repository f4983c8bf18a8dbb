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

#include "sabc/boundary.hpp"
#include "sabc/linalg.hpp"

namespace sabc {

/// Unitary 4n x 4n basis diagonalizing diag(C_2n, -C_2n): the first 2n
/// columns span the +i eigenspace, the last 2n the -i eigenspace.
struct EigenBasis {
  int n;
  ComplexMatrix v;
};

/// Builds the basis from the 2n x n blocks
///   V_{+i} = stack(I, (-1)^(n+1) i C_n) / sqrt(2),
///   V_{-i} = stack(I, -(-1)^(n+1) i C_n) / sqrt(2),
/// laid out as [[V_{+i}, 0, V_{-i}, 0], [0, V_{-i}, 0, V_{+i}]].
/// Throws eigen_equation_failure if the eigen-relation does not hold.
EigenBasis build_eigenbasis(int n);

/// Residual of diag(C, -C) v - v diag(iI, -iI).
double eigen_equation_residual(const EigenBasis& basis);

/// Z = blockdiag(H, H) * diag(I, g C_n, I, g C_n) / sqrt(2) with
/// H = [[I, I], [I, -I]] and g = (-1)^(n+1) i. Unitary.
struct ZMatrix {
  int n;
  ComplexMatrix z;
};

ZMatrix build_z(int n);

/// Factors of
///
///   (A : B) = u * [[C, I, 0, S], [-S, 0, I, C]] * diag(v1, u1^*, u2^*, v2) * Z
///
/// with C^2 + S^2 = I, cosines non-increasing and sines non-decreasing.
/// The unitary factors carry gauge freedom when cosines repeat; only the
/// reconstruction and the (cosines, sines) vectors are canonical.
struct CanonicalForm {
  int n;
  ComplexMatrix u;
  RealVector cosines, sines;
  ComplexMatrix u1, u2, v1, v2;
};

/// The 2n x 4n middle factor [[C, I, 0, S], [-S, 0, I, C]].
ComplexMatrix cs_core(const RealVector& cosines, const RealVector& sines);

/// diag(v1, u1^*, u2^*, v2).
ComplexMatrix unitary_factor(const CanonicalForm& cf);

/// The unitary handed to the CS step, built from (A : B) through the
/// eigenbasis. For separated conditions it is block diagonal.
ComplexMatrix coupling_unitary(const BoundaryPair& bc,
                               double tol = default_tol);

CanonicalForm decompose(const BoundaryPair& bc, double tol = default_tol);

BoundaryPair reconstruct(const CanonicalForm& cf);

/// |(A : B) - reconstruct(cf)|_F / |(A : B)|_F.
double roundtrip_residual(const BoundaryPair& bc, const CanonicalForm& cf);

/// r counts the sines above tol.
BCClass classify(const BoundaryPair& bc, double tol = default_tol);

BCClass class_of(const CanonicalForm& cf, double tol = default_tol);

}  // namespace sabc
