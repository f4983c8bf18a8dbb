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

// Bridges between the Hao-Sun-Zettl parameterization of fourth-order
// self-adjoint boundary conditions and the CS canonical form, with both row
// normalizations fixed to the identity.

#pragma once

#include "sabc/boundary.hpp"
#include "sabc/canonical.hpp"

namespace sabc::hsz {

/// Separated form: A11 = [[r1, conj(a21)], [a21, r2]] and
/// B21 = [[r3, conj(b41)], [b41, r4]], both Hermitian by construction.
struct Separated {
  double r1 = 0, r2 = 0, r3 = 0, r4 = 0;
  complex a21{}, b41{};

  ComplexMatrix a11() const;
  ComplexMatrix b21() const;
};

/// Coupled form; additionally A21 = [[a31, a32], [a41, a42]], non-singular.
struct Coupled {
  double r1 = 0, r2 = 0, r3 = 0, r4 = 0;
  complex a21{}, b41{};
  complex a31{}, a32{}, a41{}, a42{};

  ComplexMatrix a11() const;
  ComplexMatrix b21() const;
  ComplexMatrix a21_block() const;
};

/// Mixed form: the coupled layout with the rank-one block
/// A21 = [[a31, a32], [z a31, z a32]].
struct Mixed {
  double r1 = 0, r2 = 0, r3 = 0, r4 = 0;
  complex a21{}, b41{};
  complex a31{}, a32{};
  complex z{};

  Coupled as_coupled_layout() const;
};

struct KMatrices {
  ComplexMatrix k11, k12, k23, k24;
};

BoundaryPair separated_pair(const Separated& p);
BoundaryPair mixed_pair(const Mixed& p);
/// Throws singular_a21 when |det A21| <= tol.
BoundaryPair coupled_pair(const Coupled& p, double tol = default_tol);

/// (h - iI)(h + iI)^{-1}; unitary for Hermitian h.
ComplexMatrix cayley_from_hermitian(const ComplexMatrix& h,
                                    double tol = default_tol);

/// -i (w - I)^{-1} (w + I); inverse of cayley_from_hermitian. Throws
/// unit_eigenvalue when w - I has a singular value <= tol.
ComplexMatrix hermitian_from_cayley(const ComplexMatrix& w,
                                    double tol = default_tol);

KMatrices kmatrices(const ComplexMatrix& a11, const ComplexMatrix& a21,
                    const ComplexMatrix& b21, double tol = default_tol);

CanonicalForm separated_to_cs(const Separated& p, double tol = default_tol);
CanonicalForm coupled_to_cs(const Coupled& p, double tol = default_tol);

}  // namespace sabc::hsz
