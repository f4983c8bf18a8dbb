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

#include "sabc/fourth_order.hpp"

#include <cmath>
#include <string>

namespace sabc::hsz {

namespace {

constexpr complex i_unit{0.0, 1.0};

ComplexMatrix hermitian2(double d1, complex off, double d2) {
  ComplexMatrix m(2, 2);
  m << d1, std::conj(off), off, d2;
  return m;
}

ComplexMatrix eye(Eigen::Index k) { return ComplexMatrix::Identity(k, k); }

ComplexMatrix zero2() { return ComplexMatrix::Zero(2, 2); }

void require_hermitian(const ComplexMatrix& m, double tol, const char* what) {
  require_finite(m, what);
  if (!is_hermitian(m, tol)) {
    throw error(errc::not_hermitian, std::string(what) + ": not Hermitian");
  }
}

void require_invertible_a21(const ComplexMatrix& a21, double tol) {
  require_finite(a21, "A21");
  require_square(a21, "A21");
  if (!(std::abs(a21.determinant()) > tol)) {
    throw error(errc::singular_a21, "A21 is singular");
  }
}

// [[A11, C2, -A21^*, 0], [A21, 0, B21, C2]]; A21 = 0 gives the separated
// layout.
BoundaryPair fourth_order_pair(const ComplexMatrix& a11,
                               const ComplexMatrix& a21,
                               const ComplexMatrix& b21) {
  const ComplexMatrix c2 = build_small_c(2);
  ComplexMatrix a(4, 4);
  a << a11, c2, a21, zero2();
  ComplexMatrix b(4, 4);
  b << -a21.adjoint(), zero2(), b21, c2;
  return BoundaryPair(2, a, b);
}

// u from (A : B) = u M D Z using M M^* = 2 I, then a residual check.
void recover_row_factor(CanonicalForm& cf, const BoundaryPair& target,
                        double tol) {
  const ComplexMatrix m = cs_core(cf.cosines, cf.sines);
  cf.u = 0.5 * target.joined() * build_z(cf.n).z.adjoint() *
         unitary_factor(cf).adjoint() * m.adjoint();
  const double residual = roundtrip_residual(target, cf);
  if (!(residual <= tol)) {
    throw error(errc::reconstruction_failure,
                "fourth-order conversion does not reproduce the pair "
                "(residual " + std::to_string(residual) + ")");
  }
}

}  // namespace

ComplexMatrix Separated::a11() const { return hermitian2(r1, a21, r2); }
ComplexMatrix Separated::b21() const { return hermitian2(r3, b41, r4); }

ComplexMatrix Coupled::a11() const { return hermitian2(r1, a21, r2); }
ComplexMatrix Coupled::b21() const { return hermitian2(r3, b41, r4); }
ComplexMatrix Coupled::a21_block() const {
  ComplexMatrix m(2, 2);
  m << a31, a32, a41, a42;
  return m;
}

Coupled Mixed::as_coupled_layout() const {
  return {r1, r2, r3, r4, a21, b41, a31, a32, z * a31, z * a32};
}

BoundaryPair separated_pair(const Separated& p) {
  return fourth_order_pair(p.a11(), zero2(), p.b21());
}

BoundaryPair mixed_pair(const Mixed& p) {
  const Coupled c = p.as_coupled_layout();
  return fourth_order_pair(c.a11(), c.a21_block(), c.b21());
}

BoundaryPair coupled_pair(const Coupled& p, double tol) {
  require_invertible_a21(p.a21_block(), tol);
  return fourth_order_pair(p.a11(), p.a21_block(), p.b21());
}

ComplexMatrix cayley_from_hermitian(const ComplexMatrix& h, double tol) {
  require_hermitian(h, tol, "cayley_from_hermitian");
  const ComplexMatrix id = eye(h.rows());
  // (h + iI)^{-1} and (h - iI) commute, so either order works.
  return (h + i_unit * id).partialPivLu().solve(h - i_unit * id);
}

ComplexMatrix hermitian_from_cayley(const ComplexMatrix& w, double tol) {
  require_finite(w, "hermitian_from_cayley");
  if (!is_unitary(w, tol)) {
    throw error(errc::not_unitary, "hermitian_from_cayley: not unitary");
  }
  const ComplexMatrix id = eye(w.rows());
  const ComplexMatrix shifted = w - id;
  const RealVector sv = singular_values(shifted);
  if (sv(sv.size() - 1) <= tol) {
    throw error(errc::unit_eigenvalue,
                "hermitian_from_cayley: 1 is an eigenvalue; no Hermitian "
                "preimage exists");
  }
  return -i_unit * shifted.partialPivLu().solve(w + id);
}

KMatrices kmatrices(const ComplexMatrix& a11, const ComplexMatrix& a21,
                    const ComplexMatrix& b21, double tol) {
  require_hermitian(a11, tol, "kmatrices A11");
  require_hermitian(b21, tol, "kmatrices B21");
  require_invertible_a21(a21, tol);
  if (a11.rows() != a21.rows() || b21.rows() != a21.rows()) {
    throw error(errc::dimension_mismatch, "kmatrices: block sizes differ");
  }
  const ComplexMatrix id = eye(a21.rows());
  const ComplexMatrix a11_p = a11 + i_unit * id;
  const ComplexMatrix a11_m = a11 - i_unit * id;
  const ComplexMatrix b21_p = b21 + i_unit * id;
  const ComplexMatrix b21_m = b21 - i_unit * id;
  const ComplexMatrix a21_h = a21.adjoint();
  // (A21^*)^{-1} X and A21^{-1} X as solves.
  const auto lu_h = a21_h.partialPivLu();
  const auto lu = a21.partialPivLu();
  const complex half_i = 0.5 * i_unit;

  KMatrices k;
  k.k11 = half_i * (b21_p * lu_h.solve(a11_p) + a21);
  k.k12 = half_i * (b21_p * lu_h.solve(a11_m) + a21);
  k.k23 = -half_i * (a11_m * lu.solve(b21_p) + a21_h);
  k.k24 = -half_i * (a11_m * lu.solve(b21_m) + a21_h);
  return k;
}

CanonicalForm separated_to_cs(const Separated& p, double tol) {
  const ComplexMatrix a11 = p.a11();
  const ComplexMatrix b21 = p.b21();
  CanonicalForm cf;
  cf.n = 2;
  cf.cosines = RealVector::Ones(2);
  cf.sines = RealVector::Zero(2);
  // v1^* u1^* = cayley(A11) and u2 v2 = cayley(B21); the remaining freedom is
  // fixed by v1 = u2 = I.
  cf.v1 = eye(2);
  cf.u1 = cayley_from_hermitian(a11, tol).adjoint();
  cf.u2 = eye(2);
  cf.v2 = cayley_from_hermitian(b21, tol);
  recover_row_factor(cf, separated_pair(p), tol);
  return cf;
}

CanonicalForm coupled_to_cs(const Coupled& p, double tol) {
  const BoundaryPair target = coupled_pair(p, tol);
  const KMatrices k = kmatrices(p.a11(), p.a21_block(), p.b21(), tol);

  // K11 = v2^* S^{-1} C v1, so its singular values are the cotangents c/s.
  const SvdResult f = svd(k.k11);
  const RealVector& cot = f.singular_values;
  const RealVector secant = (1.0 + cot.array().square()).sqrt();

  CanonicalForm cf;
  cf.n = 2;
  cf.cosines = cot.array() / secant.array();
  cf.sines = secant.cwiseInverse();
  cf.v2 = f.left.adjoint();
  cf.v1 = f.right.adjoint();
  const ComplexMatrix s = cf.sines.cast<complex>().asDiagonal();
  // K12 = v2^* S^{-1} u1^* and K23 = v1^* S^{-1} u2^*
  cf.u1 = (s * cf.v2 * k.k12).adjoint();
  cf.u2 = (s * cf.v1 * k.k23).adjoint();
  recover_row_factor(cf, target, tol);
  return cf;
}

}  // namespace sabc::hsz
