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

#include "sabc/canonical.hpp"

#include <cmath>
#include <string>

namespace sabc {

namespace {

constexpr double eigen_equation_bound = 1e-10;

// (-1)^(n+1) i
complex z_phase(int n) {
  return n % 2 == 1 ? complex(0.0, 1.0) : complex(0.0, -1.0);
}

ComplexMatrix identity(Eigen::Index k) {
  return ComplexMatrix::Identity(k, k);
}

}  // namespace

EigenBasis build_eigenbasis(int n) {
  const ComplexMatrix c = build_small_c(n);
  const Eigen::Index k = n;
  const double scale = 1.0 / std::sqrt(2.0);

  ComplexMatrix v_plus(2 * k, k);
  v_plus << identity(k), z_phase(n) * c;
  v_plus *= scale;
  ComplexMatrix v_minus(2 * k, k);
  v_minus << identity(k), -z_phase(n) * c;
  v_minus *= scale;

  EigenBasis basis{n, ComplexMatrix::Zero(4 * k, 4 * k)};
  auto& v = basis.v;
  v.block(0, 0, 2 * k, k) = v_plus;
  v.block(2 * k, k, 2 * k, k) = v_minus;
  v.block(0, 2 * k, 2 * k, k) = v_minus;
  v.block(2 * k, 3 * k, 2 * k, k) = v_plus;

  if (eigen_equation_residual(basis) > eigen_equation_bound) {
    throw error(errc::eigen_equation_failure,
                "build_eigenbasis: eigen-relation violated for n = " +
                    std::to_string(n));
  }
  return basis;
}

double eigen_equation_residual(const EigenBasis& basis) {
  const Eigen::Index k = 2 * static_cast<Eigen::Index>(basis.n);
  const ComplexMatrix c = build_symplectic(basis.n).as_complex();
  ComplexMatrix j = ComplexMatrix::Zero(2 * k, 2 * k);
  j.topLeftCorner(k, k) = c;
  j.bottomRightCorner(k, k) = -c;
  Eigen::VectorXcd eig(2 * k);
  eig.head(k).setConstant(complex(0.0, 1.0));
  eig.tail(k).setConstant(complex(0.0, -1.0));
  return (j * basis.v - basis.v * eig.asDiagonal()).norm();
}

ZMatrix build_z(int n) {
  const ComplexMatrix c = build_small_c(n);
  const Eigen::Index k = n;
  const ComplexMatrix id = identity(k);

  ComplexMatrix h(2 * k, 2 * k);
  h << id, id, id, -id;
  ComplexMatrix phase = ComplexMatrix::Zero(2 * k, 2 * k);
  phase.topLeftCorner(k, k) = id;
  phase.bottomRightCorner(k, k) = z_phase(n) * c;
  const ComplexMatrix z0 = h * phase / std::sqrt(2.0);

  ZMatrix out{n, ComplexMatrix::Zero(4 * k, 4 * k)};
  out.z.topLeftCorner(2 * k, 2 * k) = z0;
  out.z.bottomRightCorner(2 * k, 2 * k) = z0;
  return out;
}

ComplexMatrix cs_core(const RealVector& cosines, const RealVector& sines) {
  const Eigen::Index k = cosines.size();
  const ComplexMatrix c = cosines.cast<complex>().asDiagonal();
  const ComplexMatrix s = sines.cast<complex>().asDiagonal();
  const ComplexMatrix zero = ComplexMatrix::Zero(k, k);
  ComplexMatrix m(2 * k, 4 * k);
  m << c, identity(k), zero, s,
      -s, zero, identity(k), c;
  return m;
}

ComplexMatrix unitary_factor(const CanonicalForm& cf) {
  const Eigen::Index k = cf.n;
  ComplexMatrix d = ComplexMatrix::Zero(4 * k, 4 * k);
  d.block(0, 0, k, k) = cf.v1;
  d.block(k, k, k, k) = cf.u1.adjoint();
  d.block(2 * k, 2 * k, k, k) = cf.u2.adjoint();
  d.block(3 * k, 3 * k, k, k) = cf.v2;
  return d;
}

ComplexMatrix coupling_unitary(const BoundaryPair& bc, double tol) {
  const Eigen::Index k = bc.size();
  const ComplexMatrix cd = bc.joined() * build_eigenbasis(bc.n()).v;
  const ComplexMatrix cm = cd.leftCols(k);
  const ComplexMatrix dm = cd.rightCols(k);

  // (A : B) diag(C, -C) (A : B)^* = i (Cm Cm^* - Dm Dm^*)
  const double split = (cm * cm.adjoint() - dm * dm.adjoint()).norm() /
                       (cm.squaredNorm() + dm.squaredNorm() + 1.0);
  if (split > tol) {
    throw error(errc::not_self_adjoint,
                "coupling_unitary: eigenspace components have unequal Gram "
                "matrices");
  }

  const SvdResult f = svd(cm);
  const RealVector& sigma = f.singular_values;
  if (sigma(k - 1) <= tol * std::max(1.0, sigma(0))) {
    throw error(errc::rank_deficient,
                "coupling_unitary: +i component of (A : B) is singular");
  }
  ComplexMatrix w = f.right * sigma.cwiseInverse().cast<complex>().asDiagonal() *
                    f.left.adjoint() * dm;
  w = nearest_unitary(w);

  // For even n the eigenbasis yields Z with +i C_n while the canonical Z
  // carries -i C_n; swapping the roles of the two block columns is the same
  // as taking the adjoint.
  if (bc.n() % 2 == 0) w.adjointInPlace();
  return w;
}

CanonicalForm decompose(const BoundaryPair& bc, double tol) {
  if (!is_selfadjoint(bc, tol)) {
    throw error(errc::not_self_adjoint,
                "decompose: boundary pair is not self-adjoint");
  }
  const int n = bc.n();
  const CsDecomposition cs = cs_decompose(coupling_unitary(bc, tol), n, tol);

  CanonicalForm cf{n, {}, cs.cosines, cs.sines, cs.u1, cs.u2, cs.v1, cs.v2};
  // M M^* = 2 I, so M^* / 2 is a right inverse of the middle factor.
  const ComplexMatrix m = cs_core(cf.cosines, cf.sines);
  cf.u = 0.5 * bc.joined() * build_z(n).z.adjoint() *
         unitary_factor(cf).adjoint() * m.adjoint();

  const double residual = roundtrip_residual(bc, cf);
  if (!(residual <= tol)) {
    throw error(errc::reconstruction_failure,
                "decompose: reconstruction residual " +
                    std::to_string(residual) + " exceeds tolerance");
  }
  return cf;
}

BoundaryPair reconstruct(const CanonicalForm& cf) {
  const ComplexMatrix ab = cf.u * cs_core(cf.cosines, cf.sines) *
                           unitary_factor(cf) * build_z(cf.n).z;
  return BoundaryPair::from_joined(cf.n, ab);
}

double roundtrip_residual(const BoundaryPair& bc, const CanonicalForm& cf) {
  const ComplexMatrix ab = bc.joined();
  return (ab - reconstruct(cf).joined()).norm() / ab.norm();
}

BCClass class_of(const CanonicalForm& cf, double tol) {
  const auto r = static_cast<int>((cf.sines.array() > tol).count());
  return BCClass::from_rank(cf.n, r);
}

BCClass classify(const BoundaryPair& bc, double tol) {
  if (!is_selfadjoint(bc, tol)) {
    throw error(errc::not_self_adjoint,
                "classify: boundary pair is not self-adjoint");
  }
  const CsDecomposition cs = cs_decompose(coupling_unitary(bc, tol), bc.n(), tol);
  const auto r = static_cast<int>((cs.sines.array() > tol).count());
  return BCClass::from_rank(bc.n(), r);
}

}  // namespace sabc
