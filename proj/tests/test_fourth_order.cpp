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

#include <doctest.h>

#include "sabc/fourth_order.hpp"
#include "sabc/generator.hpp"
#include "support.hpp"

using namespace sabc;
using namespace sabc::testing;
using namespace sabc::hsz;

namespace {

complex draw(Rng& rng) {
  std::normal_distribution<double> g;
  const double re = g(rng);
  return {re, g(rng)};
}

double draw_real(Rng& rng) { return std::normal_distribution<double>()(rng); }

Separated random_separated(Rng& rng) {
  return {draw_real(rng), draw_real(rng), draw_real(rng), draw_real(rng),
          draw(rng), draw(rng)};
}

Coupled random_coupled(Rng& rng) {
  Coupled p{draw_real(rng), draw_real(rng), draw_real(rng), draw_real(rng),
            draw(rng), draw(rng), draw(rng), draw(rng), draw(rng), draw(rng)};
  return p;
}

ComplexMatrix diag2(complex x, complex y) {
  ComplexMatrix d = zeros(2, 2);
  d(0, 0) = x;
  d(1, 1) = y;
  return d;
}

}  // namespace

TEST_SUITE("hsz pairs") {
  TEST_CASE("separated, all parameters zero") {
    const BoundaryPair bc = separated_pair({});
    ComplexMatrix a = zeros(4, 4), b = zeros(4, 4);
    a(0, 3) = -1.0;
    a(1, 2) = 1.0;
    b(2, 3) = -1.0;
    b(3, 2) = 1.0;
    CHECK(bc.a() == a);
    CHECK(bc.b() == b);
    CHECK(is_selfadjoint(bc));
    CHECK(classify(bc).tag == BCTag::separated);
  }

  TEST_CASE("separated examples") {
    Separated p;
    p.r1 = 1.0;
    CHECK(is_selfadjoint(separated_pair(p)));
    CHECK(classify(separated_pair(p)).tag == BCTag::separated);
    Separated q;
    q.a21 = I;
    CHECK(is_hermitian(q.a11(), 0.0));
    CHECK(is_selfadjoint(separated_pair(q)));
  }

  TEST_CASE("coupled examples") {
    Coupled p;
    p.a31 = p.a42 = 1.0;
    CHECK(is_selfadjoint(coupled_pair(p)));
    const CanonicalForm cf = decompose(coupled_pair(p));
    CHECK(max_abs_diff(cf.sines, RealVector::Ones(2)) <= 1e-12);
    p.a31 = p.a42 = 2.0;
    CHECK(classify(coupled_pair(p)) == BCClass{BCTag::coupled, 2});
  }

  TEST_CASE("singular coupling block") {
    Coupled p;
    p.a31 = 1.0;
    p.a32 = 2.0;
    p.a41 = 2.0;
    p.a42 = 4.0;
    try {
      (void)coupled_pair(p);
      FAIL("expected SingularA21");
    } catch (const error& e) {
      CHECK(e.code() == errc::singular_a21);
    }
  }

  TEST_CASE("mixed pairs have coupling rank one") {
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
      const Mixed m{draw_real(rng), draw_real(rng), draw_real(rng), draw_real(rng),
                    draw(rng), draw(rng), draw(rng), draw(rng), draw(rng)};
      const BoundaryPair bc = mixed_pair(m);
      CHECK(is_selfadjoint(bc));
      CHECK(classify(bc) == BCClass{BCTag::mixed, 1});
    }
  }
}

TEST_SUITE("cayley") {
  TEST_CASE("examples") {
    ComplexMatrix zero1 = zeros(1, 1);
    CHECK((cayley_from_hermitian(zero1) + eye(1)).norm() <= 1e-15);
    CHECK((cayley_from_hermitian(eye(2)) + I * eye(2)).norm() <= 1e-15);
    CHECK((cayley_from_hermitian(diag2(1.0, -1.0)) - diag2(-I, I)).norm() <= 1e-15);
    CHECK(hermitian_from_cayley(-eye(1)).norm() <= 1e-15);
    CHECK((hermitian_from_cayley(-I * eye(2)) - eye(2)).norm() <= 1e-15);
  }

  TEST_CASE("involution and unitarity") {
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
      const Eigen::Index k = 1 + trial % 6;
      ComplexMatrix h = random_hermitian(k, rng);
      const double nrm = h.operatorNorm();
      if (nrm > 10.0) h *= 10.0 / nrm;
      const ComplexMatrix w = cayley_from_hermitian(h);
      CHECK(is_unitary(w, 1e-10));
      CHECK((hermitian_from_cayley(w) - h).norm() <= 1e-10);
    }
  }

  TEST_CASE("errors") {
    ComplexMatrix skew(2, 2);
    skew << 0, 1, -1, 0;
    try {
      (void)cayley_from_hermitian(skew);
      FAIL("expected NotHermitian");
    } catch (const error& e) {
      CHECK(e.code() == errc::not_hermitian);
    }
    try {
      (void)hermitian_from_cayley(eye(2));
      FAIL("expected UnitEigenvalue");
    } catch (const error& e) {
      CHECK(e.code() == errc::unit_eigenvalue);
    }
    try {
      (void)hermitian_from_cayley(diag2(1.0, -1.0));
      FAIL("expected UnitEigenvalue");
    } catch (const error& e) {
      CHECK(e.code() == errc::unit_eigenvalue);
    }
    try {
      (void)hermitian_from_cayley(2.0 * eye(2));
      FAIL("expected NotUnitary");
    } catch (const error& e) {
      CHECK(e.code() == errc::not_unitary);
    }
  }
}

TEST_SUITE("kmatrices") {
  TEST_CASE("a21 = I, rest zero") {
    const KMatrices k = kmatrices(zeros(2, 2), eye(2), zeros(2, 2));
    CHECK(k.k11.norm() <= 1e-15);
    CHECK(k.k24.norm() <= 1e-15);
    CHECK((k.k12 - I * eye(2)).norm() <= 1e-15);
    CHECK((k.k12 * k.k12.adjoint() - k.k11 * k.k24 - eye(2)).norm() <= 1e-15);
  }

  TEST_CASE("a21 = 2I, rest zero") {
    const KMatrices k = kmatrices(zeros(2, 2), 2.0 * eye(2), zeros(2, 2));
    // (i/2)[(iI)(I/2)(iI) + 2I] = (i/2)(3/2) I
    CHECK((k.k11 - 0.75 * I * eye(2)).norm() <= 1e-15);
    CHECK((k.k12 * k.k12.adjoint() - k.k11 * k.k24 - eye(2)).norm() <= 1e-10);
    CHECK((k.k23 * k.k23.adjoint() - k.k24 * k.k11 - eye(2)).norm() <= 1e-10);
  }

  TEST_CASE("identities on random triples") {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
      const ComplexMatrix a11 = random_hermitian(2, rng);
      const ComplexMatrix b21 = random_hermitian(2, rng);
      const ComplexMatrix a21 = random_invertible(2, rng, 1e3);
      const KMatrices k = kmatrices(a11, a21, b21);
      CHECK((k.k24 - k.k11.adjoint()).norm() <= 1e-12);
      CHECK((k.k12 * k.k12.adjoint() - k.k11 * k.k24 - eye(2)).norm() <= 1e-10);
      CHECK((k.k23 * k.k23.adjoint() - k.k24 * k.k11 - eye(2)).norm() <= 1e-10);
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS((void)kmatrices(zeros(2, 2), zeros(2, 2), zeros(2, 2)), error);
    ComplexMatrix skew(2, 2);
    skew << 0, 1, -1, 0;
    try {
      (void)kmatrices(skew, eye(2), zeros(2, 2));
      FAIL("expected NotHermitian");
    } catch (const error& e) {
      CHECK(e.code() == errc::not_hermitian);
    }
  }
}

TEST_SUITE("to_cs") {
  TEST_CASE("separated, all zero") {
    const CanonicalForm cf = separated_to_cs({});
    CHECK(cf.sines.norm() == 0.0);
    CHECK(((cf.v1.adjoint() * cf.u1.adjoint()) + eye(2)).norm() <= 1e-15);
    CHECK(row_equivalent(reconstruct(cf), separated_pair({})));
  }

  TEST_CASE("separated with A11 = I") {
    Separated p;
    p.r1 = p.r2 = 1.0;
    const CanonicalForm cf = separated_to_cs(p);
    CHECK(((cf.v1.adjoint() * cf.u1.adjoint()) + I * eye(2)).norm() <= 1e-15);
    CHECK(row_equivalent(reconstruct(cf), separated_pair(p)));
  }

  TEST_CASE("coupled with A21 = I") {
    Coupled p;
    p.a31 = p.a42 = 1.0;
    const CanonicalForm cf = coupled_to_cs(p);
    CHECK(cf.cosines.norm() <= 1e-12);
    CHECK(max_abs_diff(cf.sines, RealVector::Ones(2)) <= 1e-12);
    CHECK(row_equivalent(reconstruct(cf), coupled_pair(p)));
  }

  TEST_CASE("agreement with the general pipeline") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
      const Separated s = random_separated(rng);
      const BoundaryPair sp = separated_pair(s);
      const CanonicalForm direct = separated_to_cs(s);
      CHECK(max_abs_diff(decompose(sp).sines, direct.sines) <= 1e-9);
      CHECK(classify(sp).tag == BCTag::separated);
      CHECK(row_equivalent(reconstruct(direct), sp));

      const Coupled c = random_coupled(rng);
      const BoundaryPair cp = coupled_pair(c);
      const CanonicalForm cdirect = coupled_to_cs(c);
      CHECK(max_abs_diff(decompose(cp).sines, cdirect.sines) <= 1e-9);
      CHECK(classify(cp).tag == BCTag::coupled);
      CHECK(class_of(cdirect) == classify(cp));
      CHECK(row_equivalent(reconstruct(cdirect), cp));
    }
  }
}
