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

#include "sabc/generator.hpp"

#include <algorithm>
#include <cmath>

namespace sabc {

ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  // Explicit loop order keeps the draw sequence independent of Eigen's
  // traversal strategy.
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = complex(re, im);
    }
  }
  return m;
}

ComplexMatrix random_unitary(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ComplexMatrix random_unitary(Eigen::Index n, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(n, rng);
}

ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng, double scale) {
  const ComplexMatrix g = random_gaussian(n, n, rng);
  return scale * 0.5 * (g + g.adjoint());
}

ComplexMatrix random_invertible(Eigen::Index n, Rng& rng,
                                double max_condition) {
  while (true) {
    ComplexMatrix g = random_gaussian(n, n, rng);
    const RealVector sv = singular_values(g);
    if (sv(n - 1) > 0.0 && sv(0) / sv(n - 1) <= max_condition) return g;
  }
}

RealVector draw_sines(const GenSpec& spec, Rng& rng) {
  const int n = spec.n;
  if (n < 1) throw error(errc::invalid_spec, "generate: n must be >= 1");
  std::uniform_real_distribution<double> coupled_sine(coupled_sine_floor, 1.0);
  RealVector sines = RealVector::Zero(n);

  if (const auto* explicit_sines = std::get_if<ExplicitSines>(&spec.class_request)) {
    if (explicit_sines->values.size() != static_cast<std::size_t>(n)) {
      throw error(errc::invalid_spec,
                  "generate: explicit sines must have exactly n entries");
    }
    for (int j = 0; j < n; ++j) {
      const double s = explicit_sines->values[j];
      if (!(s >= 0.0 && s <= 1.0)) {
        throw error(errc::invalid_spec, "generate: explicit sines must lie in [0, 1]");
      }
      sines(j) = s;
    }
  } else {
    int r = 0;
    switch (std::get<BCTag>(spec.class_request)) {
      case BCTag::separated:
        r = 0;
        break;
      case BCTag::coupled:
        r = n;
        break;
      case BCTag::mixed: {
        if (n < 2) {
          throw error(errc::invalid_spec,
                      "generate: mixed conditions need n >= 2");
        }
        std::uniform_int_distribution<int> rank(1, n - 1);
        r = rank(rng);
        break;
      }
    }
    for (int j = 0; j < r; ++j) sines(j) = coupled_sine(rng);
  }
  std::sort(sines.begin(), sines.end());
  return sines;
}

CanonicalForm generate_form(const GenSpec& spec) {
  Rng rng(spec.seed);
  CanonicalForm cf;
  cf.n = spec.n;
  cf.sines = draw_sines(spec, rng);
  cf.cosines = (1.0 - cf.sines.array().square()).sqrt();
  cf.u1 = random_unitary(spec.n, rng);
  cf.u2 = random_unitary(spec.n, rng);
  cf.v1 = random_unitary(spec.n, rng);
  cf.v2 = random_unitary(spec.n, rng);
  const Eigen::Index k = 2 * static_cast<Eigen::Index>(spec.n);
  cf.u = spec.scramble_rows ? random_invertible(k, rng)
                            : ComplexMatrix::Identity(k, k);
  return cf;
}

BoundaryPair generate(const GenSpec& spec) {
  return reconstruct(generate_form(spec));
}

}  // namespace sabc
