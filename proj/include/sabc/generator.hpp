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

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "sabc/boundary.hpp"
#include "sabc/canonical.hpp"

namespace sabc {

/// Sine values supplied verbatim, one per index, each in [0, 1].
struct ExplicitSines {
  std::vector<double> values;
};

struct GenSpec {
  int n = 1;
  std::variant<BCTag, ExplicitSines> class_request = BCTag::separated;
  std::uint64_t seed = 0;
  bool scramble_rows = false;
};

/// All randomness comes from std::mt19937_64 seeded with GenSpec::seed.
/// Streams are reproducible on one platform; the normal distribution is
/// implementation-defined, so bytes may differ across standard libraries.
using Rng = std::mt19937_64;

inline constexpr double coupled_sine_floor = 0.1;
inline constexpr double max_scramble_condition = 1e6;

ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian with the phases of
/// R's diagonal moved into Q.
ComplexMatrix random_unitary(Eigen::Index n, Rng& rng);
ComplexMatrix random_unitary(Eigen::Index n, std::uint64_t seed);

/// Random Hermitian with Gaussian entries scaled by `scale`.
ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng, double scale = 1.0);

/// Gaussian matrix redrawn until its 2-norm condition number is at most
/// max_condition.
ComplexMatrix random_invertible(Eigen::Index n, Rng& rng,
                                double max_condition = max_scramble_condition);

/// Sines the spec asks for, sorted non-decreasing. Throws invalid_spec for
/// impossible requests.
RealVector draw_sines(const GenSpec& spec, Rng& rng);

/// Canonical form assembled from drawn sines and random unitary factors.
CanonicalForm generate_form(const GenSpec& spec);

/// reconstruct(generate_form(spec)); always self-adjoint.
BoundaryPair generate(const GenSpec& spec);

}  // namespace sabc
