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

#include <stdexcept>
#include <string>
#include <string_view>

namespace sabc {

enum class errc {
  non_finite,
  not_square,
  dimension_mismatch,
  not_unitary,
  not_hermitian,
  degenerate_cluster_failure,
  invalid_order,
  not_self_adjoint,
  singular_transform,
  eigen_equation_failure,
  rank_deficient,
  reconstruction_failure,
  unit_eigenvalue,
  singular_a21,
  invalid_spec,
};

std::string_view to_string(errc code) noexcept;

/// Single exception type for the library; `code()` identifies the failure.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

  /// True for failures of the numerical pipeline itself, as opposed to
  /// invalid or non-self-adjoint input.
  bool is_numerical() const noexcept {
    return code_ == errc::degenerate_cluster_failure ||
           code_ == errc::eigen_equation_failure ||
           code_ == errc::rank_deficient ||
           code_ == errc::reconstruction_failure;
  }

 private:
  errc code_;
};

}  // namespace sabc
