// Copyright 2026 The topnn Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOPNN_NEURO_GRAD_CHECK_H_
#define TOPNN_NEURO_GRAD_CHECK_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "topnn/neuro/array.h"
#include "topnn/neuro/tape.h"

namespace topnn::neuro {

// Builds a scalar loss on `tape` from parameter variables bound in the same
// order as the `params` span handed to grad_check. Must be deterministic.
using LossBuilder = std::function<Var(Tape& tape, std::span<const Var> params)>;

struct GradCheckOptions {
  Real epsilon = 1e-5;
  // Arrays with more coordinates than this are sampled.
  std::size_t max_coords_per_array = 200;
  std::uint64_t seed = 0;
  // Relative error is |analytic - numeric| / max(|analytic|, |numeric|, floor).
  Real floor = 1e-6;
};

struct GradCheckResult {
  Real max_relative_error = 0.0;
  std::size_t coords_checked = 0;
  std::size_t worst_array = 0;
  std::size_t worst_index = 0;
  Real worst_analytic = 0.0;
  Real worst_numeric = 0.0;
};

// Compares backward() gradients against central differences
// (f(p + eps) - f(p - eps)) / 2 eps. The parameters are perturbed in place
// and restored bit-exactly before returning.
GradCheckResult grad_check(const LossBuilder& loss,
                           std::span<Array2* const> params,
                           const GradCheckOptions& options = {});

Real grad_check(const LossBuilder& loss, std::span<Array2* const> params,
                Real epsilon);

}  // namespace topnn::neuro

#endif  // TOPNN_NEURO_GRAD_CHECK_H_
