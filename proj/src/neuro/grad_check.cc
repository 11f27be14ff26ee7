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

#include "topnn/neuro/grad_check.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "topnn/random.h"

namespace topnn::neuro {
namespace {

Real evaluate(const LossBuilder& loss, std::span<Array2* const> params) {
  Tape tape(/*recording=*/false);
  std::vector<Var> vars;
  vars.reserve(params.size());
  for (Array2* p : params) vars.push_back(tape.parameter(*p, nullptr));
  return tape.scalar(loss(tape, vars));
}

}  // namespace

GradCheckResult grad_check(const LossBuilder& loss,
                           std::span<Array2* const> params,
                           const GradCheckOptions& options) {
  std::vector<Array2> grads;
  grads.reserve(params.size());
  {
    Tape tape;
    std::vector<Var> vars;
    for (Array2* p : params) {
      grads.emplace_back(p->rows(), p->cols());
      vars.push_back(tape.parameter(*p, &grads.back()));
    }
    tape.backward(loss(tape, vars));
  }

  GradCheckResult result;
  Rng rng(options.seed);
  for (std::size_t a = 0; a < params.size(); ++a) {
    Array2& p = *params[a];
    std::vector<std::size_t> coords(p.size());
    std::iota(coords.begin(), coords.end(), std::size_t{0});
    if (coords.size() > options.max_coords_per_array) {
      rng.shuffle(std::span<std::size_t>(coords));
      coords.resize(options.max_coords_per_array);
      std::sort(coords.begin(), coords.end());
    }
    for (std::size_t i : coords) {
      const Real saved = p[i];
      p[i] = saved + options.epsilon;
      const Real plus = evaluate(loss, params);
      p[i] = saved - options.epsilon;
      const Real minus = evaluate(loss, params);
      p[i] = saved;

      const Real numeric = (plus - minus) / (2.0 * options.epsilon);
      const Real analytic = grads[a][i];
      const Real scale =
          std::max({std::abs(analytic), std::abs(numeric), options.floor});
      const Real rel = std::abs(analytic - numeric) / scale;
      ++result.coords_checked;
      if (rel > result.max_relative_error || !std::isfinite(rel)) {
        result.max_relative_error = rel;
        result.worst_array = a;
        result.worst_index = i;
        result.worst_analytic = analytic;
        result.worst_numeric = numeric;
      }
    }
  }
  return result;
}

Real grad_check(const LossBuilder& loss, std::span<Array2* const> params,
                Real epsilon) {
  GradCheckOptions options;
  options.epsilon = epsilon;
  return grad_check(loss, params, options).max_relative_error;
}

}  // namespace topnn::neuro
