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

#include <gtest/gtest.h>

#include "topnn/random.h"

namespace topnn::neuro {
namespace {

Array2 random_array(std::size_t r, std::size_t c, Rng& rng) {
  Array2 a(r, c);
  for (Real& v : a.values()) v = rng.uniform(-1, 1);
  return a;
}

TEST(GradCheck, QuadraticIsNearlyExact) {
  Rng rng(1);
  Array2 a = random_array(3, 3, rng);
  Array2* params[] = {&a};
  const LossBuilder loss = [](Tape& t, std::span<const Var> v) {
    return t.sum(t.mul(v[0], v[0]));
  };
  EXPECT_LT(grad_check(loss, params, 1e-5), 1e-9);
}

TEST(GradCheck, SoftmaxCrossEntropyComposite) {
  Rng rng(2);
  Array2 w = random_array(5, 4, rng);
  Array2 x = random_array(4, 1, rng);
  Array2* params[] = {&w, &x};
  const LossBuilder loss = [](Tape& t, std::span<const Var> v) {
    return t.cross_entropy(t.softmax(t.matmul(v[0], v[1])), 3);
  };
  EXPECT_LT(grad_check(loss, params, 1e-5), 1e-6);
}

TEST(GradCheck, AttentionAndPointerOps) {
  Rng rng(3);
  Array2 query = random_array(3, 1, rng);
  Array2 keys = random_array(4, 3, rng);
  Array2 v = random_array(3, 1, rng);
  Array2 rows = random_array(4, 3, rng);
  Array2 logits = random_array(5, 1, rng);
  Array2 gate = random_array(1, 1, rng);
  Array2* params[] = {&query, &keys, &v, &rows, &logits, &gate};
  const std::vector<std::uint8_t> mask = {1, 1, 0, 1};
  const std::vector<std::size_t> source = {1, 5, 6, 5};
  const LossBuilder loss = [&](Tape& t, std::span<const Var> p) {
    const Var alpha = t.softmax(t.additive_scores(p[0], p[1], p[2]), mask);
    const Var context = t.weighted_rows(p[3], alpha);
    const Var p_gen = t.sigmoid(t.add(p[5], t.dot(context, context)));
    const Var mixed = t.pointer_mix(p_gen, t.softmax(p[4]), alpha, source, 7);
    return t.add(t.cross_entropy(mixed, 5), t.cross_entropy(mixed, 2));
  };
  EXPECT_LT(grad_check(loss, params, 1e-5), 1e-6);
}

TEST(GradCheck, StackRowsGatherConcatAndMean) {
  Rng rng(4);
  Array2 table = random_array(6, 3, rng);
  Array2 m = random_array(3, 5, rng);
  Array2* params[] = {&table, &m};
  const LossBuilder loss = [](Tape& t, std::span<const Var> p) {
    std::vector<Var> cols = {t.gather_row(p[0], 1), t.gather_row(p[0], 4),
                             t.gather_row(p[0], 1)};
    const Var stacked = t.stack_rows(cols);                  // 3x3
    const Var prod = t.matmul_nt(t.matmul(stacked, p[1]), p[1]);  // 3x3
    const Var joined = t.concat(t.one_minus(t.tanh(cols[0])), t.sub(cols[1], cols[2]));
    std::vector<Var> scalars = {t.sum(prod), t.dot(joined, joined), t.sum(t.scale(stacked, 0.5))};
    return t.mean(scalars);
  };
  EXPECT_LT(grad_check(loss, params, 1e-5), 1e-6);
}

TEST(GradCheck, SamplesAtMostTheRequestedCoordinates) {
  Rng rng(5);
  Array2 big = random_array(30, 30, rng);
  Array2* params[] = {&big};
  const LossBuilder loss = [](Tape& t, std::span<const Var> v) { return t.sum(t.tanh(v[0])); };
  GradCheckOptions options;
  options.max_coords_per_array = 200;
  const GradCheckResult r = grad_check(loss, params, options);
  EXPECT_EQ(r.coords_checked, 200u);
  EXPECT_LT(r.max_relative_error, 1e-7);
}

}  // namespace
}  // namespace topnn::neuro
