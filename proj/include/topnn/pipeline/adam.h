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

#ifndef TOPNN_PIPELINE_ADAM_H_
#define TOPNN_PIPELINE_ADAM_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "json.hpp"
#include "topnn/model/params.h"

namespace topnn::pipeline {

struct TrainConfig {
  std::size_t epochs = 30;
  std::size_t batch_size = 1;  // instances whose gradients are summed per update
  double learning_rate = 1e-3;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  double clip_norm = 5.0;
  std::uint64_t seed = 1;
  std::size_t checkpoint_every = 0;  // 0 disables periodic checkpoints

  // Throws ConfigError. A zero learning rate is accepted (it freezes training).
  void validate() const;
};

nlohmann::json to_json(const TrainConfig& config);
// Missing keys keep their defaults; unknown keys are rejected.
TrainConfig train_config_from_json(const nlohmann::json& j);

struct AdamHyper {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// One update of a flat array. `t` is the 1-based step count.
void adam_update(std::span<double> theta, std::span<const double> grad,
                 std::span<double> m, std::span<double> v, std::size_t t,
                 const AdamHyper& hyper);

struct AdamState {
  model::ModelParams m;
  model::ModelParams v;
  std::size_t t = 0;

  static AdamState zeros(const model::ModelConfig& config);
};

// Increments state.t then updates every array of params.
void adam_step(model::ModelParams& params, const model::ModelParams& grads,
               AdamState& state, const AdamHyper& hyper);

double global_norm(const model::ModelParams& grads);

// Scales grads so their global L2 norm is at most max_norm. Returns the norm
// before clipping.
double clip_global_norm(model::ModelParams& grads, double max_norm);

}  // namespace topnn::pipeline

#endif  // TOPNN_PIPELINE_ADAM_H_
