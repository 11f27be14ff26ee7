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

#ifndef TOPNN_PIPELINE_TRAINER_H_
#define TOPNN_PIPELINE_TRAINER_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "topnn/corpus/instances.h"
#include "topnn/model/params.h"
#include "topnn/pipeline/adam.h"

namespace topnn::pipeline {

struct TrainResult {
  model::ModelParams params;
  std::vector<double> epoch_losses;  // mean instance loss per epoch, 1-based epochs
};

// Called after epoch e (1-based) when checkpoint_every divides e.
using CheckpointFn =
    std::function<void(std::size_t epoch, const model::ModelParams& params)>;

// Called after every epoch with its mean loss.
using EpochFn = std::function<void(std::size_t epoch, double mean_loss)>;

struct TrainHooks {
  CheckpointFn on_checkpoint;
  EpochFn on_epoch;
};

// Initializes parameters from train_config.seed, then trains. Parameters are
// rounded to float32 after initialization and after every update, so a saved
// checkpoint reproduces the in-memory model exactly.
TrainResult train(const model::ModelConfig& model_config,
                  const TrainConfig& train_config,
                  std::span<const corpus::TrainingInstance> instances,
                  const TrainHooks& hooks = {});

// Continues from the given parameters.
TrainResult train(model::ModelParams initial, const TrainConfig& train_config,
                  std::span<const corpus::TrainingInstance> instances,
                  const TrainHooks& hooks = {});

// Fraction of gold summary tokens (EOS included) that are the argmax of the
// teacher-forced final distribution.
double teacher_forced_accuracy(const model::ModelParams& params,
                               std::span<const corpus::TrainingInstance> instances);

void write_loss_log(const std::filesystem::path& path,
                    std::span<const double> epoch_losses);

}  // namespace topnn::pipeline

#endif  // TOPNN_PIPELINE_TRAINER_H_
