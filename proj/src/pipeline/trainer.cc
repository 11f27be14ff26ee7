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

#include "topnn/pipeline/trainer.h"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "topnn/error.h"
#include "topnn/io.h"
#include "topnn/model/network.h"
#include "topnn/random.h"

namespace topnn::pipeline {

using model::ModelParams;

TrainResult train(const model::ModelConfig& model_config,
                  const TrainConfig& train_config,
                  std::span<const corpus::TrainingInstance> instances,
                  const TrainHooks& hooks) {
  model_config.validate();
  ModelParams params = ModelParams::initialize(model_config, train_config.seed);
  return train(std::move(params), train_config, instances, hooks);
}

TrainResult train(ModelParams params, const TrainConfig& config,
                  std::span<const corpus::TrainingInstance> instances,
                  const TrainHooks& hooks) {
  config.validate();
  if (instances.empty()) throw DataError("train: no training instances");
  model::round_to_float32(params);

  const AdamHyper hyper{config.learning_rate, config.adam_beta1,
                        config.adam_beta2, config.adam_eps};
  AdamState adam = AdamState::zeros(params.config);
  ModelParams grads = ModelParams::zeros(params.config);
  // The shuffle stream is independent of the initialization stream.
  Rng rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::size_t> order(instances.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  TrainResult result;
  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    rng.shuffle(std::span<std::size_t>(order));
    double loss_total = 0.0;
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t end = std::min(order.size(), start + config.batch_size);
      grads.fill(0.0);
      for (std::size_t k = start; k < end; ++k) {
        const std::size_t index = order[k];
        neuro::Tape tape;
        model::BoundParams bound = model::bind(tape, params, &grads);
        neuro::Var loss = model::forward_loss(tape, bound, instances[index]);
        const double value = tape.scalar(loss);
        if (!std::isfinite(value)) {
          throw DataError("train: non-finite loss at instance " +
                          std::to_string(index) + " in epoch " +
                          std::to_string(epoch));
        }
        loss_total += value;
        tape.backward(loss);
      }
      const double inv = 1.0 / static_cast<double>(end - start);
      ModelParams::visit(grads, [&](const std::string&, neuro::Array2& g) {
        for (double& x : g.values()) x *= inv;
      });
      clip_global_norm(grads, config.clip_norm);
      adam_step(params, grads, adam, hyper);
      model::round_to_float32(params);
    }
    const double mean = loss_total / static_cast<double>(instances.size());
    result.epoch_losses.push_back(mean);
    if (hooks.on_epoch) hooks.on_epoch(epoch, mean);
    if (config.checkpoint_every != 0 && epoch % config.checkpoint_every == 0 &&
        hooks.on_checkpoint) {
      hooks.on_checkpoint(epoch, params);
    }
  }
  result.params = std::move(params);
  return result;
}

double teacher_forced_accuracy(const ModelParams& params,
                               std::span<const corpus::TrainingInstance> instances) {
  model::ForwardStats stats;
  for (const auto& inst : instances) model::instance_loss(params, inst, &stats);
  if (stats.total == 0) return 0.0;
  return static_cast<double>(stats.correct) / static_cast<double>(stats.total);
}

void write_loss_log(const std::filesystem::path& path,
                    std::span<const double> epoch_losses) {
  std::string out = "epoch,mean_loss\n";
  char buf[64];
  for (std::size_t i = 0; i < epoch_losses.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i + 1, epoch_losses[i]);
    out += buf;
  }
  io::write_file(path, out);
}

}  // namespace topnn::pipeline
