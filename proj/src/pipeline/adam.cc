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

#include "topnn/pipeline/adam.h"

#include <cmath>
#include <string>
#include <vector>

#include "topnn/error.h"
#include "topnn/neuro/kernels.h"

namespace topnn::pipeline {

using model::ModelParams;
using neuro::Array2;

void TrainConfig::validate() const {
  if (epochs == 0) throw ConfigError("epochs must be positive");
  if (batch_size == 0) throw ConfigError("batch_size must be positive");
  if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate)) {
    throw ConfigError("learning_rate must be finite and non-negative");
  }
  if (!(adam_beta1 > 0.0 && adam_beta1 < 1.0)) {
    throw ConfigError("adam_beta1 must be in (0, 1)");
  }
  if (!(adam_beta2 > 0.0 && adam_beta2 < 1.0)) {
    throw ConfigError("adam_beta2 must be in (0, 1)");
  }
  if (!(adam_eps > 0.0)) throw ConfigError("adam_eps must be positive");
  if (!(clip_norm > 0.0)) throw ConfigError("clip_norm must be positive");
}

nlohmann::json to_json(const TrainConfig& c) {
  return {{"epochs", c.epochs},
          {"batch_size", c.batch_size},
          {"learning_rate", c.learning_rate},
          {"adam_beta1", c.adam_beta1},
          {"adam_beta2", c.adam_beta2},
          {"adam_eps", c.adam_eps},
          {"clip_norm", c.clip_norm},
          {"seed", c.seed},
          {"checkpoint_every", c.checkpoint_every}};
}

TrainConfig train_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("train config must be a JSON object");
  TrainConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "epochs") c.epochs = value.get<std::size_t>();
      else if (key == "batch_size") c.batch_size = value.get<std::size_t>();
      else if (key == "learning_rate") c.learning_rate = value.get<double>();
      else if (key == "adam_beta1") c.adam_beta1 = value.get<double>();
      else if (key == "adam_beta2") c.adam_beta2 = value.get<double>();
      else if (key == "adam_eps") c.adam_eps = value.get<double>();
      else if (key == "clip_norm") c.clip_norm = value.get<double>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "checkpoint_every") c.checkpoint_every = value.get<std::size_t>();
      else throw ConfigError("unknown train config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad train config value: ") + e.what());
  }
  c.validate();
  return c;
}

void adam_update(std::span<double> theta, std::span<const double> grad,
                 std::span<double> m, std::span<double> v, std::size_t t,
                 const AdamHyper& h) {
  if (grad.size() != theta.size() || m.size() != theta.size() ||
      v.size() != theta.size()) {
    throw ShapeError("adam_update: size mismatch");
  }
  if (t == 0) throw ConfigError("adam_update: step count starts at 1");
  const double c1 = 1.0 - std::pow(h.beta1, static_cast<double>(t));
  const double c2 = 1.0 - std::pow(h.beta2, static_cast<double>(t));
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double g = grad[i];
    m[i] = h.beta1 * m[i] + (1.0 - h.beta1) * g;
    v[i] = h.beta2 * v[i] + (1.0 - h.beta2) * g * g;
    const double m_hat = m[i] / c1;
    const double v_hat = v[i] / c2;
    theta[i] -= h.learning_rate * m_hat / (std::sqrt(v_hat) + h.eps);
  }
}

AdamState AdamState::zeros(const model::ModelConfig& config) {
  return AdamState{ModelParams::zeros(config), ModelParams::zeros(config), 0};
}

namespace {

// Collects matching arrays of several ModelParams in visit order.
std::vector<Array2*> arrays(ModelParams& p) {
  std::vector<Array2*> out;
  ModelParams::visit(p, [&](const std::string&, Array2& a) { out.push_back(&a); });
  return out;
}

std::vector<const Array2*> arrays(const ModelParams& p) {
  std::vector<const Array2*> out;
  ModelParams::visit(p, [&](const std::string&, const Array2& a) { out.push_back(&a); });
  return out;
}

}  // namespace

void adam_step(ModelParams& params, const ModelParams& grads, AdamState& state,
               const AdamHyper& hyper) {
  ++state.t;
  auto p = arrays(params);
  auto g = arrays(grads);
  auto m = arrays(state.m);
  auto v = arrays(state.v);
  for (std::size_t i = 0; i < p.size(); ++i) {
    adam_update(p[i]->values(), g[i]->values(), m[i]->values(), v[i]->values(),
                state.t, hyper);
  }
}

double global_norm(const ModelParams& grads) {
  const auto& k = neuro::kernels();
  double total = 0.0;
  for (const Array2* a : arrays(grads)) total += k.sum_squares(a->data(), a->size());
  return std::sqrt(total);
}

double clip_global_norm(ModelParams& grads, double max_norm) {
  const double norm = global_norm(grads);
  if (norm > max_norm) {
    const double factor = max_norm / norm;
    for (Array2* a : arrays(grads)) {
      for (double& x : a->values()) x *= factor;
    }
  }
  return norm;
}

}  // namespace topnn::pipeline
