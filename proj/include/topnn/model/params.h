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

#ifndef TOPNN_MODEL_PARAMS_H_
#define TOPNN_MODEL_PARAMS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "topnn/neuro/array.h"
#include "topnn/neuro/gru.h"

namespace topnn::model {

using neuro::Array2;
using neuro::GruCell;

struct ModelConfig {
  std::size_t code_vocab_size = 0;
  std::size_t sum_vocab_size = 0;
  std::size_t topic_count = 0;  // K; E_topic has K + 1 rows, the last a null pad
  std::size_t n_topics = 10;
  std::size_t embed_dim = 32;
  std::size_t topic_embed_dim = 16;
  std::size_t hidden_dim = 64;
  std::size_t max_code_len = 100;
  std::size_t max_sum_len = 30;
  // Without topics the code encoder starts from a zero state and the topic
  // encoder is never run: a plain attentional pointer-generator.
  bool use_topics = true;

  // Throws ConfigError naming the offending field.
  void validate() const;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

nlohmann::json to_json(const ModelConfig& config);
ModelConfig model_config_from_json(const nlohmann::json& j);

// Every trainable array of the network.
struct ModelParams {
  ModelConfig config;

  Array2 e_code;   // code_vocab x embed
  Array2 e_sum;    // sum_vocab x embed
  Array2 e_topic;  // (K + 1) x topic_embed
  GruCell enc_topic;  // topic_embed -> hidden
  GruCell enc_code;   // embed -> hidden
  GruCell dec;        // embed + hidden -> hidden
  // Additive attention e_j = v_a . tanh(W_a s + U_a h_j).
  Array2 w_a, u_a, v_a;
  // P_vocab = softmax(W_out [s; c] + b_out).
  Array2 w_out, b_out;
  // p_gen = sigmoid(w_c . c + w_s . s + w_y . y + b_ptr).
  Array2 w_c, w_s, w_y, b_ptr;

  static ModelParams zeros(const ModelConfig& config);
  // Weights uniform in (-0.08, 0.08), biases zero.
  static ModelParams initialize(const ModelConfig& config, std::uint64_t seed);

  // Calls fn(name, array) for every array in a fixed order; GRU arrays are
  // named "<cell>.<array>".
  template <typename Self, typename Fn>
  static void visit(Self& p, Fn&& fn) {
    fn(std::string("e_code"), p.e_code);
    fn(std::string("e_sum"), p.e_sum);
    fn(std::string("e_topic"), p.e_topic);
    auto cell = [&](const char* prefix, auto& c) {
      GruCell::visit(c, [&](const char* name, auto& a) {
        fn(std::string(prefix) + "." + name, a);
      });
    };
    cell("enc_topic", p.enc_topic);
    cell("enc_code", p.enc_code);
    cell("dec", p.dec);
    fn(std::string("w_a"), p.w_a);
    fn(std::string("u_a"), p.u_a);
    fn(std::string("v_a"), p.v_a);
    fn(std::string("w_out"), p.w_out);
    fn(std::string("b_out"), p.b_out);
    fn(std::string("w_c"), p.w_c);
    fn(std::string("w_s"), p.w_s);
    fn(std::string("w_y"), p.w_y);
    fn(std::string("b_ptr"), p.b_ptr);
  }

  std::size_t parameter_count() const;
  void fill(neuro::Real value);
};

bool operator==(const ModelParams& a, const ModelParams& b);

// Rounds every value to the nearest float32. Parameters are stored at
// single precision in checkpoints; keeping the in-memory copy on that grid
// makes save/load lossless.
void round_to_float32(ModelParams& params);

// Pointers to every array in visit order.
std::vector<Array2*> parameter_arrays(ModelParams& params);

}  // namespace topnn::model

#endif  // TOPNN_MODEL_PARAMS_H_
