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

#ifndef TOPNN_MODEL_NETWORK_H_
#define TOPNN_MODEL_NETWORK_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "topnn/corpus/instances.h"
#include "topnn/model/params.h"
#include "topnn/neuro/tape.h"

namespace topnn::model {

using corpus::TokenId;
using neuro::Tape;
using neuro::Var;

// ModelParams bound as tape parameters for one pass.
struct BoundParams {
  const ModelConfig* config = nullptr;
  Var e_code, e_sum, e_topic;
  neuro::GruVars enc_topic, enc_code, dec;
  Var w_a, u_a, v_a, w_out, b_out, w_c, w_s, w_y, b_ptr;
};

// grads, when given, must be shaped like params (ModelParams::zeros).
BoundParams bind(Tape& tape, const ModelParams& params, ModelParams* grads);

// Binds already-created variables given in ModelParams::visit order.
BoundParams bind(const ModelConfig& config, std::span<const Var> vars);

struct TopicEncoding {
  std::vector<Var> states;  // h_1^topic .. h_N^topic
  Var final_state;          // c^topic
};

struct EncoderOutputs {
  std::vector<Var> topic_states;
  Var topic_final;
  std::vector<Var> code_states;     // h_1^code .. h_T^code
  Var code_final;                   // c^code, the decoder's initial state
  std::vector<std::uint8_t> code_mask;  // 1 = real token, 0 = padding
  Var code_matrix;     // T x hidden, row j = h_j^code
  Var attention_keys;  // T x hidden, row j = U_a h_j^code
};

// Runs the topic encoder from a zero state over embedded topic ids (each
// at most K; K is the null pad). Throws DataError if the count differs from
// config.n_topics.
TopicEncoding encode_topics(Tape& tape, const BoundParams& params,
                            std::span<const std::size_t> topic_ids);

// Runs the code encoder starting from initial_state (the topic encoder's
// final state). Padding ids (kPad) are masked: the state is carried through
// them unchanged. Throws DataError for empty or over-long input.
EncoderOutputs encode_code(Tape& tape, const BoundParams& params,
                           std::span<const TokenId> code_ids, Var initial_state);

// Both encoders chained, or the code encoder alone from a zero state when
// config.use_topics is false.
EncoderOutputs encode(Tape& tape, const BoundParams& params,
                      std::span<const std::size_t> topic_ids,
                      std::span<const TokenId> code_ids);

struct AttentionOutput {
  Var alpha;    // T x 1, zero on masked positions
  Var context;  // hidden x 1
};

// Additive attention of the previous decoder state over the code states.
AttentionOutput attention(Tape& tape, const BoundParams& params, Var s_prev,
                          const EncoderOutputs& encoded);

// Lower-level form taking explicit per-position states.
AttentionOutput attention(Tape& tape, const BoundParams& params, Var s_prev,
                          std::span<const Var> code_states,
                          std::span<const std::uint8_t> code_mask);

struct DecoderStep {
  Var state;       // s_i
  Var alpha;
  Var context;     // c_i
  Var p_vocab;     // sum_vocab x 1
  Var p_gen;       // 1 x 1
  Var final_dist;  // (sum_vocab + OOV count) x 1
};

// One decoder step:
//   attention from s_prev, s_i = GRU([embed(y_prev); c_i], s_prev),
//   P_vocab = softmax(W_out [s_i; c_i] + b_out),
//   p_gen = sigmoid(w_c.c_i + w_s.s_i + w_y.embed(y_prev) + b_ptr),
//   P(w) = p_gen P_vocab(w) + (1 - p_gen) sum_{j: copy_ids[j] == w} alpha_j.
// Extended ids of y_prev are embedded as UNK. Throws DataError when y_prev is
// outside the extended vocabulary.
DecoderStep decode_step(Tape& tape, const BoundParams& params, TokenId y_prev,
                        Var s_prev, const EncoderOutputs& encoded,
                        std::span<const TokenId> copy_ids, std::size_t oov_count);

struct ForwardStats {
  std::size_t correct = 0;  // argmax of final_dist equals the gold token
  std::size_t total = 0;
};

// Teacher-forced mean per-token cross entropy over the extended vocabulary.
Var forward_loss(Tape& tape, const BoundParams& params,
                 const corpus::TrainingInstance& instance,
                 ForwardStats* stats = nullptr);

// Convenience: evaluates the loss without recording.
double instance_loss(const ModelParams& params,
                     const corpus::TrainingInstance& instance,
                     ForwardStats* stats = nullptr);

// Argmax with ties to the lowest index.
std::size_t argmax(std::span<const double> values);

}  // namespace topnn::model

#endif  // TOPNN_MODEL_NETWORK_H_
