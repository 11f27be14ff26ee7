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

#include "topnn/model/network.h"

#include <string>

#include "topnn/error.h"

namespace topnn::model {

BoundParams bind(Tape& tape, const ModelParams& params, ModelParams* grads) {
  auto p = [&](const Array2& value, Array2 ModelParams::*member) {
    return tape.parameter(value, grads != nullptr ? &(grads->*member) : nullptr);
  };
  BoundParams b;
  b.config = &params.config;
  b.e_code = p(params.e_code, &ModelParams::e_code);
  b.e_sum = p(params.e_sum, &ModelParams::e_sum);
  b.e_topic = p(params.e_topic, &ModelParams::e_topic);
  b.enc_topic = neuro::bind(tape, params.enc_topic,
                            grads != nullptr ? &grads->enc_topic : nullptr);
  b.enc_code = neuro::bind(tape, params.enc_code,
                           grads != nullptr ? &grads->enc_code : nullptr);
  b.dec = neuro::bind(tape, params.dec, grads != nullptr ? &grads->dec : nullptr);
  b.w_a = p(params.w_a, &ModelParams::w_a);
  b.u_a = p(params.u_a, &ModelParams::u_a);
  b.v_a = p(params.v_a, &ModelParams::v_a);
  b.w_out = p(params.w_out, &ModelParams::w_out);
  b.b_out = p(params.b_out, &ModelParams::b_out);
  b.w_c = p(params.w_c, &ModelParams::w_c);
  b.w_s = p(params.w_s, &ModelParams::w_s);
  b.w_y = p(params.w_y, &ModelParams::w_y);
  b.b_ptr = p(params.b_ptr, &ModelParams::b_ptr);
  return b;
}

BoundParams bind(const ModelConfig& config, std::span<const Var> vars) {
  constexpr std::size_t kArrayCount = 3 + 3 * 9 + 9;
  if (vars.size() != kArrayCount) {
    throw ShapeError("bind: expected " + std::to_string(kArrayCount) +
                     " variables, got " + std::to_string(vars.size()));
  }
  std::size_t next = 0;
  auto cell = [&](std::size_t input_dim) {
    neuro::GruVars g;
    g.w_z = vars[next++];
    g.w_r = vars[next++];
    g.w_h = vars[next++];
    g.u_z = vars[next++];
    g.u_r = vars[next++];
    g.u_h = vars[next++];
    g.b_z = vars[next++];
    g.b_r = vars[next++];
    g.b_h = vars[next++];
    g.input_dim = input_dim;
    g.hidden_dim = config.hidden_dim;
    return g;
  };
  BoundParams b;
  b.config = &config;
  b.e_code = vars[next++];
  b.e_sum = vars[next++];
  b.e_topic = vars[next++];
  b.enc_topic = cell(config.topic_embed_dim);
  b.enc_code = cell(config.embed_dim);
  b.dec = cell(config.embed_dim + config.hidden_dim);
  b.w_a = vars[next++];
  b.u_a = vars[next++];
  b.v_a = vars[next++];
  b.w_out = vars[next++];
  b.b_out = vars[next++];
  b.w_c = vars[next++];
  b.w_s = vars[next++];
  b.w_y = vars[next++];
  b.b_ptr = vars[next++];
  return b;
}

TopicEncoding encode_topics(Tape& tape, const BoundParams& params,
                            std::span<const std::size_t> topic_ids) {
  const ModelConfig& cfg = *params.config;
  if (topic_ids.size() != cfg.n_topics) {
    throw DataError("encode_topics: expected " + std::to_string(cfg.n_topics) +
                    " topic ids, got " + std::to_string(topic_ids.size()));
  }
  TopicEncoding out;
  Var h = tape.constant(Array2(cfg.hidden_dim, 1));
  for (std::size_t id : topic_ids) {
    if (id > cfg.topic_count) {
      throw DataError("encode_topics: topic id " + std::to_string(id) +
                      " exceeds null index " + std::to_string(cfg.topic_count));
    }
    h = neuro::gru_step(tape, params.enc_topic, tape.gather_row(params.e_topic, id), h);
    out.states.push_back(h);
  }
  out.final_state = h;
  return out;
}

EncoderOutputs encode_code(Tape& tape, const BoundParams& params,
                           std::span<const TokenId> code_ids, Var initial_state) {
  const ModelConfig& cfg = *params.config;
  if (code_ids.empty()) throw DataError("encode_code: empty code sequence");
  if (code_ids.size() > cfg.max_code_len) {
    throw DataError("encode_code: " + std::to_string(code_ids.size()) +
                    " tokens exceed max_code_len " + std::to_string(cfg.max_code_len));
  }
  EncoderOutputs out;
  Var h = initial_state;
  bool any_valid = false;
  for (TokenId id : code_ids) {
    if (id >= cfg.code_vocab_size) {
      throw DataError("encode_code: token id " + std::to_string(id) +
                      " outside code vocabulary");
    }
    const bool valid = id != corpus::Vocabulary::kPad;
    if (valid) {
      h = neuro::gru_step(tape, params.enc_code, tape.gather_row(params.e_code, id), h);
      any_valid = true;
    }
    out.code_states.push_back(h);
    out.code_mask.push_back(valid ? 1 : 0);
  }
  if (!any_valid) throw DataError("encode_code: every position is padding");
  out.code_final = h;
  out.code_matrix = tape.stack_rows(out.code_states);
  out.attention_keys = tape.matmul_nt(out.code_matrix, params.u_a);
  return out;
}

EncoderOutputs encode(Tape& tape, const BoundParams& params,
                      std::span<const std::size_t> topic_ids,
                      std::span<const TokenId> code_ids) {
  const ModelConfig& cfg = *params.config;
  if (!cfg.use_topics) {
    Var zero = tape.constant(Array2(cfg.hidden_dim, 1));
    return encode_code(tape, params, code_ids, zero);
  }
  TopicEncoding topics = encode_topics(tape, params, topic_ids);
  EncoderOutputs out = encode_code(tape, params, code_ids, topics.final_state);
  out.topic_states = std::move(topics.states);
  out.topic_final = topics.final_state;
  return out;
}

namespace {

AttentionOutput attend(Tape& tape, const BoundParams& params, Var s_prev,
                       Var code_matrix, Var keys,
                       std::span<const std::uint8_t> mask) {
  Var query = tape.matmul(params.w_a, s_prev);
  Var scores = tape.additive_scores(query, keys, params.v_a);
  AttentionOutput out;
  out.alpha = tape.softmax(scores, mask);
  out.context = tape.weighted_rows(code_matrix, out.alpha);
  return out;
}

}  // namespace

AttentionOutput attention(Tape& tape, const BoundParams& params, Var s_prev,
                          const EncoderOutputs& encoded) {
  return attend(tape, params, s_prev, encoded.code_matrix, encoded.attention_keys,
                encoded.code_mask);
}

AttentionOutput attention(Tape& tape, const BoundParams& params, Var s_prev,
                          std::span<const Var> code_states,
                          std::span<const std::uint8_t> code_mask) {
  if (code_states.size() != code_mask.size()) {
    throw ShapeError("attention: " + std::to_string(code_states.size()) +
                     " states but mask of " + std::to_string(code_mask.size()));
  }
  Var matrix = tape.stack_rows(code_states);
  Var keys = tape.matmul_nt(matrix, params.u_a);
  return attend(tape, params, s_prev, matrix, keys, code_mask);
}

DecoderStep decode_step(Tape& tape, const BoundParams& params, TokenId y_prev,
                        Var s_prev, const EncoderOutputs& encoded,
                        std::span<const TokenId> copy_ids, std::size_t oov_count) {
  const ModelConfig& cfg = *params.config;
  const std::size_t extended = cfg.sum_vocab_size + oov_count;
  if (y_prev >= extended) {
    throw DataError("decode_step: previous token " + std::to_string(y_prev) +
                    " outside extended vocabulary of " + std::to_string(extended));
  }
  if (copy_ids.size() != encoded.code_states.size()) {
    throw DataError("decode_step: " + std::to_string(copy_ids.size()) +
                    " copy ids for " + std::to_string(encoded.code_states.size()) +
                    " source positions");
  }
  const TokenId embed_id = y_prev < cfg.sum_vocab_size ? y_prev : corpus::Vocabulary::kUnk;
  Var y_embed = tape.gather_row(params.e_sum, embed_id);

  AttentionOutput att = attention(tape, params, s_prev, encoded);
  DecoderStep out;
  out.alpha = att.alpha;
  out.context = att.context;
  out.state = neuro::gru_step(tape, params.dec, tape.concat(y_embed, att.context), s_prev);

  Var logits = tape.add(tape.matmul(params.w_out, tape.concat(out.state, att.context)),
                        params.b_out);
  out.p_vocab = tape.softmax(logits);
  Var switch_logit = tape.add(
      tape.add(tape.dot(params.w_c, att.context), tape.dot(params.w_s, out.state)),
      tape.add(tape.dot(params.w_y, y_embed), params.b_ptr));
  out.p_gen = tape.sigmoid(switch_logit);
  out.final_dist = tape.pointer_mix(out.p_gen, out.p_vocab, att.alpha, copy_ids, extended);
  return out;
}

std::size_t argmax(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

Var forward_loss(Tape& tape, const BoundParams& params,
                 const corpus::TrainingInstance& instance, ForwardStats* stats) {
  const auto& summary = instance.summary_ids;
  if (summary.size() < 2) {
    throw DataError("forward_loss: summary needs at least BOS and EOS");
  }
  const std::size_t oov_count = instance.oov_map.size();
  const std::size_t extended = params.config->sum_vocab_size + oov_count;
  EncoderOutputs encoded = encode(tape, params, instance.topic_ids, instance.code_ids);
  Var state = encoded.code_final;
  std::vector<Var> step_losses;
  step_losses.reserve(summary.size() - 1);
  for (std::size_t i = 1; i < summary.size(); ++i) {
    const TokenId target = summary[i];
    if (target >= extended) {
      throw DataError("forward_loss: gold token " + std::to_string(target) +
                      " outside extended vocabulary of " + std::to_string(extended));
    }
    DecoderStep step = decode_step(tape, params, summary[i - 1], state, encoded,
                                   instance.copy_ids, oov_count);
    step_losses.push_back(tape.cross_entropy(step.final_dist, target));
    if (stats != nullptr) {
      ++stats->total;
      if (argmax(tape.value(step.final_dist).values()) == target) ++stats->correct;
    }
    state = step.state;
  }
  return tape.mean(step_losses);
}

double instance_loss(const ModelParams& params,
                     const corpus::TrainingInstance& instance, ForwardStats* stats) {
  Tape tape(/*recording=*/false);
  BoundParams bound = bind(tape, params, nullptr);
  return tape.scalar(forward_loss(tape, bound, instance, stats));
}

}  // namespace topnn::model
