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

#include "topnn/model/params.h"

#include <string>
#include <vector>

#include "topnn/error.h"
#include "topnn/random.h"

namespace topnn::model {

void ModelConfig::validate() const {
  auto positive = [](std::size_t v, const char* name) {
    if (v == 0) throw ConfigError(std::string("model config: ") + name + " must be positive");
  };
  positive(code_vocab_size, "code_vocab_size");
  positive(sum_vocab_size, "sum_vocab_size");
  positive(topic_count, "topic_count");
  positive(n_topics, "n_topics");
  positive(embed_dim, "embed_dim");
  positive(topic_embed_dim, "topic_embed_dim");
  positive(hidden_dim, "hidden_dim");
  positive(max_code_len, "max_code_len");
  positive(max_sum_len, "max_sum_len");
  if (sum_vocab_size <= 4 || code_vocab_size <= 4) {
    throw ConfigError("model config: vocabularies must hold more than the 4 reserved tokens");
  }
  if (max_sum_len < 2) throw ConfigError("model config: max_sum_len must be >= 2");
}

nlohmann::json to_json(const ModelConfig& c) {
  return {{"code_vocab_size", c.code_vocab_size},
          {"sum_vocab_size", c.sum_vocab_size},
          {"topic_count", c.topic_count},
          {"n_topics", c.n_topics},
          {"embed_dim", c.embed_dim},
          {"topic_embed_dim", c.topic_embed_dim},
          {"hidden_dim", c.hidden_dim},
          {"max_code_len", c.max_code_len},
          {"max_sum_len", c.max_sum_len},
          {"use_topics", c.use_topics}};
}

ModelConfig model_config_from_json(const nlohmann::json& j) {
  try {
    ModelConfig c;
    c.code_vocab_size = j.at("code_vocab_size").get<std::size_t>();
    c.sum_vocab_size = j.at("sum_vocab_size").get<std::size_t>();
    c.topic_count = j.at("topic_count").get<std::size_t>();
    c.n_topics = j.at("n_topics").get<std::size_t>();
    c.embed_dim = j.at("embed_dim").get<std::size_t>();
    c.topic_embed_dim = j.at("topic_embed_dim").get<std::size_t>();
    c.hidden_dim = j.at("hidden_dim").get<std::size_t>();
    c.max_code_len = j.at("max_code_len").get<std::size_t>();
    c.max_sum_len = j.at("max_sum_len").get<std::size_t>();
    c.use_topics = j.value("use_topics", true);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed model config: ") + e.what());
  }
}

ModelParams ModelParams::zeros(const ModelConfig& config) {
  config.validate();
  const std::size_t h = config.hidden_dim;
  const std::size_t e = config.embed_dim;
  ModelParams p;
  p.config = config;
  p.e_code = Array2(config.code_vocab_size, e);
  p.e_sum = Array2(config.sum_vocab_size, e);
  p.e_topic = Array2(config.topic_count + 1, config.topic_embed_dim);
  p.enc_topic = GruCell::zeros(config.topic_embed_dim, h);
  p.enc_code = GruCell::zeros(e, h);
  p.dec = GruCell::zeros(e + h, h);
  p.w_a = Array2(h, h);
  p.u_a = Array2(h, h);
  p.v_a = Array2(h, 1);
  p.w_out = Array2(config.sum_vocab_size, 2 * h);
  p.b_out = Array2(config.sum_vocab_size, 1);
  p.w_c = Array2(h, 1);
  p.w_s = Array2(h, 1);
  p.w_y = Array2(e, 1);
  p.b_ptr = Array2(1, 1);
  return p;
}

namespace {

bool is_bias(const std::string& name) {
  const std::size_t dot = name.rfind('.');
  const std::string leaf = dot == std::string::npos ? name : name.substr(dot + 1);
  return leaf.rfind("b_", 0) == 0;
}

}  // namespace

ModelParams ModelParams::initialize(const ModelConfig& config,
                                    std::uint64_t seed) {
  ModelParams p = zeros(config);
  Rng rng(seed);
  visit(p, [&](const std::string& name, Array2& a) {
    if (is_bias(name)) return;
    for (neuro::Real& v : a.values()) v = rng.uniform(-0.08, 0.08);
  });
  return p;
}

std::size_t ModelParams::parameter_count() const {
  std::size_t n = 0;
  visit(*this, [&](const std::string&, const Array2& a) { n += a.size(); });
  return n;
}

void ModelParams::fill(neuro::Real value) {
  visit(*this, [&](const std::string&, Array2& a) { a.fill(value); });
}

bool operator==(const ModelParams& a, const ModelParams& b) {
  if (!(a.config == b.config)) return false;
  std::vector<const Array2*> lhs;
  std::vector<const Array2*> rhs;
  ModelParams::visit(a, [&](const std::string&, const Array2& x) { lhs.push_back(&x); });
  ModelParams::visit(b, [&](const std::string&, const Array2& x) { rhs.push_back(&x); });
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!(*lhs[i] == *rhs[i])) return false;
  }
  return true;
}

void round_to_float32(ModelParams& params) {
  ModelParams::visit(params, [](const std::string&, Array2& a) {
    for (neuro::Real& v : a.values()) v = static_cast<float>(v);
  });
}

std::vector<Array2*> parameter_arrays(ModelParams& params) {
  std::vector<Array2*> out;
  ModelParams::visit(params, [&](const std::string&, Array2& a) { out.push_back(&a); });
  return out;
}

}  // namespace topnn::model
