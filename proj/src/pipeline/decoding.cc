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

#include "topnn/pipeline/decoding.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "topnn/error.h"
#include "topnn/neuro/tape.h"

namespace topnn::pipeline {

using corpus::Vocabulary;
using neuro::Array2;

struct NetworkStepModel::Impl {
  const model::ModelParams& params;
  const corpus::TrainingInstance& instance;
  neuro::Tape tape{/*recording=*/false};
  model::BoundParams bound;
  model::EncoderOutputs encoded;

  Impl(const model::ModelParams& p, const corpus::TrainingInstance& inst)
      : params(p), instance(inst) {
    bound = model::bind(tape, params, nullptr);
    encoded = model::encode(tape, bound, instance.topic_ids, instance.code_ids);
  }
};

NetworkStepModel::NetworkStepModel(const model::ModelParams& params,
                                   const corpus::TrainingInstance& instance)
    : impl_(std::make_unique<Impl>(params, instance)) {}

NetworkStepModel::~NetworkStepModel() = default;

DecoderState NetworkStepModel::initial_state() {
  const auto v = impl_->tape.value(impl_->encoded.code_final).values();
  return DecoderState{{v.begin(), v.end()}};
}

StepOutput NetworkStepModel::step(const DecoderState& state, TokenId previous) {
  auto& t = impl_->tape;
  neuro::Var s = t.constant(Array2::column(state.values));
  model::DecoderStep out =
      model::decode_step(t, impl_->bound, previous, s, impl_->encoded,
                         impl_->instance.copy_ids, impl_->instance.oov_map.size());
  const auto dist = t.value(out.final_dist).values();
  const auto next = t.value(out.state).values();
  return StepOutput{{dist.begin(), dist.end()}, DecoderState{{next.begin(), next.end()}}};
}

double BeamHypothesis::normalized_score() const {
  if (token_ids.empty()) return 0.0;
  return log_prob / static_cast<double>(token_ids.size());
}

std::vector<TokenId> greedy_decode(StepModel& model, std::size_t max_len) {
  std::vector<TokenId> out;
  DecoderState state = model.initial_state();
  TokenId last = model.bos();
  while (out.size() < max_len) {
    StepOutput step = model.step(state, last);
    last = model::argmax(step.dist);
    out.push_back(last);
    if (last == model.eos()) break;
    state = std::move(step.next);
  }
  return out;
}

namespace {

bool ranks_before(const BeamHypothesis& a, const BeamHypothesis& b) {
  const double sa = a.normalized_score();
  const double sb = b.normalized_score();
  if (sa != sb) return sa > sb;
  return a.token_ids < b.token_ids;
}

}  // namespace

BeamHypothesis beam_search(StepModel& model, std::size_t beam, std::size_t max_len) {
  if (beam == 0) throw ConfigError("beam_search: beam must be at least 1");
  std::vector<BeamHypothesis> live;
  live.push_back(BeamHypothesis{{}, 0.0, model.initial_state(), false});
  if (max_len == 0) return live.front();

  for (std::size_t step = 0; step < max_len; ++step) {
    std::vector<BeamHypothesis> candidates;
    for (BeamHypothesis& hyp : live) {
      if (hyp.finished) {
        candidates.push_back(std::move(hyp));
        continue;
      }
      const TokenId last = hyp.token_ids.empty() ? model.bos() : hyp.token_ids.back();
      StepOutput out = model.step(hyp.state, last);
      std::vector<TokenId> ids(out.dist.size());
      for (TokenId i = 0; i < ids.size(); ++i) ids[i] = i;
      const std::size_t keep = std::min(beam, ids.size());
      // Equal-length siblings: higher probability first, lower id on ties.
      std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(keep),
                        ids.end(), [&](TokenId a, TokenId b) {
                          if (out.dist[a] != out.dist[b]) return out.dist[a] > out.dist[b];
                          return a < b;
                        });
      for (std::size_t k = 0; k < keep; ++k) {
        const TokenId id = ids[k];
        BeamHypothesis next;
        next.token_ids = hyp.token_ids;
        next.token_ids.push_back(id);
        next.log_prob = hyp.log_prob + std::log(out.dist[id]);
        next.state = out.next;
        next.finished = id == model.eos();
        candidates.push_back(std::move(next));
      }
    }
    const std::size_t keep = std::min(beam, candidates.size());
    std::partial_sort(candidates.begin(),
                      candidates.begin() + static_cast<std::ptrdiff_t>(keep),
                      candidates.end(), ranks_before);
    candidates.resize(keep);
    live = std::move(candidates);
    if (std::all_of(live.begin(), live.end(),
                    [](const BeamHypothesis& h) { return h.finished; })) {
      break;
    }
  }
  return live.front();
}

std::vector<TokenId> greedy_decode(const model::ModelParams& params,
                                   const corpus::TrainingInstance& instance,
                                   std::size_t max_len) {
  NetworkStepModel model(params, instance);
  return greedy_decode(model, max_len);
}

std::vector<TokenId> beam_search(const model::ModelParams& params,
                                 const corpus::TrainingInstance& instance,
                                 std::size_t beam, std::size_t max_len) {
  NetworkStepModel model(params, instance);
  return beam_search(model, beam, max_len).token_ids;
}

std::string detokenize(std::span<const TokenId> ids, const Vocabulary& vocab,
                       const corpus::OovMap& oov_map) {
  std::string out;
  for (TokenId id : ids) {
    if (id == Vocabulary::kBos || id == Vocabulary::kEos || id == Vocabulary::kPad) {
      continue;
    }
    const std::string& token = id < vocab.size() ? vocab.token(id) : oov_map.token(id);
    if (!out.empty()) out += ' ';
    out += token;
  }
  return out;
}

}  // namespace topnn::pipeline
