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

#ifndef TOPNN_PIPELINE_DECODING_H_
#define TOPNN_PIPELINE_DECODING_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "topnn/corpus/instances.h"
#include "topnn/corpus/vocabulary.h"
#include "topnn/model/network.h"
#include "topnn/model/params.h"

namespace topnn::pipeline {

using corpus::TokenId;

struct DecoderState {
  std::vector<double> values;
};

struct StepOutput {
  std::vector<double> dist;  // probabilities over the extended vocabulary
  DecoderState next;
};

// Any autoregressive distribution the decoders can search over.
class StepModel {
 public:
  virtual ~StepModel() = default;
  virtual TokenId bos() const { return corpus::Vocabulary::kBos; }
  virtual TokenId eos() const { return corpus::Vocabulary::kEos; }
  virtual DecoderState initial_state() = 0;
  virtual StepOutput step(const DecoderState& state, TokenId previous) = 0;
};

// Runs the trained network on one instance. Only code_ids, topic_ids,
// copy_ids and oov_map are read; the summary is ignored.
class NetworkStepModel final : public StepModel {
 public:
  NetworkStepModel(const model::ModelParams& params,
                   const corpus::TrainingInstance& instance);
  ~NetworkStepModel() override;

  DecoderState initial_state() override;
  StepOutput step(const DecoderState& state, TokenId previous) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct BeamHypothesis {
  std::vector<TokenId> token_ids;  // generated tokens, BOS excluded
  double log_prob = 0.0;
  DecoderState state;
  bool finished = false;

  // log_prob divided by the number of generated tokens.
  double normalized_score() const;
};

// Argmax at every step, lowest id on ties. Stops after EOS or max_len tokens.
std::vector<TokenId> greedy_decode(StepModel& model, std::size_t max_len);

// Length-normalized beam search. Each live hypothesis proposes its `beam`
// best continuations; finished hypotheses carry over unchanged. Ranking is by
// normalized score, then by token ids lexicographically.
BeamHypothesis beam_search(StepModel& model, std::size_t beam, std::size_t max_len);

std::vector<TokenId> greedy_decode(const model::ModelParams& params,
                                   const corpus::TrainingInstance& instance,
                                   std::size_t max_len);
std::vector<TokenId> beam_search(const model::ModelParams& params,
                                 const corpus::TrainingInstance& instance,
                                 std::size_t beam, std::size_t max_len);

// BOS, EOS and PAD are dropped; ids at or past the vocabulary size resolve
// through oov_map (DataError when absent).
std::string detokenize(std::span<const TokenId> ids, const corpus::Vocabulary& vocab,
                       const corpus::OovMap& oov_map);

}  // namespace topnn::pipeline

#endif  // TOPNN_PIPELINE_DECODING_H_
