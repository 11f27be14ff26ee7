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

#ifndef TOPNN_TESTS_SUPPORT_FIXTURES_H_
#define TOPNN_TESTS_SUPPORT_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "topnn/corpus/instances.h"
#include "topnn/corpus/vocabulary.h"
#include "topnn/model/params.h"
#include "topnn/pipeline/decoding.h"
#include "topnn/random.h"
#include "topnn/topics/lda.h"

namespace topnn::testing {

using corpus::TokenId;

// Two topics over disjoint ten-word vocabularies; topic 0 owns words 0..9.
struct PlantedCorpus {
  std::vector<std::string> words;
  std::vector<topics::Document> docs;
  std::vector<std::size_t> dominant;  // planted majority topic per document
};

// Each document picks a dominant topic, which supplies each token with
// probability 0.9.
PlantedCorpus planted_corpus(std::size_t n_docs, std::size_t doc_len, std::uint64_t seed);

// Tokens drawn only from the given planted topic.
topics::Document single_topic_document(std::size_t topic, std::size_t len, Rng& rng);

// Fraction of top-n words shared after greedily pairing fitted topics with
// planted topics; one value per planted topic.
std::vector<double> planted_overlap(const topics::TopicModel& model, std::size_t n);

// Maps fitted topic index to the planted topic it was paired with.
std::vector<std::size_t> planted_alignment(const topics::TopicModel& model, std::size_t n);

struct ToyCorpus {
  std::vector<corpus::InstanceRecord> records;
  corpus::Vocabulary code_vocab;
  corpus::Vocabulary sum_vocab;
  std::vector<corpus::TrainingInstance> instances;
  std::size_t topic_count = 0;
  std::size_t n_topics = 0;
  std::size_t max_code_len = 0;
  std::size_t max_sum_len = 0;

  model::ModelConfig config(std::size_t embed, std::size_t topic_embed,
                            std::size_t hidden) const;
};

// Accessor-style methods whose summaries follow from their code.
ToyCorpus toy_corpus(std::size_t n, std::uint64_t seed);

// Every summary contains one made-up word that appears in its own code and
// nowhere else, so the word is outside the summary vocabulary.
ToyCorpus unique_oov_corpus(std::size_t n, std::uint64_t seed);

// Uniform-random parameters of a small model and a matching instance.
model::ModelConfig small_config(std::size_t hidden = 6);
corpus::TrainingInstance random_instance(const model::ModelConfig& config,
                                         std::size_t code_len, std::size_t summary_len,
                                         std::size_t oov_count, Rng& rng);

// Step distributions fixed per prefix; unseen prefixes get a seeded random
// distribution over `vocab` tokens.
class TableStepModel final : public pipeline::StepModel {
 public:
  TableStepModel(std::size_t vocab, TokenId eos, std::uint64_t seed);

  void set(const std::vector<TokenId>& prefix, std::vector<double> dist);
  const std::vector<double>& dist(const std::vector<TokenId>& prefix);

  TokenId bos() const override { return bos_; }
  TokenId eos() const override { return eos_; }
  pipeline::DecoderState initial_state() override { return {}; }
  pipeline::StepOutput step(const pipeline::DecoderState& state, TokenId previous) override;

 private:
  std::size_t vocab_;
  TokenId eos_;
  TokenId bos_;
  std::uint64_t seed_;
  std::map<std::vector<TokenId>, std::vector<double>> table_;
};

// Exhaustive search over every sequence that either ends at its first EOS or
// reaches max_len; same ranking as beam search.
pipeline::BeamHypothesis enumerate_best(TableStepModel& model, std::size_t max_len);

// Java fixtures.
extern const char kJsonValueSource[];
extern const char kSpeexSource[];
inline constexpr char kJsonValueSummary[] =
    "writes the json representation of this object to the given writer";

}  // namespace topnn::testing

#endif  // TOPNN_TESTS_SUPPORT_FIXTURES_H_
