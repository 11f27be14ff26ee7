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

#ifndef TOPNN_TOPICS_LDA_H_
#define TOPNN_TOPICS_LDA_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "topnn/neuro/array.h"
#include "topnn/random.h"

namespace topnn::topics {

using WordId = std::size_t;
using Document = std::vector<WordId>;

struct LdaConfig {
  std::size_t k = 10;
  double alpha = 5.0;   // symmetric prior on document-topic proportions
  double eta = 0.01;    // symmetric prior on topic-word distributions
  std::size_t n_iterations = 500;
  std::uint64_t seed = 1;

  // alpha = 50 / k, eta = 0.01.
  static LdaConfig with_defaults(std::size_t k);
  // Throws ConfigError naming the offending field.
  void validate() const;
};

struct TopicDistribution {
  std::vector<double> theta;
};

// Fitted LDA state. Immutable once built; safe to share across threads.
struct TopicModel {
  std::size_t k = 0;
  double alpha = 0.0;
  double eta = 0.0;
  // Topic-model vocabulary: word id -> word. Separate from the network's
  // token vocabularies.
  std::vector<std::string> words;
  // k x |words| topic-word probabilities; each row sums to one.
  neuro::Array2 beta;
  // Final topic label of every training token (empty for loaded models).
  std::vector<std::vector<std::size_t>> assignments;

  // word -> word id; rebuilt by index_words().
  std::unordered_map<std::string, WordId> word_index;

  std::size_t vocab_size() const { return words.size(); }
  void index_words();
  // Words missing from the vocabulary are dropped.
  Document encode(std::span<const std::string> tokens) const;
  // Point estimates of theta for the training documents from their final
  // assignments.
  std::vector<TopicDistribution> training_thetas() const;
};

// Collapsed Gibbs sampler. Each sweep resamples every token's topic from
//   p(z = k | rest) ∝ (n_dk + alpha) (n_kw + eta) / (n_k + V eta)
// with the token's own assignment removed from the counts.
class GibbsSampler {
 public:
  GibbsSampler(std::span<const Document> documents, std::size_t vocab_size,
               const LdaConfig& config);

  void sweep();
  std::size_t sweeps_done() const { return sweeps_; }

  // Snapshot of the current state as a fitted model.
  TopicModel model(std::vector<std::string> words) const;
  // Corpus log-likelihood under the current point estimates of theta, beta.
  double log_likelihood() const;
  // sum_k n_dk == N_d and sum_w n_kw == n_k for every document and topic.
  bool counts_consistent() const;

 private:
  double beta_at(std::size_t topic, WordId w) const;

  std::span<const Document> docs_;
  std::size_t vocab_size_;
  LdaConfig config_;
  std::vector<std::vector<std::size_t>> z_;
  std::vector<std::size_t> doc_topic_;    // D x K
  std::vector<std::size_t> topic_word_;   // K x V
  std::vector<std::size_t> topic_total_;  // K
  std::vector<double> weights_;
  Rng rng_;
  std::size_t sweeps_ = 0;
};

// Runs config.n_iterations sweeps. Throws DataError for an empty document
// list or out-of-range word ids.
TopicModel fit_gibbs(std::span<const Document> documents,
                     std::vector<std::string> words, const LdaConfig& config);

// Gibbs sampling over a held-out document with beta fixed. Word ids outside
// the model vocabulary are skipped.
TopicDistribution infer_theta(const TopicModel& model, const Document& document,
                              std::size_t n_iterations, std::uint64_t seed);

// Indices of the n largest weights, descending, ties to the lower index.
std::vector<std::size_t> top_n_topics(const TopicDistribution& theta,
                                      std::size_t n);

// The n most probable words of a topic, descending, ties lexicographic.
std::vector<std::string> topic_top_words(const TopicModel& model,
                                         std::size_t topic, std::size_t n);

// sum_d sum_n log sum_k theta_dk beta_{k, w_dn}.
double corpus_log_likelihood(const TopicModel& model,
                             std::span<const Document> documents,
                             std::span<const TopicDistribution> thetas);

// JSON manifest {k, alpha, eta, vocab, beta_file} plus the beta matrix as
// raw little-endian float64, row-major, in a sibling file.
void save_topic_model(const TopicModel& model,
                      const std::filesystem::path& manifest_path);
TopicModel load_topic_model(const std::filesystem::path& manifest_path);

}  // namespace topnn::topics

#endif  // TOPNN_TOPICS_LDA_H_
