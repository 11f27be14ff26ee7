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

#include "topnn/topics/lda.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "topnn/error.h"

namespace topnn::topics {

LdaConfig LdaConfig::with_defaults(std::size_t k) {
  LdaConfig c;
  c.k = k;
  c.alpha = k == 0 ? 0.0 : 50.0 / static_cast<double>(k);
  c.eta = 0.01;
  return c;
}

void LdaConfig::validate() const {
  if (k < 1) throw ConfigError("lda: k must be >= 1, got " + std::to_string(k));
  if (!(alpha > 0.0)) throw ConfigError("lda: alpha must be > 0");
  if (!(eta > 0.0)) throw ConfigError("lda: eta must be > 0");
  if (n_iterations < 1) throw ConfigError("lda: iterations must be >= 1");
}

void TopicModel::index_words() {
  word_index.clear();
  for (WordId i = 0; i < words.size(); ++i) word_index.emplace(words[i], i);
}

Document TopicModel::encode(std::span<const std::string> tokens) const {
  Document doc;
  for (const std::string& t : tokens) {
    auto it = word_index.find(t);
    if (it != word_index.end()) doc.push_back(it->second);
  }
  return doc;
}

std::vector<TopicDistribution> TopicModel::training_thetas() const {
  std::vector<TopicDistribution> out;
  out.reserve(assignments.size());
  for (const auto& doc : assignments) {
    std::vector<double> counts(k, 0.0);
    for (std::size_t z : doc) counts[z] += 1.0;
    const double denom = static_cast<double>(doc.size()) + k * alpha;
    for (double& c : counts) c = (c + alpha) / denom;
    out.push_back({std::move(counts)});
  }
  return out;
}

GibbsSampler::GibbsSampler(std::span<const Document> documents,
                           std::size_t vocab_size, const LdaConfig& config)
    : docs_(documents),
      vocab_size_(vocab_size),
      config_(config),
      rng_(config.seed) {
  config_.validate();
  if (documents.empty()) throw DataError("lda: no documents to fit");
  if (vocab_size == 0) throw DataError("lda: empty vocabulary");
  const std::size_t k = config_.k;
  doc_topic_.assign(docs_.size() * k, 0);
  topic_word_.assign(k * vocab_size_, 0);
  topic_total_.assign(k, 0);
  weights_.resize(k);
  z_.resize(docs_.size());
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    z_[d].resize(docs_[d].size());
    for (std::size_t n = 0; n < docs_[d].size(); ++n) {
      const WordId w = docs_[d][n];
      if (w >= vocab_size_) {
        throw DataError("lda: word id " + std::to_string(w) + " in document " +
                        std::to_string(d) + " exceeds vocabulary size " +
                        std::to_string(vocab_size_));
      }
      const std::size_t topic = rng_.below(k);
      z_[d][n] = topic;
      ++doc_topic_[d * k + topic];
      ++topic_word_[topic * vocab_size_ + w];
      ++topic_total_[topic];
    }
  }
}

void GibbsSampler::sweep() {
  const std::size_t k = config_.k;
  const double alpha = config_.alpha;
  const double eta = config_.eta;
  const double v_eta = static_cast<double>(vocab_size_) * eta;
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    std::size_t* nd = &doc_topic_[d * k];
    for (std::size_t n = 0; n < docs_[d].size(); ++n) {
      const WordId w = docs_[d][n];
      std::size_t topic = z_[d][n];
      --nd[topic];
      --topic_word_[topic * vocab_size_ + w];
      --topic_total_[topic];

      double total = 0.0;
      for (std::size_t t = 0; t < k; ++t) {
        total += (nd[t] + alpha) * (topic_word_[t * vocab_size_ + w] + eta) /
                 (topic_total_[t] + v_eta);
        weights_[t] = total;
      }
      const double u = rng_.uniform01() * total;
      topic = static_cast<std::size_t>(
          std::upper_bound(weights_.begin(), weights_.end(), u) -
          weights_.begin());
      if (topic >= k) topic = k - 1;

      z_[d][n] = topic;
      ++nd[topic];
      ++topic_word_[topic * vocab_size_ + w];
      ++topic_total_[topic];
    }
  }
  ++sweeps_;
}

double GibbsSampler::beta_at(std::size_t topic, WordId w) const {
  return (topic_word_[topic * vocab_size_ + w] + config_.eta) /
         (topic_total_[topic] + static_cast<double>(vocab_size_) * config_.eta);
}

TopicModel GibbsSampler::model(std::vector<std::string> words) const {
  if (words.size() != vocab_size_) {
    throw DataError("lda: " + std::to_string(words.size()) +
                    " words supplied for a vocabulary of " +
                    std::to_string(vocab_size_));
  }
  TopicModel m;
  m.k = config_.k;
  m.alpha = config_.alpha;
  m.eta = config_.eta;
  m.words = std::move(words);
  m.beta = neuro::Array2(m.k, vocab_size_);
  for (std::size_t t = 0; t < m.k; ++t) {
    for (WordId w = 0; w < vocab_size_; ++w) m.beta(t, w) = beta_at(t, w);
  }
  m.assignments = z_;
  m.index_words();
  return m;
}

double GibbsSampler::log_likelihood() const {
  const std::size_t k = config_.k;
  double ll = 0.0;
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    const double denom = static_cast<double>(docs_[d].size()) + k * config_.alpha;
    for (WordId w : docs_[d]) {
      double p = 0.0;
      for (std::size_t t = 0; t < k; ++t) {
        p += (doc_topic_[d * k + t] + config_.alpha) / denom * beta_at(t, w);
      }
      ll += std::log(p);
    }
  }
  return ll;
}

bool GibbsSampler::counts_consistent() const {
  const std::size_t k = config_.k;
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    std::size_t total = 0;
    for (std::size_t t = 0; t < k; ++t) total += doc_topic_[d * k + t];
    if (total != docs_[d].size()) return false;
  }
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t total = 0;
    for (WordId w = 0; w < vocab_size_; ++w) total += topic_word_[t * vocab_size_ + w];
    if (total != topic_total_[t]) return false;
  }
  return true;
}

TopicModel fit_gibbs(std::span<const Document> documents,
                     std::vector<std::string> words, const LdaConfig& config) {
  config.validate();
  GibbsSampler sampler(documents, words.size(), config);
  for (std::size_t i = 0; i < config.n_iterations; ++i) sampler.sweep();
  return sampler.model(std::move(words));
}

TopicDistribution infer_theta(const TopicModel& model, const Document& document,
                              std::size_t n_iterations, std::uint64_t seed) {
  const std::size_t k = model.k;
  Document doc;
  for (WordId w : document) {
    if (w < model.vocab_size()) doc.push_back(w);
  }
  std::vector<double> counts(k, 0.0);
  if (!doc.empty()) {
    Rng rng(seed);
    std::vector<std::size_t> z(doc.size());
    for (std::size_t n = 0; n < doc.size(); ++n) {
      z[n] = rng.below(k);
      counts[z[n]] += 1.0;
    }
    std::vector<double> cumulative(k);
    for (std::size_t it = 0; it < n_iterations; ++it) {
      for (std::size_t n = 0; n < doc.size(); ++n) {
        counts[z[n]] -= 1.0;
        double total = 0.0;
        for (std::size_t t = 0; t < k; ++t) {
          total += (counts[t] + model.alpha) * model.beta(t, doc[n]);
          cumulative[t] = total;
        }
        const double u = rng.uniform01() * total;
        std::size_t topic = static_cast<std::size_t>(
            std::upper_bound(cumulative.begin(), cumulative.end(), u) -
            cumulative.begin());
        if (topic >= k) topic = k - 1;
        z[n] = topic;
        counts[topic] += 1.0;
      }
    }
  }
  const double denom = static_cast<double>(doc.size()) + k * model.alpha;
  TopicDistribution out;
  out.theta.resize(k);
  for (std::size_t t = 0; t < k; ++t) out.theta[t] = (counts[t] + model.alpha) / denom;
  return out;
}

std::vector<std::size_t> top_n_topics(const TopicDistribution& theta,
                                      std::size_t n) {
  if (n > theta.theta.size()) {
    throw ConfigError("top_n_topics: n = " + std::to_string(n) +
                      " exceeds topic count " + std::to_string(theta.theta.size()));
  }
  std::vector<std::size_t> order(theta.theta.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return theta.theta[a] > theta.theta[b];
  });
  order.resize(n);
  return order;
}

std::vector<std::string> topic_top_words(const TopicModel& model,
                                         std::size_t topic, std::size_t n) {
  if (topic >= model.k) {
    throw ConfigError("topic_top_words: topic " + std::to_string(topic) +
                      " outside 0.." + std::to_string(model.k));
  }
  std::vector<WordId> order(model.vocab_size());
  std::iota(order.begin(), order.end(), WordId{0});
  n = std::min(n, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n),
                    order.end(), [&](WordId a, WordId b) {
                      const double pa = model.beta(topic, a);
                      const double pb = model.beta(topic, b);
                      if (pa != pb) return pa > pb;
                      return model.words[a] < model.words[b];
                    });
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(model.words[order[i]]);
  return out;
}

double corpus_log_likelihood(const TopicModel& model,
                             std::span<const Document> documents,
                             std::span<const TopicDistribution> thetas) {
  if (documents.size() != thetas.size()) {
    throw DataError("corpus_log_likelihood: " + std::to_string(documents.size()) +
                    " documents but " + std::to_string(thetas.size()) + " thetas");
  }
  double ll = 0.0;
  for (std::size_t d = 0; d < documents.size(); ++d) {
    for (WordId w : documents[d]) {
      if (w >= model.vocab_size()) continue;
      double p = 0.0;
      for (std::size_t t = 0; t < model.k; ++t) p += thetas[d].theta[t] * model.beta(t, w);
      ll += std::log(p);
    }
  }
  return ll;
}

}  // namespace topnn::topics
