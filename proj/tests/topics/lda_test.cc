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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numeric>

#include "support/fixtures.h"
#include "topnn/error.h"

namespace topnn::topics {
namespace {

LdaConfig config(std::size_t k, std::size_t iters, std::uint64_t seed = 1) {
  LdaConfig c = LdaConfig::with_defaults(k);
  c.n_iterations = iters;
  c.seed = seed;
  return c;
}

void expect_distribution(std::span<const double> p) {
  double total = 0.0;
  for (double v : p) {
    EXPECT_GT(v, 0.0);
    total += v;
  }
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(LdaConfig, DefaultsAndValidation) {
  const LdaConfig c = LdaConfig::with_defaults(4);
  EXPECT_EQ(c.alpha, 12.5);
  EXPECT_EQ(c.eta, 0.01);
  LdaConfig bad = c;
  bad.k = 0;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = c;
  bad.alpha = 0;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = c;
  bad.n_iterations = 0;
  EXPECT_THROW(bad.validate(), ConfigError);
}

TEST(FitGibbs, SingleWordSingleTopic) {
  const std::vector<Document> docs = {{0, 0, 0}};
  const TopicModel m = fit_gibbs(docs, {"x"}, config(1, 10));
  EXPECT_GT(m.beta(0, 0), 0.9);
  EXPECT_EQ(topic_top_words(m, 0, 1), std::vector<std::string>{"x"});
}

TEST(FitGibbs, EmptyCorpusAndBadIdsAreErrors) {
  EXPECT_THROW(fit_gibbs({}, {"x"}, config(1, 1)), DataError);
  const std::vector<Document> docs = {{0, 3}};
  EXPECT_THROW(fit_gibbs(docs, {"x"}, config(1, 1)), DataError);
}

TEST(FitGibbs, EmptyDocumentIsAllowed) {
  const std::vector<Document> docs = {{}, {0, 1}};
  const TopicModel m = fit_gibbs(docs, {"a", "b"}, config(2, 5));
  for (std::size_t t = 0; t < 2; ++t) expect_distribution(m.beta.row(t));
}

TEST(FitGibbs, RecoversPlantedTopics) {
  const testing::PlantedCorpus c = testing::planted_corpus(200, 50, 7);
  const TopicModel m = fit_gibbs(c.docs, c.words, config(2, 500));
  for (double overlap : testing::planted_overlap(m, 5)) EXPECT_GE(overlap, 0.8);
  for (double overlap : testing::planted_overlap(m, 10)) EXPECT_GE(overlap, 0.8);
  for (std::size_t t = 0; t < 2; ++t) expect_distribution(m.beta.row(t));
}

TEST(FitGibbs, SameSeedSameModel) {
  const testing::PlantedCorpus c = testing::planted_corpus(40, 20, 3);
  const TopicModel a = fit_gibbs(c.docs, c.words, config(3, 30, 5));
  const TopicModel b = fit_gibbs(c.docs, c.words, config(3, 30, 5));
  EXPECT_EQ(a.beta, b.beta);
  EXPECT_EQ(a.assignments, b.assignments);
  const TopicModel other = fit_gibbs(c.docs, c.words, config(3, 30, 6));
  EXPECT_NE(a.assignments, other.assignments);
}

TEST(GibbsSampler, CountsStayConsistent) {
  const testing::PlantedCorpus c = testing::planted_corpus(30, 15, 2);
  GibbsSampler sampler(c.docs, c.words.size(), config(3, 1));
  EXPECT_TRUE(sampler.counts_consistent());
  for (int i = 0; i < 20; ++i) {
    sampler.sweep();
    ASSERT_TRUE(sampler.counts_consistent()) << "after sweep " << i;
  }
  EXPECT_EQ(sampler.sweeps_done(), 20u);
}

TEST(GibbsSampler, LikelihoodRisesDuringBurnIn) {
  const testing::PlantedCorpus c = testing::planted_corpus(200, 50, 7);
  GibbsSampler sampler(c.docs, c.words.size(), config(2, 1, 3));
  const double initial = sampler.log_likelihood();
  std::vector<double> trace;
  for (int i = 0; i < 150; ++i) {
    sampler.sweep();
    trace.push_back(sampler.log_likelihood());
  }
  std::size_t rises = 0;
  for (std::size_t i = 51; i < trace.size(); ++i) rises += trace[i] >= trace[i - 1];
  RecordProperty("post_burn_in_rise_fraction", std::to_string(rises / 99.0));
  EXPECT_GT(trace[9], initial);
  // After burn-in the chain is stationary: the trace stays near its plateau
  // instead of drifting back toward the random start.
  const double plateau = std::accumulate(trace.begin() + 50, trace.end(), 0.0) / 100.0;
  for (std::size_t i = 50; i < trace.size(); ++i) {
    EXPECT_GT(trace[i], initial + 0.9 * (plateau - initial));
  }
}

TEST(InferTheta, PlantedDocumentsGoToTheirTopic) {
  const testing::PlantedCorpus c = testing::planted_corpus(200, 50, 7);
  const TopicModel m = fit_gibbs(c.docs, c.words, config(2, 500));
  const auto mapping = testing::planted_alignment(m, 10);
  Rng rng(99);
  std::size_t correct = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t planted = static_cast<std::size_t>(i % 2);
    const Document doc = testing::single_topic_document(planted, 30, rng);
    const TopicDistribution theta = infer_theta(m, doc, 50, static_cast<std::uint64_t>(i));
    expect_distribution(theta.theta);
    const std::size_t best = top_n_topics(theta, 1)[0];
    correct += mapping[best] == planted;
  }
  EXPECT_GE(correct, 45u);
}

TEST(InferTheta, EmptyDocumentIsUniform) {
  TopicModel m;
  m.k = 4;
  m.alpha = 0.5;
  m.eta = 0.01;
  m.words = {"a"};
  m.beta = neuro::Array2(4, 1, 1.0);
  const TopicDistribution theta = infer_theta(m, {}, 10, 1);
  for (double v : theta.theta) EXPECT_DOUBLE_EQ(v, 0.25);
}

TEST(InferTheta, UnknownIdsSkippedAndNormalized) {
  const testing::PlantedCorpus c = testing::planted_corpus(40, 20, 3);
  const TopicModel m = fit_gibbs(c.docs, c.words, config(2, 50));
  for (std::size_t iters : {1, 10, 100}) {
    expect_distribution(infer_theta(m, {0, 1, 500, 2}, iters, 4).theta);
  }
}

TEST(TopNTopics, SortedWithLowIndexTieBreak) {
  EXPECT_EQ(top_n_topics({{0.1, 0.6, 0.3}}, 2), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(top_n_topics({{0.25, 0.25, 0.25, 0.25}}, 3), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(top_n_topics({{0.3, 0.5, 0.2}}, 3), (std::vector<std::size_t>{1, 0, 2}));
  EXPECT_EQ(top_n_topics({{0.3, 0, 0.5, 0, 0, 0, 0, 0.2}}, 2),
            (std::vector<std::size_t>{2, 0}));
  EXPECT_THROW(top_n_topics({{0.5, 0.5}}, 3), ConfigError);
}

TEST(TopicTopWords, PlantedVocabularyAndEdgeCases) {
  const testing::PlantedCorpus c = testing::planted_corpus(200, 50, 7);
  const TopicModel m = fit_gibbs(c.docs, c.words, config(2, 200));
  for (std::size_t t = 0; t < 2; ++t) {
    const auto words = topic_top_words(m, t, 10);
    ASSERT_EQ(words.size(), 10u);
    const std::size_t owner = m.word_index.at(words[0]) / 10;
    for (const auto& w : words) EXPECT_EQ(m.word_index.at(w) / 10, owner) << w;
  }
  EXPECT_TRUE(topic_top_words(m, 0, 0).empty());
}

TEST(CorpusLogLikelihood, ClosedForms) {
  TopicModel m;
  m.k = 1;
  m.words = {"x", "y"};
  m.beta = neuro::Array2(1, 2, {0.8, 0.2});
  const std::vector<Document> docs = {{0}};
  const std::vector<TopicDistribution> thetas = {{{1.0}}};
  EXPECT_DOUBLE_EQ(corpus_log_likelihood(m, docs, thetas), std::log(0.8));
  EXPECT_EQ(corpus_log_likelihood(m, {}, {}), 0.0);
}

TEST(TopicModelIo, RoundTrip) {
  const testing::PlantedCorpus c = testing::planted_corpus(20, 10, 1);
  const TopicModel m = fit_gibbs(c.docs, c.words, config(2, 5));
  const auto dir = std::filesystem::temp_directory_path() / "topnn_lda_io";
  std::filesystem::create_directories(dir);
  save_topic_model(m, dir / "lda.json");
  EXPECT_TRUE(std::filesystem::exists(dir / "lda.beta.f64"));
  const TopicModel loaded = load_topic_model(dir / "lda.json");
  EXPECT_EQ(loaded.k, m.k);
  EXPECT_EQ(loaded.alpha, m.alpha);
  EXPECT_EQ(loaded.words, m.words);
  EXPECT_EQ(loaded.beta, m.beta);
  EXPECT_EQ(loaded.word_index.at("json"), 0u);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace topnn::topics
