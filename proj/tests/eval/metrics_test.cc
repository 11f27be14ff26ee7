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

#include "topnn/eval/metrics.h"

#include <gtest/gtest.h>

#include <cmath>

#include "topnn/error.h"

namespace topnn::eval {
namespace {

Tokens words(std::string_view s) { return split_words(s); }

TEST(Bleu, IdenticalCorpusScoresOne) {
  const std::vector<Tokens> x = {words("returns the current size of the list"),
                                 words("creates a new packet")};
  EXPECT_DOUBLE_EQ(bleu(x, x), 1.0);
}

TEST(Bleu, RepeatedWordIsClipped) {
  // unigram 1/4, then add-one: 1/4, 1/3, 1/2; no brevity penalty
  const std::vector<Tokens> cand = {words("the the the the")};
  const std::vector<Tokens> ref = {words("the cat sat down")};
  const double expected = std::pow(0.25 * 0.25 * (1.0 / 3.0) * 0.5, 0.25);
  EXPECT_NEAR(bleu(cand, ref), expected, 1e-12);
}

TEST(Bleu, BrevityPenaltyApplies) {
  const std::vector<Tokens> cand = {words("a b")};
  const std::vector<Tokens> ref = {words("a b c d")};
  const double precisions = 1.0 * (2.0 / 2.0) * 1.0 * 1.0;
  EXPECT_NEAR(bleu(cand, ref), std::exp(1.0 - 2.0) * std::pow(precisions, 0.25), 1e-12);
}

TEST(Bleu, EmptyCandidateScoresZero) {
  const std::vector<Tokens> cand = {Tokens{}};
  const std::vector<Tokens> ref = {words("a b c")};
  EXPECT_EQ(bleu(cand, ref), 0.0);
}

TEST(Bleu, LengthMismatchIsDataError) {
  const std::vector<Tokens> cand = {words("a")};
  const std::vector<Tokens> ref = {words("a"), words("b")};
  EXPECT_THROW(bleu(cand, ref), DataError);
}

TEST(Bleu, CorpusOrderDoesNotMatter) {
  std::vector<Tokens> cand = {words("gets the name"), words("sets a value here"),
                              words("closes stream")};
  std::vector<Tokens> ref = {words("gets the name of it"), words("sets the value"),
                             words("closes the stream now")};
  const double before = bleu(cand, ref);
  std::swap(cand[0], cand[2]);
  std::swap(ref[0], ref[2]);
  EXPECT_DOUBLE_EQ(bleu(cand, ref), before);
}

TEST(RougeL, KnownValues) {
  EXPECT_DOUBLE_EQ(rouge_l(words("a b c d"), words("a c d e")), 0.75);
  EXPECT_EQ(rouge_l(words("a b"), words("c d")), 0.0);
  EXPECT_EQ(rouge_l(words("x y z"), words("x y z")), 1.0);
  EXPECT_EQ(rouge_l(Tokens{}, words("x")), 0.0);
  EXPECT_EQ(lcs_length(words("a b c d"), words("b d")), 2u);
}

TEST(Evaluate, ReportsAllMetrics) {
  const std::vector<Tokens> cand = {words("a b c d"), words("e f")};
  const std::vector<Tokens> ref = {words("a b c d"), words("g h")};
  const EvalReport r = evaluate(cand, ref);
  EXPECT_EQ(r.n, 2u);
  EXPECT_EQ(r.exact_match_rate, 0.5);
  EXPECT_EQ(r.rouge_l_f1, 0.5);
  ASSERT_EQ(r.per_sentence_bleu.size(), 2u);
  EXPECT_DOUBLE_EQ(r.per_sentence_bleu[0], 1.0);
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j.at("n"), 2);
  EXPECT_TRUE(j.contains("corpus_bleu4"));
}

TEST(SplitWords, CollapsesWhitespace) {
  EXPECT_EQ(split_words("  a\tb \n c "), (Tokens{"a", "b", "c"}));
  EXPECT_TRUE(split_words("   ").empty());
}

}  // namespace
}  // namespace topnn::eval
