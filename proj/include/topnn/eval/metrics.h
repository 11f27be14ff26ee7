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

#ifndef TOPNN_EVAL_METRICS_H_
#define TOPNN_EVAL_METRICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace topnn::eval {

using Tokens = std::vector<std::string>;

// Corpus BLEU: clipped n-gram matches and candidate n-gram totals are summed
// over all pairs before forming precisions. For n >= 2 both sums get +1.
// Brevity penalty uses summed lengths. Empty candidates score 0.
double bleu(std::span<const Tokens> candidates, std::span<const Tokens> references,
            std::size_t max_n = 4);

double sentence_bleu(const Tokens& candidate, const Tokens& reference,
                     std::size_t max_n = 4);

std::size_t lcs_length(const Tokens& a, const Tokens& b);

// LCS-based F1. 0 when either side is empty.
double rouge_l(const Tokens& candidate, const Tokens& reference);

struct EvalReport {
  double corpus_bleu4 = 0.0;
  std::vector<double> per_sentence_bleu;
  double rouge_l_f1 = 0.0;  // mean over pairs
  double exact_match_rate = 0.0;
  std::size_t n = 0;
};

EvalReport evaluate(std::span<const Tokens> candidates,
                    std::span<const Tokens> references);

nlohmann::json to_json(const EvalReport& report);

// Whitespace tokenization.
Tokens split_words(std::string_view text);

}  // namespace topnn::eval

#endif  // TOPNN_EVAL_METRICS_H_
