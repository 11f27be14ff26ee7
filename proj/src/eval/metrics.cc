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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "topnn/error.h"

namespace topnn::eval {

namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts ngrams(const Tokens& tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

struct BleuCounts {
  std::vector<double> matches;
  std::vector<double> totals;
  double candidate_length = 0.0;
  double reference_length = 0.0;
};

void accumulate(BleuCounts& acc, const Tokens& cand, const Tokens& ref,
                std::size_t max_n) {
  acc.candidate_length += static_cast<double>(cand.size());
  acc.reference_length += static_cast<double>(ref.size());
  for (std::size_t n = 1; n <= max_n; ++n) {
    const NgramCounts c = ngrams(cand, n);
    const NgramCounts r = ngrams(ref, n);
    for (const auto& [gram, count] : c) {
      const auto it = r.find(gram);
      if (it != r.end()) acc.matches[n - 1] += static_cast<double>(std::min(count, it->second));
      acc.totals[n - 1] += static_cast<double>(count);
    }
  }
}

double score(const BleuCounts& acc, std::size_t max_n) {
  if (acc.candidate_length == 0.0) return 0.0;
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    double m = acc.matches[n - 1];
    double t = acc.totals[n - 1];
    if (n >= 2) {
      m += 1.0;
      t += 1.0;
    }
    if (m == 0.0) return 0.0;
    log_sum += std::log(m / t);
  }
  const double c = acc.candidate_length;
  const double r = acc.reference_length;
  const double bp = c >= r ? 1.0 : std::exp(1.0 - r / c);
  return bp * std::exp(log_sum / static_cast<double>(max_n));
}

}  // namespace

double bleu(std::span<const Tokens> candidates, std::span<const Tokens> references,
            std::size_t max_n) {
  if (candidates.size() != references.size()) {
    throw DataError("bleu: " + std::to_string(candidates.size()) +
                    " candidates but " + std::to_string(references.size()) +
                    " references");
  }
  if (max_n == 0) throw ConfigError("bleu: max_n must be positive");
  BleuCounts acc{std::vector<double>(max_n, 0.0), std::vector<double>(max_n, 0.0)};
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    accumulate(acc, candidates[i], references[i], max_n);
  }
  return score(acc, max_n);
}

double sentence_bleu(const Tokens& candidate, const Tokens& reference,
                     std::size_t max_n) {
  return bleu(std::span<const Tokens>(&candidate, 1),
              std::span<const Tokens>(&reference, 1), max_n);
}

std::size_t lcs_length(const Tokens& a, const Tokens& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double rouge_l(const Tokens& candidate, const Tokens& reference) {
  if (candidate.empty() || reference.empty()) return 0.0;
  const double lcs = static_cast<double>(lcs_length(candidate, reference));
  if (lcs == 0.0) return 0.0;
  const double p = lcs / static_cast<double>(candidate.size());
  const double r = lcs / static_cast<double>(reference.size());
  return 2.0 * p * r / (p + r);
}

EvalReport evaluate(std::span<const Tokens> candidates,
                    std::span<const Tokens> references) {
  EvalReport report;
  report.corpus_bleu4 = bleu(candidates, references, 4);
  report.n = candidates.size();
  if (report.n == 0) return report;
  double rouge = 0.0;
  std::size_t exact = 0;
  for (std::size_t i = 0; i < report.n; ++i) {
    report.per_sentence_bleu.push_back(sentence_bleu(candidates[i], references[i]));
    rouge += rouge_l(candidates[i], references[i]);
    if (candidates[i] == references[i]) ++exact;
  }
  report.rouge_l_f1 = rouge / static_cast<double>(report.n);
  report.exact_match_rate = static_cast<double>(exact) / static_cast<double>(report.n);
  return report;
}

nlohmann::json to_json(const EvalReport& r) {
  return {{"corpus_bleu4", r.corpus_bleu4},
          {"per_sentence_bleu", r.per_sentence_bleu},
          {"rouge_l_f1", r.rouge_l_f1},
          {"exact_match_rate", r.exact_match_rate},
          {"n", r.n}};
}

Tokens split_words(std::string_view text) {
  Tokens out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace topnn::eval
