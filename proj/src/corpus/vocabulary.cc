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

#include "topnn/corpus/vocabulary.h"

#include <algorithm>
#include <utility>

#include "topnn/error.h"

namespace topnn::corpus {

Vocabulary::Vocabulary() {
  for (std::string_view t : kReservedTokens) add(t);
}

Vocabulary Vocabulary::from_tokens(std::vector<std::string> tokens) {
  if (tokens.size() < kReservedCount) {
    throw DataError("vocabulary has " + std::to_string(tokens.size()) +
                    " entries; the reserved tokens alone need 4");
  }
  for (std::size_t i = 0; i < kReservedCount; ++i) {
    if (tokens[i] != kReservedTokens[i]) {
      throw DataError("vocabulary entry " + std::to_string(i) + " is \"" +
                      tokens[i] + "\", expected \"" +
                      std::string(kReservedTokens[i]) + "\"");
    }
  }
  Vocabulary v;
  for (std::size_t i = kReservedCount; i < tokens.size(); ++i) {
    if (v.contains(tokens[i])) {
      throw DataError("duplicate vocabulary entry \"" + tokens[i] + "\"");
    }
    v.add(tokens[i]);
  }
  return v;
}

TokenId Vocabulary::add(std::string_view token) {
  auto it = ids_.find(std::string(token));
  if (it != ids_.end()) return it->second;
  const TokenId id = tokens_.size();
  tokens_.emplace_back(token);
  ids_.emplace(tokens_.back(), id);
  return id;
}

TokenId Vocabulary::id(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  return it == ids_.end() ? kUnk : it->second;
}

bool Vocabulary::contains(std::string_view token) const {
  return ids_.find(std::string(token)) != ids_.end();
}

const std::string& Vocabulary::token(TokenId id) const {
  if (id >= tokens_.size()) {
    throw DataError("token id " + std::to_string(id) +
                    " outside vocabulary of size " +
                    std::to_string(tokens_.size()));
  }
  return tokens_[id];
}

TokenCounts count_tokens(std::span<const std::vector<std::string>> sequences) {
  TokenCounts counts;
  for (const auto& seq : sequences) {
    for (const std::string& t : seq) ++counts[t];
  }
  return counts;
}

Vocabulary build_vocabulary(const TokenCounts& counts, std::size_t max_size,
                            std::size_t min_count) {
  if (max_size <= Vocabulary::kReservedCount) {
    throw ConfigError("vocabulary max_size must exceed 4, got " +
                      std::to_string(max_size));
  }
  if (counts.empty()) throw DataError("cannot build a vocabulary from an empty corpus");

  std::vector<std::pair<std::string_view, std::size_t>> ranked;
  for (const auto& [token, count] : counts) {
    if (count < min_count) continue;
    bool reserved = false;
    for (std::string_view r : Vocabulary::kReservedTokens) reserved |= token == r;
    if (!reserved) ranked.emplace_back(token, count);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  Vocabulary vocab;
  for (const auto& [token, count] : ranked) {
    if (vocab.size() >= max_size) break;
    vocab.add(token);
  }
  return vocab;
}

Vocabulary build_vocabulary(std::span<const std::vector<std::string>> sequences,
                            std::size_t max_size, std::size_t min_count) {
  return build_vocabulary(count_tokens(sequences), max_size, min_count);
}

}  // namespace topnn::corpus
