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

#ifndef TOPNN_CORPUS_VOCABULARY_H_
#define TOPNN_CORPUS_VOCABULARY_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace topnn::corpus {

using TokenId = std::size_t;

// Bidirectional token <-> id map. Ids 0..3 are reserved for padding,
// unknown, begin and end of sequence; lookups of unseen tokens return kUnk.
class Vocabulary {
 public:
  static constexpr TokenId kPad = 0;
  static constexpr TokenId kUnk = 1;
  static constexpr TokenId kBos = 2;
  static constexpr TokenId kEos = 3;
  static constexpr std::size_t kReservedCount = 4;
  static constexpr std::string_view kReservedTokens[kReservedCount] = {
      "<pad>", "<unk>", "<s>", "</s>"};

  // Only the reserved entries.
  Vocabulary();

  // Tokens in id order. The first four must be the reserved tokens; the rest
  // must be distinct. Throws DataError otherwise.
  static Vocabulary from_tokens(std::vector<std::string> tokens);

  // Appends a token if absent; returns its id either way.
  TokenId add(std::string_view token);

  TokenId id(std::string_view token) const;
  bool contains(std::string_view token) const;
  // Throws DataError for ids past the end.
  const std::string& token(TokenId id) const;

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> ids_;
};

using TokenCounts = std::map<std::string, std::size_t, std::less<>>;

TokenCounts count_tokens(std::span<const std::vector<std::string>> sequences);

// Keeps tokens seen at least min_count times, ranked by descending frequency
// then lexicographically, truncated so the vocabulary (reserved entries
// included) has at most max_size entries. Throws ConfigError when
// max_size <= 4 and DataError when there are no tokens at all.
Vocabulary build_vocabulary(const TokenCounts& counts, std::size_t max_size,
                            std::size_t min_count);
Vocabulary build_vocabulary(std::span<const std::vector<std::string>> sequences,
                            std::size_t max_size, std::size_t min_count);

}  // namespace topnn::corpus

#endif  // TOPNN_CORPUS_VOCABULARY_H_
