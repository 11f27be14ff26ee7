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

#ifndef TOPNN_CORPUS_SPLIT_H_
#define TOPNN_CORPUS_SPLIT_H_

#include <string>
#include <string_view>
#include <vector>

namespace topnn::corpus {

// Splits an identifier into lowercase subtokens at camelCase boundaries,
// acronym ends ("HTTPServer" -> http, server), underscores and other
// non-alphanumeric characters, and letter/digit transitions. Digit runs are
// kept as their own pieces.
std::vector<std::string> split_identifier(std::string_view ident);

// Network input tokens for raw method lexemes: identifiers are split into
// subtokens, keywords and punctuation are kept, numbers become "<num>",
// character literals "<chr>", and string literals the subtokens of their
// contents.
std::vector<std::string> normalize_code_tokens(
    const std::vector<std::string>& lexemes);

// Reference summary tokens: the first sentence of the doc comment split into
// lowercase subtokens, punctuation dropped.
std::vector<std::string> summary_tokens(std::string_view doc_comment);

// Topic-model document for a class: alphabetic identifier subtokens of at
// least two characters, Java keywords excluded.
std::vector<std::string> class_document(const std::vector<std::string>& class_tokens);

inline constexpr std::string_view kNumberToken = "<num>";
inline constexpr std::string_view kCharToken = "<chr>";

}  // namespace topnn::corpus

#endif  // TOPNN_CORPUS_SPLIT_H_
