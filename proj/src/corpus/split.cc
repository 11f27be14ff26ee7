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

#include "topnn/corpus/split.h"

#include <cctype>

#include "topnn/corpus/extract.h"
#include "topnn/corpus/lexer.h"

namespace topnn::corpus {
namespace {

enum class CharClass { kSeparator, kUpper, kLower, kDigit };

CharClass classify(unsigned char c) {
  if (c >= 'A' && c <= 'Z') return CharClass::kUpper;
  // Non-ASCII bytes are treated as lowercase letters so they stay in words.
  if ((c >= 'a' && c <= 'z') || c >= 0x80) return CharClass::kLower;
  if (c >= '0' && c <= '9') return CharClass::kDigit;
  return CharClass::kSeparator;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

std::vector<std::string> split_identifier(std::string_view ident) {
  std::vector<std::string> pieces;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    if (end > start) pieces.push_back(lowercase(ident.substr(start, end - start)));
    start = end;
  };
  for (std::size_t i = 0; i < ident.size(); ++i) {
    const CharClass cur = classify(static_cast<unsigned char>(ident[i]));
    if (cur == CharClass::kSeparator) {
      flush(i);
      start = i + 1;
      continue;
    }
    if (i == start) continue;
    const CharClass prev = classify(static_cast<unsigned char>(ident[i - 1]));
    const bool boundary =
        (prev == CharClass::kLower && cur == CharClass::kUpper) ||
        ((prev == CharClass::kDigit) != (cur == CharClass::kDigit)) ||
        // End of an acronym: "HTTPServer" splits before the 'S'.
        (prev == CharClass::kUpper && cur == CharClass::kUpper &&
         i + 1 < ident.size() &&
         classify(static_cast<unsigned char>(ident[i + 1])) == CharClass::kLower);
    if (boundary) flush(i);
  }
  flush(ident.size());
  return pieces;
}

std::vector<std::string> normalize_code_tokens(
    const std::vector<std::string>& lexemes) {
  std::vector<std::string> out;
  for (const std::string& lex : lexemes) {
    if (lex.empty()) continue;
    const auto c = static_cast<unsigned char>(lex.front());
    if (c == '"') {
      for (auto& piece : split_identifier(lex)) out.push_back(std::move(piece));
    } else if (c == '\'') {
      out.emplace_back(kCharToken);
    } else if (std::isdigit(c) ||
               (c == '.' && lex.size() > 1 &&
                std::isdigit(static_cast<unsigned char>(lex[1])))) {
      out.emplace_back(kNumberToken);
    } else if (std::isalpha(c) || c == '_' || c == '$' || c >= 0x80) {
      if (is_java_keyword(lex)) {
        out.push_back(lex);
      } else {
        for (auto& piece : split_identifier(lex)) out.push_back(std::move(piece));
      }
    } else {
      out.push_back(lex);
    }
  }
  return out;
}

std::vector<std::string> summary_tokens(std::string_view doc_comment) {
  return split_identifier(first_sentence(doc_comment));
}

std::vector<std::string> class_document(
    const std::vector<std::string>& class_tokens) {
  std::vector<std::string> out;
  for (const std::string& lex : class_tokens) {
    if (lex.empty()) continue;
    const auto c = static_cast<unsigned char>(lex.front());
    if (!(std::isalpha(c) || c == '_' || c == '$') || is_java_keyword(lex)) {
      continue;
    }
    for (auto& piece : split_identifier(lex)) {
      bool alphabetic = piece.size() >= 2;
      for (char ch : piece) {
        if (!std::isalpha(static_cast<unsigned char>(ch))) alphabetic = false;
      }
      if (alphabetic) out.push_back(std::move(piece));
    }
  }
  return out;
}

}  // namespace topnn::corpus
