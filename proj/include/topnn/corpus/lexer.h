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

#ifndef TOPNN_CORPUS_LEXER_H_
#define TOPNN_CORPUS_LEXER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace topnn::corpus {

enum class TokenKind {
  kIdentifier,  // identifiers and keywords
  kNumber,
  kString,      // string literals and text blocks, quotes included
  kChar,
  kPunct,
  kComment,     // line and block comments, delimiters included
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset;  // byte offset of the first character
  bool doc = false;    // comment starting with "/**"
};

// Splits Java-like source into tokens. Throws ParseError on unterminated
// comments, strings or character literals.
std::vector<Token> lex(std::string_view source);

bool is_java_keyword(std::string_view word);

}  // namespace topnn::corpus

#endif  // TOPNN_CORPUS_LEXER_H_
