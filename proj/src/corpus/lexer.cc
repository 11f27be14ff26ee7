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

#include "topnn/corpus/lexer.h"

#include <algorithm>
#include <array>

#include "topnn/error.h"

namespace topnn::corpus {
namespace {

bool ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || c >= 0x80;
}

bool ident_part(unsigned char c) {
  return ident_start(c) || (c >= '0' && c <= '9');
}

bool digit(unsigned char c) { return c >= '0' && c <= '9'; }

// Shift operators are absent on purpose: "List<List<T>>" must close with
// two '>' tokens.
constexpr std::array<std::string_view, 19> kOperators = {
    "...", "->", "::", "==", "!=", "<=", ">=", "&&", "||", "++",
    "--",  "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^="};

}  // namespace

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = src.size();
  auto at = [&](std::size_t k) -> unsigned char {
    return k < n ? static_cast<unsigned char>(src[k]) : 0;
  };

  while (i < n) {
    const unsigned char c = at(i);
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
      ++i;
      continue;
    }
    const std::size_t start = i;

    if (c == '/' && at(i + 1) == '/') {
      while (i < n && src[i] != '\n') ++i;
      out.push_back({TokenKind::kComment, std::string(src.substr(start, i - start)),
                     start});
      continue;
    }
    if (c == '/' && at(i + 1) == '*') {
      const std::size_t close = src.find("*/", i + 2);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated block comment", start);
      }
      i = close + 2;
      Token t{TokenKind::kComment, std::string(src.substr(start, i - start)),
              start};
      // "/**/" is an empty block comment, not a doc comment.
      t.doc = t.text.size() > 4 && t.text.compare(0, 3, "/**") == 0;
      out.push_back(std::move(t));
      continue;
    }
    if (c == '"') {
      if (at(i + 1) == '"' && at(i + 2) == '"') {
        const std::size_t close = src.find("\"\"\"", i + 3);
        if (close == std::string_view::npos) {
          throw ParseError("unterminated text block", start);
        }
        i = close + 3;
      } else {
        ++i;
        while (true) {
          if (i >= n || src[i] == '\n') {
            throw ParseError("unterminated string literal", start);
          }
          if (src[i] == '\\') {
            i += 2;
            continue;
          }
          if (src[i] == '"') break;
          ++i;
        }
        ++i;
      }
      out.push_back({TokenKind::kString, std::string(src.substr(start, i - start)),
                     start});
      continue;
    }
    if (c == '\'') {
      ++i;
      while (true) {
        if (i >= n || src[i] == '\n') {
          throw ParseError("unterminated character literal", start);
        }
        if (src[i] == '\\') {
          i += 2;
          continue;
        }
        if (src[i] == '\'') break;
        ++i;
      }
      ++i;
      out.push_back({TokenKind::kChar, std::string(src.substr(start, i - start)),
                     start});
      continue;
    }
    if (ident_start(c)) {
      while (i < n && ident_part(at(i))) ++i;
      out.push_back({TokenKind::kIdentifier,
                     std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (digit(c) || (c == '.' && digit(at(i + 1)))) {
      const bool hex = c == '0' && (at(i + 1) == 'x' || at(i + 1) == 'X');
      while (i < n) {
        const unsigned char d = at(i);
        const unsigned char prev = at(i - 1);
        const bool exponent_sign =
            (d == '+' || d == '-') &&
            (hex ? (prev == 'p' || prev == 'P') : (prev == 'e' || prev == 'E'));
        // "0.length" in "a[0].length" is a number followed by member access.
        const bool fraction_dot =
            d == '.' && (digit(at(i + 1)) ||
                         (!ident_start(at(i + 1)) && at(i + 1) != '.'));
        if (ident_part(d) || fraction_dot || exponent_sign) {
          ++i;
        } else {
          break;
        }
      }
      out.push_back({TokenKind::kNumber, std::string(src.substr(start, i - start)),
                     start});
      continue;
    }
    std::size_t len = 1;
    for (std::string_view op : kOperators) {
      if (src.substr(i, op.size()) == op) {
        len = op.size();
        break;
      }
    }
    out.push_back({TokenKind::kPunct, std::string(src.substr(i, len)), start});
    i += len;
  }
  return out;
}

bool is_java_keyword(std::string_view word) {
  static constexpr std::array<std::string_view, 53> kKeywords = {
      "abstract",  "assert",     "boolean",   "break",      "byte",
      "case",      "catch",      "char",      "class",      "const",
      "continue",  "default",    "do",        "double",     "else",
      "enum",      "extends",    "final",     "finally",    "float",
      "for",       "goto",       "if",        "implements", "import",
      "instanceof", "int",       "interface", "long",       "native",
      "new",       "package",    "private",   "protected",  "public",
      "return",    "short",      "static",    "strictfp",   "super",
      "switch",    "synchronized", "this",    "throw",      "throws",
      "transient", "try",        "void",      "volatile",   "while",
      "true",      "false",      "null"};
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

}  // namespace topnn::corpus
