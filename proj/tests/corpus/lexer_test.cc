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

#include <gtest/gtest.h>

#include "topnn/error.h"

namespace topnn::corpus {
namespace {

std::vector<std::string> texts(std::string_view src) {
  std::vector<std::string> out;
  for (const Token& t : lex(src)) out.push_back(t.text);
  return out;
}

TEST(Lexer, SplitsIdentifiersPunctuationAndOperators) {
  EXPECT_EQ(texts("a+=b>=c->d::e...f"),
            (std::vector<std::string>{"a", "+=", "b", ">=", "c", "->", "d", "::", "e", "...",
                                      "f"}));
}

TEST(Lexer, NestedGenericsCloseOneBracketAtATime) {
  EXPECT_EQ(texts("Map<K,List<V>>"),
            (std::vector<std::string>{"Map", "<", "K", ",", "List", "<", "V", ">", ">"}));
}

TEST(Lexer, NumbersIncludingHexExponentsAndSuffixes) {
  EXPECT_EQ(texts("1 0x1Fp-3 1.5e+10f 3L 1_000 .5"),
            (std::vector<std::string>{"1", "0x1Fp-3", "1.5e+10f", "3L", "1_000", ".5"}));
  for (const Token& t : lex("0x1Fp-3 1.5e+10f")) EXPECT_EQ(t.kind, TokenKind::kNumber);
}

TEST(Lexer, MemberAccessOnNumberIsNotAFraction) {
  EXPECT_EQ(texts("a[0].length"), (std::vector<std::string>{"a", "[", "0", "]", ".", "length"}));
}

TEST(Lexer, StringsCharsAndComments) {
  const auto tokens = lex("x = \"a \\\" b\"; // tail\n/** doc */ c = '\\n'; /* block */");
  ASSERT_EQ(tokens.size(), 11u);
  EXPECT_EQ(tokens[2].kind, TokenKind::kString);
  EXPECT_EQ(tokens[2].text, "\"a \\\" b\"");
  EXPECT_EQ(tokens[4].kind, TokenKind::kComment);
  EXPECT_FALSE(tokens[4].doc);
  EXPECT_TRUE(tokens[5].doc);
  EXPECT_EQ(tokens[8].kind, TokenKind::kChar);
  EXPECT_EQ(tokens[8].text, "'\\n'");
  ASSERT_EQ(tokens.back().kind, TokenKind::kComment);
}

TEST(Lexer, TextBlock) {
  const auto tokens = lex("s = \"\"\"\n  hi \"there\"\n  \"\"\";");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[2].kind, TokenKind::kString);
}

TEST(Lexer, OffsetsPointAtFirstByte) {
  const auto tokens = lex("ab  cd");
  EXPECT_EQ(tokens[0].offset, 0u);
  EXPECT_EQ(tokens[1].offset, 4u);
}

TEST(Lexer, UnterminatedConstructsReportOffset) {
  try {
    lex("int x; /* never closed");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
  EXPECT_THROW(lex("\"open"), ParseError);
  EXPECT_THROW(lex("'a"), ParseError);
}

TEST(Lexer, Keywords) {
  EXPECT_TRUE(is_java_keyword("return"));
  EXPECT_TRUE(is_java_keyword("void"));
  EXPECT_FALSE(is_java_keyword("writeTo"));
}

}  // namespace
}  // namespace topnn::corpus
