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

#ifndef TOPNN_CORPUS_EXTRACT_H_
#define TOPNN_CORPUS_EXTRACT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace topnn::corpus {

struct RawMethod {
  std::string method_name;
  // Raw lexemes of the declaration and body, comments excluded.
  std::vector<std::string> code_tokens;
  // The doc comment directly preceding the declaration, delimiters included.
  std::optional<std::string> doc_comment;

  friend bool operator==(const RawMethod&, const RawMethod&) = default;
};

struct RawClass {
  std::string path;
  std::string class_name;
  // Every non-comment lexeme of the class, nested classes included.
  std::vector<std::string> class_tokens;
  // Methods of the class and of any nested classes, in source order.
  std::vector<RawMethod> methods;

  friend bool operator==(const RawClass&, const RawClass&) = default;
};

// One RawClass per top-level class, interface, enum or record. Braces are
// matched by counting; nested types are flattened into their outer class.
// Throws ParseError (with the byte offset) on unbalanced braces.
std::vector<RawClass> extract_classes(std::string_view source_text,
                                      std::string_view path = {});

// First sentence of a doc comment with Javadoc block tags, inline tag
// markup and HTML removed, not lowercased. Empty if nothing remains.
std::string first_sentence(std::string_view doc_comment);

// Lowercased first sentence, or nullopt when it has fewer than two
// alphabetic words.
std::optional<std::string> extract_summary(std::string_view doc_comment);

}  // namespace topnn::corpus

#endif  // TOPNN_CORPUS_EXTRACT_H_
