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

#include "topnn/corpus/extract.h"

#include <cctype>
#include <cstddef>
#include <string>

#include "topnn/corpus/lexer.h"
#include "topnn/error.h"

namespace topnn::corpus {
namespace {

bool is_type_keyword(const Token& t) {
  return t.kind == TokenKind::kIdentifier &&
         (t.text == "class" || t.text == "interface" || t.text == "enum" ||
          t.text == "record");
}

bool is_punct(const Token& t, std::string_view p) {
  return t.kind == TokenKind::kPunct && t.text == p;
}

class Extractor {
 public:
  explicit Extractor(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::vector<RawClass> run(std::string_view path) {
    std::vector<RawClass> classes;
    std::size_t decl_start = 0;
    std::size_t i = 0;
    while (i < toks_.size()) {
      const Token& t = toks_[i];
      if (t.kind == TokenKind::kComment) {
        ++i;
        continue;
      }
      if (is_punct(t, ";")) {
        decl_start = i + 1;
        ++i;
        continue;
      }
      if (is_punct(t, "}")) throw ParseError("unmatched '}'", t.offset);
      if (is_punct(t, "{")) {
        i = match(i, "{", "}") + 1;
        decl_start = i;
        continue;
      }
      if (is_punct(t, "@") && i + 1 < toks_.size() &&
          is_type_keyword(toks_[i + 1])) {
        // "@interface" declares an annotation type.
        ++i;
        continue;
      }
      if (is_type_keyword(t) && !previous_is_dot(i)) {
        RawClass cls;
        cls.path = std::string(path);
        const std::size_t close = parse_type(i, cls);
        for (std::size_t k = decl_start; k <= close; ++k) {
          if (toks_[k].kind != TokenKind::kComment) {
            cls.class_tokens.push_back(toks_[k].text);
          }
        }
        classes.push_back(std::move(cls));
        i = close + 1;
        decl_start = i;
        continue;
      }
      ++i;
    }
    return classes;
  }

 private:
  bool previous_is_dot(std::size_t i) const {
    for (std::size_t k = i; k-- > 0;) {
      if (toks_[k].kind == TokenKind::kComment) continue;
      return is_punct(toks_[k], ".");
    }
    return false;
  }

  // Index of the token closing the bracket opened at `open`.
  std::size_t match(std::size_t open, std::string_view lhs,
                    std::string_view rhs) const {
    int depth = 0;
    for (std::size_t k = open; k < toks_.size(); ++k) {
      if (toks_[k].kind != TokenKind::kPunct) continue;
      if (toks_[k].text == lhs) {
        ++depth;
      } else if (toks_[k].text == rhs) {
        if (--depth == 0) return k;
      }
    }
    throw ParseError("unclosed '" + std::string(lhs) + "'", toks_[open].offset);
  }

  // Parses a type declaration starting at its keyword. Records the class
  // name on the first (outermost) call and appends methods. Returns the
  // index of the closing brace.
  std::size_t parse_type(std::size_t keyword, RawClass& cls) {
    std::size_t k = keyword + 1;
    while (k < toks_.size() && toks_[k].kind == TokenKind::kComment) ++k;
    if (k >= toks_.size() || toks_[k].kind != TokenKind::kIdentifier) {
      throw ParseError("type declaration without a name", toks_[keyword].offset);
    }
    if (cls.class_name.empty()) cls.class_name = toks_[k].text;
    // Skip type parameters, record components, extends/implements clauses.
    while (k < toks_.size() && !is_punct(toks_[k], "{")) {
      if (is_punct(toks_[k], ";") || is_punct(toks_[k], "}")) {
        throw ParseError("type declaration without a body",
                         toks_[keyword].offset);
      }
      if (is_punct(toks_[k], "(")) {
        k = match(k, "(", ")");
      }
      ++k;
    }
    if (k >= toks_.size()) {
      throw ParseError("type declaration without a body", toks_[keyword].offset);
    }
    return parse_body(k, cls);
  }

  // Walks a type body at member level. Returns the index of the closing
  // brace.
  std::size_t parse_body(std::size_t open, RawClass& cls) {
    std::size_t decl_start = open + 1;
    std::optional<std::string> pending_doc;
    bool saw_equals = false;
    auto reset = [&](std::size_t next) {
      decl_start = next;
      pending_doc.reset();
      saw_equals = false;
    };

    std::size_t i = open + 1;
    while (i < toks_.size()) {
      const Token& t = toks_[i];
      if (t.kind == TokenKind::kComment) {
        if (t.doc) pending_doc = t.text;
        ++i;
        continue;
      }
      if (is_punct(t, "}")) return i;
      if (is_punct(t, ";")) {
        reset(i + 1);
        ++i;
        continue;
      }
      if (is_punct(t, "=")) {
        saw_equals = true;
        ++i;
        continue;
      }
      if (is_punct(t, "@") && i + 1 < toks_.size() &&
          toks_[i + 1].kind == TokenKind::kIdentifier &&
          !is_type_keyword(toks_[i + 1])) {
        // Annotation, possibly qualified and with arguments.
        std::size_t k = i + 2;
        while (k + 1 < toks_.size() && is_punct(toks_[k], ".") &&
               toks_[k + 1].kind == TokenKind::kIdentifier) {
          k += 2;
        }
        if (k < toks_.size() && is_punct(toks_[k], "(")) k = match(k, "(", ")") + 1;
        i = k;
        continue;
      }
      if (is_type_keyword(t) && !previous_is_dot(i) && !saw_equals) {
        const std::size_t close = parse_type(i, cls);
        reset(close + 1);
        i = close + 1;
        continue;
      }
      if (is_punct(t, "(")) {
        const std::size_t close_paren = match(i, "(", ")");
        if (saw_equals || i == 0 || toks_[i - 1].kind != TokenKind::kIdentifier) {
          i = close_paren + 1;
          continue;
        }
        const std::string name = toks_[i - 1].text;
        std::size_t k = close_paren + 1;
        // Skip a throws clause or array brackets up to the body.
        while (k < toks_.size() && toks_[k].kind != TokenKind::kComment &&
               (toks_[k].kind == TokenKind::kIdentifier || is_punct(toks_[k], ".") ||
                is_punct(toks_[k], ",") || is_punct(toks_[k], "<") ||
                is_punct(toks_[k], ">") || is_punct(toks_[k], "[") ||
                is_punct(toks_[k], "]"))) {
          ++k;
        }
        while (k < toks_.size() && toks_[k].kind == TokenKind::kComment) ++k;
        if (k < toks_.size() && is_punct(toks_[k], "{")) {
          const std::size_t close = match(k, "{", "}");
          RawMethod m;
          m.method_name = name;
          m.doc_comment = pending_doc;
          for (std::size_t j = decl_start; j <= close; ++j) {
            if (toks_[j].kind != TokenKind::kComment) {
              m.code_tokens.push_back(toks_[j].text);
            }
          }
          cls.methods.push_back(std::move(m));
          reset(close + 1);
          i = close + 1;
        } else {
          // Abstract or interface method, enum constant, annotation member.
          i = k;
        }
        continue;
      }
      if (is_punct(t, "{")) {
        const std::size_t close = match(i, "{", "}");
        if (!saw_equals) {
          // Initializer block or enum constant body.
          reset(close + 1);
        }
        i = close + 1;
        continue;
      }
      ++i;
    }
    throw ParseError("unclosed '{'", toks_[open].offset);
  }

  std::vector<Token> toks_;
};

std::string strip_comment_markup(std::string_view doc) {
  std::string_view body = doc;
  if (body.substr(0, 3) == "/**") {
    body.remove_prefix(3);
  } else if (body.substr(0, 2) == "/*") {
    body.remove_prefix(2);
  }
  if (body.size() >= 2 && body.substr(body.size() - 2) == "*/") {
    body.remove_suffix(2);
  }

  // Drop leading "*" decoration per line and stop at the block tag section.
  std::string text;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t eol = body.find('\n', pos);
    if (eol == std::string_view::npos) eol = body.size();
    std::string_view line = body.substr(pos, eol - pos);
    std::size_t k = 0;
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    while (k < line.size() && line[k] == '*') ++k;
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    line.remove_prefix(k);
    if (!line.empty() && line.front() == '@') break;
    text.append(line);
    text.push_back(' ');
    pos = eol + 1;
  }
  return text;
}

// Replaces {@tag content} with its readable text.
std::string expand_inline_tags(const std::string& in) {
  std::string out;
  std::size_t i = 0;
  while (i < in.size()) {
    if (in.compare(i, 2, "{@") != 0) {
      out.push_back(in[i++]);
      continue;
    }
    const std::size_t close = in.find('}', i);
    if (close == std::string::npos) {
      out.append(in, i, std::string::npos);
      break;
    }
    std::string inner = in.substr(i + 2, close - i - 2);
    i = close + 1;
    std::size_t sp = inner.find_first_of(" \t");
    const std::string tag = inner.substr(0, sp);
    std::string content =
        sp == std::string::npos ? std::string() : inner.substr(sp + 1);
    if (tag == "link" || tag == "linkplain") {
      std::size_t label = content.find_first_of(" \t");
      if (label != std::string::npos) {
        content = content.substr(label + 1);
      } else {
        // Reference only: "pkg.Type#member(args)" reads as "Type member".
        const std::size_t paren = content.find('(');
        if (paren != std::string::npos) content.resize(paren);
        std::string type = content;
        std::string member;
        const std::size_t hash = content.find('#');
        if (hash != std::string::npos) {
          type = content.substr(0, hash);
          member = content.substr(hash + 1);
        }
        const std::size_t dot = type.rfind('.');
        if (dot != std::string::npos) type = type.substr(dot + 1);
        content = type.empty() ? member : (member.empty() ? type : type + " " + member);
      }
    } else if (tag != "code" && tag != "literal" && tag != "value") {
      content.clear();
    }
    out.append(content);
  }
  return out;
}

std::string strip_html(const std::string& in) {
  std::string out;
  std::size_t i = 0;
  while (i < in.size()) {
    if (in[i] == '<') {
      const std::size_t close = in.find('>', i);
      if (close != std::string::npos) {
        out.push_back(' ');
        i = close + 1;
        continue;
      }
    }
    if (in[i] == '&') {
      static constexpr std::pair<std::string_view, char> kEntities[] = {
          {"&lt;", '<'}, {"&gt;", '>'}, {"&amp;", '&'}, {"&nbsp;", ' '},
          {"&quot;", '"'}};
      bool replaced = false;
      for (const auto& [entity, ch] : kEntities) {
        if (in.compare(i, entity.size(), entity) == 0) {
          out.push_back(ch);
          i += entity.size();
          replaced = true;
          break;
        }
      }
      if (replaced) continue;
    }
    out.push_back(in[i++]);
  }
  return out;
}

std::string collapse_whitespace(const std::string& in) {
  std::string out;
  bool space = false;
  for (char c : in) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
    } else {
      if (space) out.push_back(' ');
      space = false;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::vector<RawClass> extract_classes(std::string_view source_text,
                                      std::string_view path) {
  Extractor extractor(lex(source_text));
  return extractor.run(path);
}

std::string first_sentence(std::string_view doc_comment) {
  std::string text =
      collapse_whitespace(strip_html(expand_inline_tags(strip_comment_markup(doc_comment))));
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '.' &&
        (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
      text.resize(i);
      break;
    }
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.pop_back();
  }
  return text;
}

std::optional<std::string> extract_summary(std::string_view doc_comment) {
  std::string sentence = first_sentence(doc_comment);
  int alphabetic_words = 0;
  bool in_word = false;
  bool has_alpha = false;
  for (std::size_t i = 0; i <= sentence.size(); ++i) {
    const bool sep = i == sentence.size() ||
                     std::isspace(static_cast<unsigned char>(sentence[i]));
    if (sep) {
      if (in_word && has_alpha) ++alphabetic_words;
      in_word = has_alpha = false;
      continue;
    }
    in_word = true;
    if (std::isalpha(static_cast<unsigned char>(sentence[i]))) has_alpha = true;
  }
  if (alphabetic_words < 2) return std::nullopt;
  for (char& c : sentence) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return sentence;
}

}  // namespace topnn::corpus
