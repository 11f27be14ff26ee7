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

#include "topnn/corpus/serialize.h"

#include <algorithm>

#include "topnn/error.h"
#include "topnn/io.h"

namespace topnn::corpus {

using nlohmann::json;

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

json to_json(const RawClass& cls) {
  json methods = json::array();
  for (const RawMethod& m : cls.methods) {
    methods.push_back({{"name", m.method_name},
                       {"code", m.code_tokens},
                       {"doc", m.doc_comment ? json(*m.doc_comment) : json(nullptr)}});
  }
  return {{"path", cls.path},
          {"class", cls.class_name},
          {"tokens", cls.class_tokens},
          {"methods", std::move(methods)}};
}

RawClass class_from_json(const json& j) {
  return guarded("class record", [&] {
    RawClass cls;
    cls.path = j.at("path").get<std::string>();
    cls.class_name = j.at("class").get<std::string>();
    cls.class_tokens = j.at("tokens").get<std::vector<std::string>>();
    for (const json& m : j.at("methods")) {
      RawMethod method;
      method.method_name = m.at("name").get<std::string>();
      method.code_tokens = m.at("code").get<std::vector<std::string>>();
      if (m.contains("doc") && !m.at("doc").is_null()) {
        method.doc_comment = m.at("doc").get<std::string>();
      }
      cls.methods.push_back(std::move(method));
    }
    return cls;
  });
}

json to_json(const InstanceRecord& r) {
  return {{"code", r.code},
          {"topics", r.topics},
          {"summary", r.summary},
          {"class", r.class_name},
          {"method", r.method}};
}

InstanceRecord record_from_json(const json& j) {
  return guarded("instance record", [&] {
    InstanceRecord r;
    r.code = j.at("code").get<std::vector<std::string>>();
    r.topics = j.at("topics").get<std::vector<std::size_t>>();
    r.summary = j.at("summary").get<std::vector<std::string>>();
    r.class_name = j.at("class").get<std::string>();
    r.method = j.at("method").get<std::string>();
    return r;
  });
}

json to_json(const Vocabulary& vocab) { return vocab.tokens(); }

Vocabulary vocabulary_from_json(const json& j) {
  return guarded("vocabulary", [&] {
    return Vocabulary::from_tokens(j.get<std::vector<std::string>>());
  });
}

std::vector<RawClass> read_classes(const std::filesystem::path& path) {
  std::vector<RawClass> out;
  for (const json& j : io::read_jsonl(path)) out.push_back(class_from_json(j));
  return out;
}

void write_classes(const std::filesystem::path& path,
                   std::span<const RawClass> classes) {
  std::vector<json> lines;
  lines.reserve(classes.size());
  for (const RawClass& c : classes) lines.push_back(to_json(c));
  io::write_jsonl(path, lines);
}

std::vector<InstanceRecord> read_records(const std::filesystem::path& path) {
  std::vector<InstanceRecord> out;
  for (const json& j : io::read_jsonl(path)) out.push_back(record_from_json(j));
  return out;
}

void write_records(const std::filesystem::path& path,
                   std::span<const InstanceRecord> records) {
  std::vector<json> lines;
  lines.reserve(records.size());
  for (const InstanceRecord& r : records) lines.push_back(to_json(r));
  io::write_jsonl(path, lines);
}

DirectoryExtraction extract_directory(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) {
    throw DataError(root.string() + " is not a directory");
  }
  std::vector<std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && entry.path().extension() == ".java") {
      files.push_back(fs::relative(entry.path(), root).generic_string());
    }
  }
  std::sort(files.begin(), files.end());

  DirectoryExtraction out;
  for (const std::string& rel : files) {
    try {
      auto classes = extract_classes(io::read_file(root / rel), rel);
      for (auto& c : classes) out.classes.push_back(std::move(c));
    } catch (const ParseError& e) {
      out.errors.push_back({rel, e.what()});
    }
  }
  return out;
}

}  // namespace topnn::corpus
