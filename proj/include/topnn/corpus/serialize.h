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

#ifndef TOPNN_CORPUS_SERIALIZE_H_
#define TOPNN_CORPUS_SERIALIZE_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "topnn/corpus/extract.h"
#include "topnn/corpus/instances.h"
#include "topnn/corpus/vocabulary.h"

namespace topnn::corpus {

// {"path", "class", "tokens": [..], "methods": [{"name", "code": [..], "doc"}]}
nlohmann::json to_json(const RawClass& cls);
RawClass class_from_json(const nlohmann::json& j);

// {"code": [..], "topics": [..], "summary": [..], "class", "method"}
nlohmann::json to_json(const InstanceRecord& record);
InstanceRecord record_from_json(const nlohmann::json& j);

// A JSON array of tokens in id order.
nlohmann::json to_json(const Vocabulary& vocab);
Vocabulary vocabulary_from_json(const nlohmann::json& j);

std::vector<RawClass> read_classes(const std::filesystem::path& path);
void write_classes(const std::filesystem::path& path,
                   std::span<const RawClass> classes);
std::vector<InstanceRecord> read_records(const std::filesystem::path& path);
void write_records(const std::filesystem::path& path,
                   std::span<const InstanceRecord> records);

struct FileError {
  std::string path;
  std::string message;
};

struct DirectoryExtraction {
  std::vector<RawClass> classes;  // ordered by file path, then source order
  std::vector<FileError> errors;  // files that failed to parse
};

// Extracts every .java file under root. Paths in the result are relative to
// root with '/' separators. Files that fail to parse are reported and
// skipped.
DirectoryExtraction extract_directory(const std::filesystem::path& root);

}  // namespace topnn::corpus

#endif  // TOPNN_CORPUS_SERIALIZE_H_
