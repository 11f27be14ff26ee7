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

#include "topnn/corpus/instances.h"

#include <algorithm>

#include "topnn/corpus/split.h"
#include "topnn/error.h"

namespace topnn::corpus {

TokenId OovMap::add(const std::string& token) {
  if (auto id = find(token)) return *id;
  tokens_.push_back(token);
  return base_ + tokens_.size() - 1;
}

std::optional<TokenId> OovMap::find(std::string_view token) const {
  auto it = std::find(tokens_.begin(), tokens_.end(), token);
  if (it == tokens_.end()) return std::nullopt;
  return base_ + static_cast<std::size_t>(it - tokens_.begin());
}

const std::string& OovMap::token(TokenId id) const {
  if (!contains_id(id)) {
    throw DataError("extended id " + std::to_string(id) +
                    " is not in the source OOV map");
  }
  return tokens_[id - base_];
}

std::vector<std::size_t> class_topics(const RawClass& cls,
                                      const topics::TopicModel& model,
                                      const BuildOptions& options) {
  const std::vector<std::string> doc = class_document(cls.class_tokens);
  const topics::TopicDistribution theta = topics::infer_theta(
      model, model.encode(doc), options.infer_iterations, options.seed);
  std::vector<std::size_t> ids =
      topics::top_n_topics(theta, std::min(options.n_topics, model.k));
  ids.resize(options.n_topics, model.k);
  return ids;
}

RecordBuild build_instance_records(std::span<const RawClass> classes,
                                   const topics::TopicModel& model,
                                   const BuildOptions& options) {
  if (options.max_summary_len < 2) {
    throw ConfigError("max_summary_len must leave room for BOS and EOS");
  }
  RecordBuild out;
  for (const RawClass& cls : classes) {
    std::optional<std::vector<std::size_t>> topic_ids;
    for (const RawMethod& method : cls.methods) {
      if (!method.doc_comment || !extract_summary(*method.doc_comment)) {
        ++out.report.no_summary;
        continue;
      }
      std::vector<std::string> code = normalize_code_tokens(method.code_tokens);
      if (code.size() < kMinCodeTokens) {
        ++out.report.short_code;
        continue;
      }
      std::vector<std::string> summary = summary_tokens(*method.doc_comment);
      if (summary.size() < kMinSummaryTokens) {
        ++out.report.short_summary;
        continue;
      }
      if (!topic_ids) topic_ids = class_topics(cls, model, options);
      if (code.size() > options.max_code_len) code.resize(options.max_code_len);
      if (summary.size() > options.max_summary_len - 2) {
        summary.resize(options.max_summary_len - 2);
      }
      InstanceRecord record;
      record.class_name = cls.class_name;
      record.method = method.method_name;
      record.code = std::move(code);
      record.topics = *topic_ids;
      record.summary = std::move(summary);
      out.records.push_back(std::move(record));
      ++out.report.emitted;
    }
  }
  return out;
}

TrainingInstance encode_instance(const InstanceRecord& record,
                                 const Vocabulary& code_vocab,
                                 const Vocabulary& summary_vocab,
                                 std::size_t max_code_len,
                                 std::size_t max_summary_len) {
  if (record.code.empty()) {
    throw DataError("instance " + record.class_name + "." + record.method +
                    " has no code tokens");
  }
  if (max_summary_len < 2) {
    throw ConfigError("max_summary_len must leave room for BOS and EOS");
  }
  TrainingInstance inst;
  inst.class_name = record.class_name;
  inst.method_name = record.method;
  inst.topic_ids = record.topics;
  inst.oov_map = OovMap(summary_vocab.size());

  const std::size_t code_len = std::min(record.code.size(), max_code_len);
  inst.source_tokens.assign(record.code.begin(),
                            record.code.begin() + static_cast<std::ptrdiff_t>(code_len));
  for (const std::string& t : inst.source_tokens) {
    inst.code_ids.push_back(code_vocab.id(t));
    inst.copy_ids.push_back(summary_vocab.contains(t) ? summary_vocab.id(t)
                                                      : inst.oov_map.add(t));
  }

  const std::size_t sum_len = std::min(record.summary.size(), max_summary_len - 2);
  inst.summary_ids.push_back(Vocabulary::kBos);
  for (std::size_t i = 0; i < sum_len; ++i) {
    const std::string& t = record.summary[i];
    if (summary_vocab.contains(t)) {
      inst.summary_ids.push_back(summary_vocab.id(t));
    } else if (auto ext = inst.oov_map.find(t)) {
      inst.summary_ids.push_back(*ext);
    } else {
      inst.summary_ids.push_back(Vocabulary::kUnk);
    }
  }
  inst.summary_ids.push_back(Vocabulary::kEos);
  return inst;
}

InstanceBuild build_instances(std::span<const RawClass> classes,
                              const topics::TopicModel& model,
                              const Vocabulary& code_vocab,
                              const Vocabulary& summary_vocab,
                              const BuildOptions& options) {
  RecordBuild records = build_instance_records(classes, model, options);
  InstanceBuild out;
  out.report = records.report;
  out.instances.reserve(records.records.size());
  for (const InstanceRecord& r : records.records) {
    out.instances.push_back(encode_instance(r, code_vocab, summary_vocab,
                                            options.max_code_len,
                                            options.max_summary_len));
  }
  return out;
}

}  // namespace topnn::corpus
