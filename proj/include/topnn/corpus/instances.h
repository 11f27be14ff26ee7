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

#ifndef TOPNN_CORPUS_INSTANCES_H_
#define TOPNN_CORPUS_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topnn/corpus/extract.h"
#include "topnn/corpus/vocabulary.h"
#include "topnn/topics/lda.h"

namespace topnn::corpus {

// Source tokens absent from the summary vocabulary, numbered densely in
// first-occurrence order starting at the summary vocabulary size.
class OovMap {
 public:
  OovMap() = default;
  explicit OovMap(std::size_t base) : base_(base) {}

  std::size_t base() const { return base_; }
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  TokenId add(const std::string& token);
  std::optional<TokenId> find(std::string_view token) const;
  bool contains_id(TokenId id) const {
    return id >= base_ && id < base_ + tokens_.size();
  }
  // Throws DataError for ids outside [base, base + size).
  const std::string& token(TokenId id) const;

 private:
  std::size_t base_ = 0;
  std::vector<std::string> tokens_;
};

struct TrainingInstance {
  std::string class_name;
  std::string method_name;
  std::vector<TokenId> code_ids;     // code vocabulary ids, UNK for unknowns
  std::vector<std::size_t> topic_ids;  // exactly n_topics entries
  // BOS ... EOS over the extended summary vocabulary: summary-vocabulary ids,
  // oov_map ids for out-of-vocabulary tokens that occur in the source, UNK
  // otherwise.
  std::vector<TokenId> summary_ids;
  std::vector<std::string> source_tokens;
  OovMap oov_map;
  // Extended summary id of every source position; the copy path scatters
  // attention mass onto these.
  std::vector<TokenId> copy_ids;
};

// Token-level form of an instance, as stored in instance files.
struct InstanceRecord {
  std::string class_name;
  std::string method;
  std::vector<std::string> code;
  std::vector<std::size_t> topics;
  std::vector<std::string> summary;

  friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

struct BuildOptions {
  std::size_t n_topics = 10;
  std::size_t max_code_len = 100;
  std::size_t max_summary_len = 30;  // BOS and EOS included
  std::size_t infer_iterations = 50;
  std::uint64_t seed = 1;
};

struct SkipReport {
  std::size_t emitted = 0;
  std::size_t no_summary = 0;     // no doc comment, or no usable sentence
  std::size_t short_code = 0;     // fewer than 3 code tokens
  std::size_t short_summary = 0;  // fewer than 2 summary tokens

  std::size_t skipped() const { return no_summary + short_code + short_summary; }
};

inline constexpr std::size_t kMinCodeTokens = 3;
inline constexpr std::size_t kMinSummaryTokens = 2;

// Top-n topic ids of a class by inferred weight, padded with the null topic
// index (model.k) when n exceeds the topic count.
std::vector<std::size_t> class_topics(const RawClass& cls,
                                      const topics::TopicModel& model,
                                      const BuildOptions& options);

struct RecordBuild {
  std::vector<InstanceRecord> records;
  SkipReport report;
};

// One record per usable method, in class then method order.
RecordBuild build_instance_records(std::span<const RawClass> classes,
                                   const topics::TopicModel& model,
                                   const BuildOptions& options);

// Maps a record onto vocabulary ids; the summary is truncated to
// max_summary_len - 2 tokens before BOS/EOS are added.
TrainingInstance encode_instance(const InstanceRecord& record,
                                 const Vocabulary& code_vocab,
                                 const Vocabulary& summary_vocab,
                                 std::size_t max_code_len,
                                 std::size_t max_summary_len);

struct InstanceBuild {
  std::vector<TrainingInstance> instances;
  SkipReport report;
};

InstanceBuild build_instances(std::span<const RawClass> classes,
                              const topics::TopicModel& model,
                              const Vocabulary& code_vocab,
                              const Vocabulary& summary_vocab,
                              const BuildOptions& options);

}  // namespace topnn::corpus

#endif  // TOPNN_CORPUS_INSTANCES_H_
