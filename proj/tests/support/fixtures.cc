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

#include "support/fixtures.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "topnn/corpus/vocabulary.h"

namespace topnn::testing {

using corpus::InstanceRecord;
using corpus::Vocabulary;

PlantedCorpus planted_corpus(std::size_t n_docs, std::size_t doc_len, std::uint64_t seed) {
  PlantedCorpus c;
  const char* topic0[] = {"json",   "value",  "parse",  "string", "number",
                          "array",  "object", "member", "escape", "literal"};
  const char* topic1[] = {"socket", "packet", "stream", "buffer", "channel",
                          "server", "client", "port",   "frame",  "header"};
  for (const char* w : topic0) c.words.emplace_back(w);
  for (const char* w : topic1) c.words.emplace_back(w);
  Rng rng(seed);
  for (std::size_t d = 0; d < n_docs; ++d) {
    const std::size_t major = rng.below(2);
    topics::Document doc;
    for (std::size_t n = 0; n < doc_len; ++n) {
      const std::size_t topic = rng.uniform01() < 0.9 ? major : 1 - major;
      doc.push_back(topic * 10 + rng.below(10));
    }
    c.docs.push_back(std::move(doc));
    c.dominant.push_back(major);
  }
  return c;
}

topics::Document single_topic_document(std::size_t topic, std::size_t len, Rng& rng) {
  topics::Document doc;
  for (std::size_t n = 0; n < len; ++n) doc.push_back(topic * 10 + rng.below(10));
  return doc;
}

namespace {

std::size_t shared_top_words(const topics::TopicModel& model, std::size_t topic,
                             std::size_t planted, std::size_t n) {
  std::size_t shared = 0;
  for (const std::string& w : topics::topic_top_words(model, topic, n)) {
    const auto it = model.word_index.find(w);
    if (it != model.word_index.end() && it->second / 10 == planted) ++shared;
  }
  return shared;
}

}  // namespace

std::vector<std::size_t> planted_alignment(const topics::TopicModel& model,
                                           std::size_t n) {
  std::vector<std::size_t> mapping(model.k, 0);
  std::vector<bool> fitted_used(model.k, false);
  std::vector<bool> planted_used(2, false);
  for (std::size_t round = 0; round < std::min<std::size_t>(model.k, 2); ++round) {
    std::size_t best = 0, best_f = 0, best_p = 0;
    bool found = false;
    for (std::size_t f = 0; f < model.k; ++f) {
      if (fitted_used[f]) continue;
      for (std::size_t p = 0; p < 2; ++p) {
        if (planted_used[p]) continue;
        const std::size_t s = shared_top_words(model, f, p, n);
        if (!found || s > best) {
          best = s, best_f = f, best_p = p, found = true;
        }
      }
    }
    fitted_used[best_f] = planted_used[best_p] = true;
    mapping[best_f] = best_p;
  }
  return mapping;
}

std::vector<double> planted_overlap(const topics::TopicModel& model, std::size_t n) {
  const std::vector<std::size_t> mapping = planted_alignment(model, n);
  std::vector<double> overlap(2, 0.0);
  for (std::size_t f = 0; f < std::min<std::size_t>(model.k, 2); ++f) {
    overlap[mapping[f]] =
        static_cast<double>(shared_top_words(model, f, mapping[f], n)) /
        static_cast<double>(n);
  }
  return overlap;
}

model::ModelConfig ToyCorpus::config(std::size_t embed, std::size_t topic_embed,
                                     std::size_t hidden) const {
  model::ModelConfig c;
  c.code_vocab_size = code_vocab.size();
  c.sum_vocab_size = sum_vocab.size();
  c.topic_count = topic_count;
  c.n_topics = n_topics;
  c.embed_dim = embed;
  c.topic_embed_dim = topic_embed;
  c.hidden_dim = hidden;
  c.max_code_len = max_code_len;
  c.max_sum_len = max_sum_len;
  return c;
}

namespace {

const std::vector<std::string> kVerbs = {"get",  "set",  "create", "remove", "update",
                                         "find", "load", "save",   "parse",  "write"};
const std::vector<std::string> kNouns = {"user",   "file",   "packet", "value", "buffer",
                                         "record", "stream", "config", "token", "node"};
const std::vector<std::string> kTargets = {"writer", "reader", "list",   "map",   "cache",
                                           "server", "client", "queue", "table", "store"};

void finish(ToyCorpus& c, std::size_t min_count) {
  std::vector<std::vector<std::string>> code, sum;
  for (const auto& r : c.records) {
    code.push_back(r.code);
    sum.push_back(r.summary);
    c.max_code_len = std::max(c.max_code_len, r.code.size());
    c.max_sum_len = std::max(c.max_sum_len, r.summary.size() + 2);
  }
  c.code_vocab = corpus::build_vocabulary(code, 200, min_count);
  c.sum_vocab = corpus::build_vocabulary(sum, 200, min_count);
  for (const auto& r : c.records) {
    c.instances.push_back(corpus::encode_instance(r, c.code_vocab, c.sum_vocab,
                                                  c.max_code_len, c.max_sum_len));
  }
}

std::vector<std::size_t> class_topic_ids(std::size_t cls, std::size_t k, std::size_t n) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back((cls + i) % k);
  return ids;
}

}  // namespace

ToyCorpus toy_corpus(std::size_t n, std::uint64_t seed) {
  ToyCorpus c;
  c.topic_count = 5;
  c.n_topics = 3;
  Rng rng(seed);
  std::vector<std::size_t> pairs(kVerbs.size() * kNouns.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) pairs[i] = i;
  rng.shuffle(std::span<std::size_t>(pairs));
  n = std::min(n, pairs.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& verb = kVerbs[pairs[i] / kNouns.size()];
    const std::string& noun = kNouns[pairs[i] % kNouns.size()];
    const std::string& target = kTargets[(pairs[i] * 7 + 3) % kTargets.size()];
    InstanceRecord r;
    r.class_name = "Toy" + std::to_string(i / 10);
    r.method = verb + noun;
    r.code = {"public", "void", verb,   noun, "(",    target, "out", ")", "{", "out",
              ".",      verb,   "(",    "this", ".", noun,   ")",   ";", "}"};
    r.topics = class_topic_ids(i / 10, c.topic_count, c.n_topics);
    r.summary = {verb + "s", "the", noun, "to", "the", "given", target};
    c.records.push_back(std::move(r));
  }
  finish(c, 1);
  return c;
}

ToyCorpus unique_oov_corpus(std::size_t n, std::uint64_t seed) {
  ToyCorpus c;
  c.topic_count = 5;
  c.n_topics = 3;
  Rng rng(seed);
  const std::string consonants = "bdfgklmnprstvxz";
  const std::string vowels = "aeiou";
  std::set<std::string> used;
  for (const auto* list : {&kVerbs, &kNouns, &kTargets}) used.insert(list->begin(), list->end());
  for (std::size_t i = 0; i < n; ++i) {
    std::string word;
    do {
      word.clear();
      for (int s = 0; s < 3; ++s) {
        word += consonants[rng.below(consonants.size())];
        word += vowels[rng.below(vowels.size())];
      }
      word += consonants[rng.below(consonants.size())];
    } while (!used.insert(word).second);
    const std::string& verb = kVerbs[rng.below(kVerbs.size())];
    const std::string& noun = kNouns[rng.below(kNouns.size())];
    InstanceRecord r;
    r.class_name = "Codec" + std::to_string(i / 10);
    r.method = verb + word + noun;
    if (rng.below(2) == 0) {
      r.code = {"public", noun, verb, word, noun, "(", ")", "{",
                "return", "new",  noun, "(", ")",  ";", "}"};
    } else {
      r.code = {"public", "static", "void", verb, word, noun, "(", noun, "p",
                ")",      "{",      "p",    ".",  "reset", "(", ")", ";", "}"};
    }
    r.topics = class_topic_ids(i / 10, c.topic_count, c.n_topics);
    r.summary = {verb + "s", "a", word, noun};
    c.records.push_back(std::move(r));
  }
  finish(c, 2);
  return c;
}

model::ModelConfig small_config(std::size_t hidden) {
  model::ModelConfig c;
  c.code_vocab_size = 12;
  c.sum_vocab_size = 10;
  c.topic_count = 4;
  c.n_topics = 3;
  c.embed_dim = 4;
  c.topic_embed_dim = 3;
  c.hidden_dim = hidden;
  c.max_code_len = 8;
  c.max_sum_len = 6;
  return c;
}

corpus::TrainingInstance random_instance(const model::ModelConfig& config,
                                         std::size_t code_len, std::size_t summary_len,
                                         std::size_t oov_count, Rng& rng) {
  corpus::TrainingInstance inst;
  inst.class_name = "Random";
  inst.method_name = "method";
  inst.oov_map = corpus::OovMap(config.sum_vocab_size);
  for (std::size_t i = 0; i < oov_count; ++i) inst.oov_map.add("oov" + std::to_string(i));
  for (std::size_t i = 0; i < config.n_topics; ++i) {
    inst.topic_ids.push_back(rng.below(config.topic_count + 1));
  }
  for (std::size_t j = 0; j < code_len; ++j) {
    inst.code_ids.push_back(1 + rng.below(config.code_vocab_size - 1));
    TokenId copy;
    if (j < oov_count) {
      copy = config.sum_vocab_size + j;
    } else if (oov_count > 0 && rng.below(3) == 0) {
      copy = config.sum_vocab_size + rng.below(oov_count);
    } else {
      copy = Vocabulary::kReservedCount +
             rng.below(config.sum_vocab_size - Vocabulary::kReservedCount);
    }
    inst.copy_ids.push_back(copy);
    inst.source_tokens.push_back(copy >= config.sum_vocab_size
                                     ? inst.oov_map.token(copy)
                                     : "tok" + std::to_string(copy));
  }
  const std::size_t extended = config.sum_vocab_size + oov_count;
  inst.summary_ids.push_back(Vocabulary::kBos);
  for (std::size_t i = 0; i < summary_len; ++i) {
    TokenId id;
    do {
      id = 1 + rng.below(extended - 1);
    } while (id == Vocabulary::kBos || id == Vocabulary::kEos);
    inst.summary_ids.push_back(id);
  }
  inst.summary_ids.push_back(Vocabulary::kEos);
  return inst;
}

TableStepModel::TableStepModel(std::size_t vocab, TokenId eos, std::uint64_t seed)
    : vocab_(vocab), eos_(eos), bos_(vocab), seed_(seed) {}

void TableStepModel::set(const std::vector<TokenId>& prefix, std::vector<double> dist) {
  table_[prefix] = std::move(dist);
}

const std::vector<double>& TableStepModel::dist(const std::vector<TokenId>& prefix) {
  auto it = table_.find(prefix);
  if (it != table_.end()) return it->second;
  std::uint64_t h = seed_ * 0x9e3779b97f4a7c15ULL + 1;
  for (TokenId t : prefix) h = (h ^ (t + 1)) * 0x100000001b3ULL;
  Rng rng(h);
  std::vector<double> d(vocab_);
  double total = 0.0;
  for (double& x : d) total += (x = 0.05 + rng.uniform01());
  for (double& x : d) x /= total;
  return table_.emplace(prefix, std::move(d)).first->second;
}

pipeline::StepOutput TableStepModel::step(const pipeline::DecoderState& state,
                                          TokenId previous) {
  std::vector<TokenId> prefix;
  for (double v : state.values) prefix.push_back(static_cast<TokenId>(v));
  if (previous != bos_) prefix.push_back(previous);
  pipeline::StepOutput out;
  out.dist = dist(prefix);
  for (TokenId t : prefix) out.next.values.push_back(static_cast<double>(t));
  return out;
}

namespace {

void enumerate(TableStepModel& model, std::size_t max_len, pipeline::BeamHypothesis& current,
               pipeline::BeamHypothesis& best, bool& have_best) {
  const std::vector<double> d = model.dist(current.token_ids);
  for (TokenId t = 0; t < d.size(); ++t) {
    pipeline::BeamHypothesis next = current;
    next.token_ids.push_back(t);
    next.log_prob += std::log(d[t]);
    next.finished = t == model.eos();
    if (next.finished || next.token_ids.size() == max_len) {
      const double s = next.normalized_score();
      const double b = best.normalized_score();
      if (!have_best || s > b || (s == b && next.token_ids < best.token_ids)) {
        best = next;
        have_best = true;
      }
    } else {
      enumerate(model, max_len, next, best, have_best);
    }
  }
}

}  // namespace

pipeline::BeamHypothesis enumerate_best(TableStepModel& model, std::size_t max_len) {
  pipeline::BeamHypothesis root, best;
  bool have_best = false;
  enumerate(model, max_len, root, best, have_best);
  return best;
}

const char kJsonValueSource[] = R"java(package com.eclipsesource.json;

import java.io.IOException;
import java.io.Serializable;
import java.io.StringWriter;
import java.io.Writer;

/**
 * Represents a JSON value. This can be a JSON <strong>object</strong>, an
 * <strong>array</strong>, a <strong>number</strong>, a <strong>string</strong>.
 */
@SuppressWarnings("serial")
public abstract class JsonValue implements Serializable {

  /**
   * Writes the JSON representation of this object to the given writer.
   *
   * @param writer the writer to write this value to
   * @throws IOException if an I/O error occurs in the writer
   */
  public void writeTo(Writer writer) throws IOException {
    writeTo(writer, WriterConfig.MINIMAL);
  }

  /**
   * Detects whether this value represents a JSON number.
   *
   * @return <code>true</code> if this value is an instance of JsonNumber
   */
  public boolean isNumber() {
    return false;
  }

  /**
   * Returns this JSON value as a <code>String</code>, assuming that this value
   * represents a JSON string.
   */
  public String asString() {
    throw new UnsupportedOperationException("Not a string: " + toString());
  }

  abstract void write(JsonWriter writer) throws IOException;

  @Override
  public String toString() {
    StringWriter writer = new StringWriter();
    try {
      writeTo(writer);
    } catch (IOException exception) {
      throw new RuntimeException(exception);
    }
    return writer.toString();
  }
}
)java";

const char kSpeexSource[] = R"java(package org.gagravarr.speex;

import org.gagravarr.ogg.OggPacket;

public class SpeexPacketFactory {
  /**
   * Creates the appropriate {@link SpeexPacket} for the given {@link OggPacket}.
   */
  public static SpeexPacket create(OggPacket packet) {
    if (isSpeexSpecial(packet)) {
      return new SpeexInfo(packet);
    }
    return new SpeexAudioData(packet);
  }

  protected static boolean isSpeexSpecial(OggPacket packet) {
    byte type = packet.getData()[0];
    return type == 'S' && packet.getData().length > 4;
  }
}
)java";

}  // namespace topnn::testing
