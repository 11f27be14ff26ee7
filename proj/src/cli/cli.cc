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

#include "topnn/cli/cli.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "topnn/corpus/extract.h"
#include "topnn/corpus/instances.h"
#include "topnn/corpus/serialize.h"
#include "topnn/corpus/split.h"
#include "topnn/error.h"
#include "topnn/eval/metrics.h"
#include "topnn/io.h"
#include "topnn/model/checkpoint.h"
#include "topnn/pipeline/adam.h"
#include "topnn/pipeline/decoding.h"
#include "topnn/pipeline/trainer.h"
#include "topnn/topics/lda.h"

namespace topnn::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct ExtractArgs {
  std::string src_dir;
  std::string out;
};

struct LdaArgs {
  std::string classes;
  std::string model_out;
  std::size_t k = 10;
  std::optional<double> alpha;
  double eta = 0.01;
  std::size_t iters = 500;
  std::uint64_t seed = 1;
};

struct BuildArgs {
  std::string classes;
  std::string lda_model;
  std::string out;
  corpus::BuildOptions options;
};

struct TrainArgs {
  std::string instances;
  std::string ckpt_dir;
  std::string config;
  std::optional<std::size_t> epochs;
  std::optional<double> learning_rate;
  std::optional<std::uint64_t> seed;
};

struct SummarizeArgs {
  std::string ckpt;
  std::string lda_model;
  std::string java_file;
  std::size_t beam = 1;
  std::size_t infer_iterations = 50;
  std::uint64_t seed = 1;
};

struct EvalArgs {
  std::string hyp;
  std::string ref;
};

void require_file(const std::string& path) {
  if (!fs::exists(path)) throw DataError("no such file: " + path);
}

int do_extract(const ExtractArgs& a, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(a.src_dir)) throw DataError("not a directory: " + a.src_dir);
  corpus::DirectoryExtraction result = corpus::extract_directory(a.src_dir);
  for (const auto& e : result.errors) err << "skipped " << e.path << ": " << e.message << "\n";
  corpus::write_classes(a.out, result.classes);
  std::size_t methods = 0;
  for (const auto& c : result.classes) methods += c.methods.size();
  out << "extracted " << result.classes.size() << " classes, " << methods
      << " methods, " << result.errors.size() << " files skipped\n";
  return kExitOk;
}

int do_train_lda(const LdaArgs& a, std::ostream& out) {
  topics::LdaConfig config = topics::LdaConfig::with_defaults(a.k == 0 ? 1 : a.k);
  config.k = a.k;
  if (a.alpha) config.alpha = *a.alpha;
  config.eta = a.eta;
  config.n_iterations = a.iters;
  config.seed = a.seed;
  config.validate();

  require_file(a.classes);
  const std::vector<corpus::RawClass> classes = corpus::read_classes(a.classes);
  std::vector<std::vector<std::string>> bags;
  std::set<std::string> unique;
  for (const auto& c : classes) {
    bags.push_back(corpus::class_document(c.class_tokens));
    unique.insert(bags.back().begin(), bags.back().end());
  }
  std::vector<std::string> words(unique.begin(), unique.end());
  std::map<std::string, topics::WordId, std::less<>> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  std::vector<topics::Document> docs;
  for (const auto& bag : bags) {
    if (bag.empty()) continue;
    topics::Document d;
    for (const auto& w : bag) d.push_back(index.at(w));
    docs.push_back(std::move(d));
  }
  if (docs.empty()) throw DataError(a.classes + ": no class has topic-model tokens");
  topics::TopicModel model = topics::fit_gibbs(docs, std::move(words), config);
  topics::save_topic_model(model, a.model_out);
  out << "fitted " << config.k << " topics over " << docs.size() << " classes, "
      << model.vocab_size() << " words\n";
  for (std::size_t t = 0; t < config.k; ++t) {
    out << "topic " << t << ":";
    for (const auto& w : topics::topic_top_words(model, t, 8)) out << ' ' << w;
    out << "\n";
  }
  return kExitOk;
}

int do_build(const BuildArgs& a, std::ostream& out) {
  require_file(a.classes);
  require_file(a.lda_model);
  const topics::TopicModel model = topics::load_topic_model(a.lda_model);
  const std::vector<corpus::RawClass> classes = corpus::read_classes(a.classes);
  corpus::RecordBuild build = corpus::build_instance_records(classes, model, a.options);
  corpus::write_records(a.out, build.records);
  const auto& r = build.report;
  out << "emitted " << r.emitted << " instances; skipped " << r.no_summary
      << " without summary, " << r.short_code << " with short code, "
      << r.short_summary << " with short summary\n";
  return kExitOk;
}

template <typename T>
T config_value(const json& section, const char* key, T fallback) {
  if (!section.contains(key)) return fallback;
  try {
    return section.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

void reject_unknown(const json& section, const char* name,
                    std::initializer_list<const char*> known) {
  if (!section.is_object()) throw ConfigError(std::string(name) + " must be an object");
  for (const auto& [key, _] : section.items()) {
    if (std::none_of(known.begin(), known.end(),
                     [&](const char* k) { return key == k; })) {
      throw ConfigError(std::string("unknown key '") + key + "' in " + name);
    }
  }
}

int do_train(const TrainArgs& a, std::ostream& out) {
  require_file(a.config);
  require_file(a.instances);
  json cfg;
  try {
    cfg = io::read_json(a.config);
  } catch (const DataError& e) {
    throw ConfigError(e.what());
  }
  reject_unknown(cfg, "config", {"model", "train", "vocab"});
  const json model_section = cfg.value("model", json::object());
  const json vocab_section = cfg.value("vocab", json::object());
  reject_unknown(model_section, "model",
                 {"topic_count", "n_topics", "embed_dim", "topic_embed_dim",
                  "hidden_dim", "max_code_len", "max_sum_len", "use_topics"});
  reject_unknown(vocab_section, "vocab",
                 {"max_code_vocab", "max_sum_vocab", "min_count"});
  pipeline::TrainConfig train_config =
      pipeline::train_config_from_json(cfg.value("train", json::object()));
  if (a.epochs) train_config.epochs = *a.epochs;
  if (a.learning_rate) train_config.learning_rate = *a.learning_rate;
  if (a.seed) train_config.seed = *a.seed;
  train_config.validate();

  const std::vector<corpus::InstanceRecord> records = corpus::read_records(a.instances);
  if (records.empty()) throw DataError(a.instances + ": no instances");

  model::ModelConfig mc;
  if (!model_section.contains("topic_count")) {
    throw ConfigError("model.topic_count is required (the LDA model's k)");
  }
  mc.topic_count = config_value<std::size_t>(model_section, "topic_count", 0);
  mc.n_topics = config_value<std::size_t>(model_section, "n_topics",
                                          records.front().topics.size());
  mc.embed_dim = config_value(model_section, "embed_dim", mc.embed_dim);
  mc.topic_embed_dim = config_value(model_section, "topic_embed_dim", mc.topic_embed_dim);
  mc.hidden_dim = config_value(model_section, "hidden_dim", mc.hidden_dim);
  mc.max_code_len = config_value(model_section, "max_code_len", mc.max_code_len);
  mc.max_sum_len = config_value(model_section, "max_sum_len", mc.max_sum_len);
  mc.use_topics = config_value(model_section, "use_topics", mc.use_topics);

  const auto max_code_vocab =
      config_value<std::size_t>(vocab_section, "max_code_vocab", 20000);
  const auto max_sum_vocab = config_value<std::size_t>(vocab_section, "max_sum_vocab", 20000);
  const auto min_count = config_value<std::size_t>(vocab_section, "min_count", 1);

  std::vector<std::vector<std::string>> code_seqs;
  std::vector<std::vector<std::string>> sum_seqs;
  for (const auto& r : records) {
    code_seqs.push_back(r.code);
    sum_seqs.push_back(r.summary);
  }
  model::Checkpoint ckpt;
  ckpt.code_vocab = corpus::build_vocabulary(code_seqs, max_code_vocab, min_count);
  ckpt.sum_vocab = corpus::build_vocabulary(sum_seqs, max_sum_vocab, min_count);
  mc.code_vocab_size = ckpt.code_vocab.size();
  mc.sum_vocab_size = ckpt.sum_vocab.size();
  mc.validate();

  std::vector<corpus::TrainingInstance> instances;
  for (const auto& r : records) {
    instances.push_back(corpus::encode_instance(r, ckpt.code_vocab, ckpt.sum_vocab,
                                                mc.max_code_len, mc.max_sum_len));
  }

  const fs::path dir = a.ckpt_dir;
  pipeline::TrainHooks hooks;
  hooks.on_epoch = [&](std::size_t epoch, double loss) {
    out << "epoch " << epoch << " loss " << loss << "\n";
  };
  hooks.on_checkpoint = [&](std::size_t epoch, const model::ModelParams& params) {
    char name[32];
    std::snprintf(name, sizeof name, "epoch-%04zu", epoch);
    model::save_checkpoint(dir / name, {params, ckpt.code_vocab, ckpt.sum_vocab});
  };
  pipeline::TrainResult result = pipeline::train(mc, train_config, instances, hooks);
  ckpt.params = std::move(result.params);
  model::save_checkpoint(dir, ckpt);
  io::write_json(dir / "train_config.json", pipeline::to_json(train_config));
  pipeline::write_loss_log(dir / "loss.csv", result.epoch_losses);
  out << "teacher-forced accuracy "
      << pipeline::teacher_forced_accuracy(ckpt.params, instances) << "\n";
  return kExitOk;
}

int do_summarize(const SummarizeArgs& a, std::ostream& out) {
  require_file(a.java_file);
  require_file(a.lda_model);
  const model::Checkpoint ckpt = model::load_checkpoint(a.ckpt);
  const topics::TopicModel lda = topics::load_topic_model(a.lda_model);
  const model::ModelConfig& mc = ckpt.params.config;
  if (lda.k != mc.topic_count) {
    throw DataError("topic model has " + std::to_string(lda.k) +
                    " topics but the checkpoint expects " + std::to_string(mc.topic_count));
  }
  corpus::BuildOptions options;
  options.n_topics = mc.n_topics;
  options.max_code_len = mc.max_code_len;
  options.max_summary_len = mc.max_sum_len;
  options.infer_iterations = a.infer_iterations;
  options.seed = a.seed;

  const auto classes = corpus::extract_classes(io::read_file(a.java_file), a.java_file);
  for (const auto& cls : classes) {
    const std::vector<std::size_t> topic_ids = corpus::class_topics(cls, lda, options);
    for (const auto& method : cls.methods) {
      corpus::InstanceRecord record;
      record.class_name = cls.class_name;
      record.method = method.method_name;
      record.code = corpus::normalize_code_tokens(method.code_tokens);
      record.topics = topic_ids;
      if (record.code.empty()) continue;
      const corpus::TrainingInstance inst = corpus::encode_instance(
          record, ckpt.code_vocab, ckpt.sum_vocab, mc.max_code_len, mc.max_sum_len);
      const std::size_t max_len = mc.max_sum_len - 1;
      const std::vector<corpus::TokenId> ids =
          a.beam <= 1 ? pipeline::greedy_decode(ckpt.params, inst, max_len)
                      : pipeline::beam_search(ckpt.params, inst, a.beam, max_len);
      const json line = {{"method", cls.class_name + "." + method.method_name},
                         {"summary", pipeline::detokenize(ids, ckpt.sum_vocab, inst.oov_map)}};
      out << line.dump() << "\n";
    }
  }
  return kExitOk;
}

std::vector<eval::Tokens> read_summaries(const std::string& path,
                                         std::vector<std::string>& methods) {
  require_file(path);
  std::vector<eval::Tokens> out;
  for (const json& line : io::read_jsonl(path)) {
    if (!line.is_object() || !line.contains("summary")) {
      throw DataError(path + ": every line needs a \"summary\" field");
    }
    const json& s = line.at("summary");
    if (s.is_string()) {
      out.push_back(eval::split_words(s.get<std::string>()));
    } else if (s.is_array() && std::all_of(s.begin(), s.end(),
                                           [](const json& t) { return t.is_string(); })) {
      out.push_back(s.get<eval::Tokens>());
    } else {
      throw DataError(path + ": \"summary\" must be a string or a list of strings");
    }
    methods.push_back(line.value("method", std::string()));
  }
  return out;
}

int do_eval(const EvalArgs& a, std::ostream& out) {
  std::vector<std::string> hyp_methods;
  std::vector<std::string> ref_methods;
  const auto hyps = read_summaries(a.hyp, hyp_methods);
  const auto refs = read_summaries(a.ref, ref_methods);
  if (hyps.size() != refs.size()) {
    throw DataError("hypothesis file has " + std::to_string(hyps.size()) +
                    " lines but reference file has " + std::to_string(refs.size()));
  }
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    if (!hyp_methods[i].empty() && !ref_methods[i].empty() &&
        hyp_methods[i] != ref_methods[i]) {
      throw DataError("line " + std::to_string(i + 1) + ": method '" + hyp_methods[i] +
                      "' does not match reference '" + ref_methods[i] + "'");
    }
  }
  out << eval::to_json(eval::evaluate(hyps, refs)).dump() << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topic-guided code summarization"};
  app.require_subcommand(1);

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Extract classes and methods from .java files");
  extract_cmd->add_option("src-dir", extract.src_dir, "Source root")->required();
  extract_cmd->add_option("out", extract.out, "Output classes JSONL")->required();

  LdaArgs lda;
  auto* lda_cmd = app.add_subcommand("train-lda", "Fit the class topic model");
  lda_cmd->add_option("classes", lda.classes, "Classes JSONL")->required();
  lda_cmd->add_option("model-out", lda.model_out, "Topic model manifest path")->required();
  lda_cmd->add_option("--k", lda.k, "Number of topics")->capture_default_str();
  lda_cmd->add_option("--alpha", lda.alpha, "Document-topic prior (default 50/k)");
  lda_cmd->add_option("--eta", lda.eta, "Topic-word prior")->capture_default_str();
  lda_cmd->add_option("--iters", lda.iters, "Gibbs sweeps")->capture_default_str();
  lda_cmd->add_option("--seed", lda.seed, "Random seed")->capture_default_str();

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build training instances");
  build_cmd->add_option("classes", build.classes, "Classes JSONL")->required();
  build_cmd->add_option("lda-model", build.lda_model, "Topic model manifest")->required();
  build_cmd->add_option("out", build.out, "Output instances JSONL")->required();
  build_cmd->add_option("--n-topics", build.options.n_topics, "Topics per class")
      ->capture_default_str();
  build_cmd->add_option("--max-code", build.options.max_code_len, "Code token limit")
      ->capture_default_str();
  build_cmd->add_option("--max-sum", build.options.max_summary_len,
                        "Summary token limit, BOS and EOS included")
      ->capture_default_str();
  build_cmd->add_option("--infer-iters", build.options.infer_iterations,
                        "Sweeps for class topic inference")
      ->capture_default_str();
  build_cmd->add_option("--seed", build.options.seed, "Topic inference seed")
      ->capture_default_str();

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train the summarization network");
  train_cmd->add_option("instances", train.instances, "Instances JSONL")->required();
  train_cmd->add_option("ckpt-dir", train.ckpt_dir, "Checkpoint directory")->required();
  train_cmd->add_option("--config", train.config, "JSON config")->required();
  train_cmd->add_option("--epochs", train.epochs, "Override train.epochs");
  train_cmd->add_option("--learning-rate", train.learning_rate,
                        "Override train.learning_rate");
  train_cmd->add_option("--seed", train.seed, "Override train.seed");

  SummarizeArgs summarize;
  auto* summarize_cmd = app.add_subcommand("summarize", "Summarize every method of a Java file");
  summarize_cmd->add_option("ckpt", summarize.ckpt, "Checkpoint directory")->required();
  summarize_cmd->add_option("lda-model", summarize.lda_model, "Topic model manifest")
      ->required();
  summarize_cmd->add_option("java-file", summarize.java_file, "Java source")->required();
  summarize_cmd->add_option("--beam", summarize.beam, "Beam width (1 = greedy)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  summarize_cmd->add_option("--infer-iters", summarize.infer_iterations,
                            "Sweeps for class topic inference")
      ->capture_default_str();
  summarize_cmd->add_option("--seed", summarize.seed, "Topic inference seed")
      ->capture_default_str();

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "Score summaries against references");
  eval_cmd->add_option("hyp", ev.hyp, "Hypotheses JSONL")->required();
  eval_cmd->add_option("ref", ev.ref, "References JSONL")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*extract_cmd) return do_extract(extract, out, err);
    if (*lda_cmd) return do_train_lda(lda, out);
    if (*build_cmd) return do_build(build, out);
    if (*train_cmd) return do_train(train, out);
    if (*summarize_cmd) return do_summarize(summarize, out);
    if (*eval_cmd) return do_eval(ev, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace topnn::cli
