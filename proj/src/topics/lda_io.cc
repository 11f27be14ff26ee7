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

#include <string>

#include "topnn/error.h"
#include "topnn/io.h"
#include "topnn/topics/lda.h"

namespace topnn::topics {

void save_topic_model(const TopicModel& model,
                      const std::filesystem::path& manifest_path) {
  std::filesystem::path beta_path = manifest_path;
  beta_path.replace_extension(".beta.f64");
  nlohmann::json manifest = {
      {"k", model.k},
      {"alpha", model.alpha},
      {"eta", model.eta},
      {"vocab", model.words},
      {"beta_file", beta_path.filename().string()},
  };
  std::string blob;
  io::append_f64_le(blob, model.beta.values());
  io::write_file(beta_path, blob);
  io::write_json(manifest_path, manifest);
}

TopicModel load_topic_model(const std::filesystem::path& manifest_path) {
  const nlohmann::json manifest = io::read_json(manifest_path);
  TopicModel model;
  try {
    model.k = manifest.at("k").get<std::size_t>();
    model.alpha = manifest.at("alpha").get<double>();
    model.eta = manifest.at("eta").get<double>();
    model.words = manifest.at("vocab").get<std::vector<std::string>>();
    const std::string beta_file = manifest.at("beta_file").get<std::string>();
    std::vector<double> beta = io::parse_f64_le(
        io::read_file(manifest_path.parent_path() / beta_file));
    if (beta.size() != model.k * model.words.size()) {
      throw DataError(manifest_path.string() + ": beta has " +
                      std::to_string(beta.size()) + " values, expected " +
                      std::to_string(model.k * model.words.size()));
    }
    model.beta = neuro::Array2(model.k, model.words.size(), std::move(beta));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(manifest_path.string() + ": " + e.what());
  }
  if (model.k == 0) throw DataError(manifest_path.string() + ": k is 0");
  model.index_words();
  return model;
}

}  // namespace topnn::topics
