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

#include "topnn/model/checkpoint.h"

#include <string>
#include <vector>

#include "topnn/corpus/serialize.h"
#include "topnn/error.h"
#include "topnn/io.h"

namespace topnn::model {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kManifest = "manifest.json";
constexpr const char* kBlob = "params.f32";

}  // namespace

void save_checkpoint(const fs::path& dir, const Checkpoint& ckpt) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());

  json entries = json::array();
  std::string blob;
  ModelParams::visit(ckpt.params, [&](const std::string& name, const Array2& a) {
    entries.push_back({{"name", name},
                       {"shape", {a.rows(), a.cols()}},
                       {"offset", blob.size()},
                       {"count", a.size()}});
    std::vector<float> narrow(a.values().begin(), a.values().end());
    io::append_f32_le(blob, narrow);
  });
  json manifest = {{"config", to_json(ckpt.params.config)},
                   {"dtype", "float32-le"},
                   {"blob", kBlob},
                   {"parameters", std::move(entries)}};
  io::write_file(dir / kBlob, blob);
  io::write_json(dir / "code_vocab.json", corpus::to_json(ckpt.code_vocab));
  io::write_json(dir / "sum_vocab.json", corpus::to_json(ckpt.sum_vocab));
  io::write_json(dir / kManifest, manifest);
}

Checkpoint load_checkpoint(const fs::path& dir) {
  const json manifest = io::read_json(dir / kManifest);
  Checkpoint ckpt;
  try {
    ckpt.params = ModelParams::zeros(model_config_from_json(manifest.at("config")));
    if (manifest.at("dtype").get<std::string>() != "float32-le") {
      throw DataError(dir.string() + ": unsupported dtype " +
                      manifest.at("dtype").dump());
    }
    const std::string blob =
        io::read_file(dir / manifest.at("blob").get<std::string>());
    const json& entries = manifest.at("parameters");
    std::size_t index = 0;
    std::size_t expected_offset = 0;
    ModelParams::visit(ckpt.params, [&](const std::string& name, Array2& a) {
      if (index >= entries.size()) {
        throw DataError(dir.string() + ": manifest lacks parameter " + name);
      }
      const json& e = entries[index++];
      const auto shape = e.at("shape").get<std::vector<std::size_t>>();
      const auto offset = e.at("offset").get<std::size_t>();
      if (e.at("name").get<std::string>() != name || shape.size() != 2 ||
          shape[0] != a.rows() || shape[1] != a.cols() ||
          offset != expected_offset) {
        throw DataError(dir.string() + ": parameter " + e.dump() +
                        " does not match expected " + name + " " + a.shape_string());
      }
      const std::size_t bytes = a.size() * sizeof(float);
      if (offset + bytes > blob.size()) {
        throw DataError(dir.string() + ": blob too short for " + name);
      }
      const std::vector<float> values =
          io::parse_f32_le(std::string_view(blob).substr(offset, bytes));
      for (std::size_t i = 0; i < values.size(); ++i) a[i] = values[i];
      expected_offset += bytes;
    });
    if (index != entries.size() || expected_offset != blob.size()) {
      throw DataError(dir.string() + ": checkpoint has unexpected extra data");
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(dir.string() + ": malformed manifest: " + e.what());
  }
  ckpt.code_vocab = corpus::vocabulary_from_json(io::read_json(dir / "code_vocab.json"));
  ckpt.sum_vocab = corpus::vocabulary_from_json(io::read_json(dir / "sum_vocab.json"));
  if (ckpt.code_vocab.size() != ckpt.params.config.code_vocab_size ||
      ckpt.sum_vocab.size() != ckpt.params.config.sum_vocab_size) {
    throw DataError(dir.string() + ": vocabulary sizes disagree with the config");
  }
  return ckpt;
}

}  // namespace topnn::model
