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

#ifndef TOPNN_MODEL_CHECKPOINT_H_
#define TOPNN_MODEL_CHECKPOINT_H_

#include <filesystem>

#include "topnn/corpus/vocabulary.h"
#include "topnn/model/params.h"

namespace topnn::model {

struct Checkpoint {
  ModelParams params;
  corpus::Vocabulary code_vocab;
  corpus::Vocabulary sum_vocab;
};

// Writes into `dir` (created if missing):
//   manifest.json   {"config", "dtype", "blob", "parameters": [{"name",
//                    "shape", "offset", "count"}]}, offsets in bytes
//   params.f32      every parameter as little-endian float32, manifest order
//   code_vocab.json, sum_vocab.json   token arrays in id order
void save_checkpoint(const std::filesystem::path& dir, const Checkpoint& checkpoint);

// Validates every parameter's name, shape and offset against the config and
// the vocabulary sizes against the config. Throws DataError on mismatch.
Checkpoint load_checkpoint(const std::filesystem::path& dir);

}  // namespace topnn::model

#endif  // TOPNN_MODEL_CHECKPOINT_H_
