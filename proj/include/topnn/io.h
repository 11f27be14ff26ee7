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

#ifndef TOPNN_IO_H_
#define TOPNN_IO_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace topnn::io {

// All of these throw DataError with the path on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& value);

// One JSON value per non-blank line.
std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);
void write_jsonl(const std::filesystem::path& path,
                 std::span<const nlohmann::json> values);

// Little-endian encodings independent of host byte order.
void append_f64_le(std::string& out, std::span<const double> values);
void append_f32_le(std::string& out, std::span<const float> values);
std::vector<double> parse_f64_le(std::string_view bytes);
std::vector<float> parse_f32_le(std::string_view bytes);

}  // namespace topnn::io

#endif  // TOPNN_IO_H_
