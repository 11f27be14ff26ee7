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

#include "topnn/io.h"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "topnn/error.h"

namespace topnn::io {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw DataError("short write to " + path.string());
}

nlohmann::json read_json(const std::filesystem::path& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const nlohmann::json& value) {
  write_file(path, value.dump(2) + "\n");
}

std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  std::vector<nlohmann::json> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    ++line_no;
    std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": " +
                      e.what());
    }
  }
  return out;
}

void write_jsonl(const std::filesystem::path& path,
                 std::span<const nlohmann::json> values) {
  std::string text;
  for (const auto& v : values) {
    text += v.dump();
    text.push_back('\n');
  }
  write_file(path, text);
}

namespace {

template <typename Float, typename Bits>
void append_le(std::string& out, std::span<const Float> values) {
  for (Float v : values) {
    Bits bits = std::bit_cast<Bits>(v);
    for (std::size_t b = 0; b < sizeof(Bits); ++b) {
      out.push_back(static_cast<char>((bits >> (8 * b)) & 0xff));
    }
  }
}

template <typename Float, typename Bits>
std::vector<Float> parse_le(std::string_view bytes) {
  if (bytes.size() % sizeof(Bits) != 0) {
    throw DataError("binary blob of " + std::to_string(bytes.size()) +
                    " bytes is not a whole number of " +
                    std::to_string(sizeof(Bits)) + "-byte values");
  }
  std::vector<Float> out(bytes.size() / sizeof(Bits));
  for (std::size_t i = 0; i < out.size(); ++i) {
    Bits bits = 0;
    for (std::size_t b = 0; b < sizeof(Bits); ++b) {
      bits |= static_cast<Bits>(static_cast<unsigned char>(bytes[i * sizeof(Bits) + b]))
              << (8 * b);
    }
    out[i] = std::bit_cast<Float>(bits);
  }
  return out;
}

}  // namespace

void append_f64_le(std::string& out, std::span<const double> values) {
  append_le<double, std::uint64_t>(out, values);
}

void append_f32_le(std::string& out, std::span<const float> values) {
  append_le<float, std::uint32_t>(out, values);
}

std::vector<double> parse_f64_le(std::string_view bytes) {
  return parse_le<double, std::uint64_t>(bytes);
}

std::vector<float> parse_f32_le(std::string_view bytes) {
  return parse_le<float, std::uint32_t>(bytes);
}

}  // namespace topnn::io
