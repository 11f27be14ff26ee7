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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "topnn/neuro/kernels.h"

namespace topnn::neuro {
namespace {

const KernelTable* select_initial() {
  const char* forced = std::getenv("TOPNN_KERNELS");
  if (forced != nullptr && std::string_view(forced) == "scalar") {
    return &scalar_kernels();
  }
  if (const KernelTable* avx2 = avx2_kernels()) return avx2;
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& active() {
  static std::atomic<const KernelTable*> table{select_initial()};
  return table;
}

}  // namespace

const KernelTable& kernels() {
  return *active().load(std::memory_order_relaxed);
}

bool set_kernel_isa(KernelIsa isa) {
  const KernelTable* table = nullptr;
  switch (isa) {
    case KernelIsa::kScalar:
      table = &scalar_kernels();
      break;
    case KernelIsa::kAvx2:
      table = avx2_kernels();
      break;
  }
  if (table == nullptr) return false;
  active().store(table, std::memory_order_relaxed);
  return true;
}

std::string_view kernel_isa_name(KernelIsa isa) {
  switch (isa) {
    case KernelIsa::kScalar:
      return "scalar";
    case KernelIsa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace topnn::neuro
