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

#ifndef TOPNN_NEURO_KERNELS_H_
#define TOPNN_NEURO_KERNELS_H_

#include <cstddef>
#include <string_view>

namespace topnn::neuro {

// Dense double-precision inner loops used by Array2 arithmetic and the tape.
// Every routine has a portable scalar reference and, where the host allows,
// an AVX2+FMA variant. The active table is chosen once per process from
// CPUID; set TOPNN_KERNELS=scalar in the environment (or call
// set_kernel_isa) to force the reference path.

enum class KernelIsa { kScalar, kAvx2 };

struct KernelTable {
  KernelIsa isa;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y[i] += a[i] * b[i]
  void (*mul_add)(const double* a, const double* b, double* y, std::size_t n);
  // sum_i x[i]
  double (*sum)(const double* x, std::size_t n);
  // sum_i x[i] * x[i]
  double (*sum_squares)(const double* x, std::size_t n);
};

const KernelTable& scalar_kernels();

// Null when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels();

// The table all library arithmetic goes through.
const KernelTable& kernels();

// Switches the active table. Returns false (and leaves the table unchanged)
// if the requested ISA is not available on this host.
bool set_kernel_isa(KernelIsa isa);

std::string_view kernel_isa_name(KernelIsa isa);

}  // namespace topnn::neuro

#endif  // TOPNN_NEURO_KERNELS_H_
