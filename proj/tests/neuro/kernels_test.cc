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

#include "topnn/neuro/kernels.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "topnn/random.h"

namespace topnn::neuro {
namespace {

std::vector<double> random_vector(std::size_t n, Rng& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(-2.0, 2.0);
  return v;
}

// Summation order differs between the kernels, so results agree to a few ulps
// of the magnitude sum rather than bitwise.
double tolerance(const std::vector<double>& a, const std::vector<double>& b) {
  double mag = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) mag += std::abs(a[i] * b[i]);
  return 1e-14 * (mag + 1.0);
}

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {
 protected:
  void SetUp() override {
    simd_ = avx2_kernels();
    if (simd_ == nullptr) GTEST_SKIP() << "no AVX2/FMA on this host";
  }
  const KernelTable* simd_ = nullptr;
};

TEST_P(KernelEquivalence, DotMatchesScalar) {
  Rng rng(GetParam());
  const auto a = random_vector(GetParam(), rng);
  const auto b = random_vector(GetParam(), rng);
  const auto& s = scalar_kernels();
  EXPECT_NEAR(simd_->dot(a.data(), b.data(), a.size()), s.dot(a.data(), b.data(), a.size()),
              tolerance(a, b));
}

TEST_P(KernelEquivalence, AxpyAndMulAddMatchScalarExactly) {
  Rng rng(GetParam() + 100);
  const auto x = random_vector(GetParam(), rng);
  const auto w = random_vector(GetParam(), rng);
  auto y1 = random_vector(GetParam(), rng);
  auto y2 = y1;
  scalar_kernels().axpy(0.37, x.data(), y1.data(), x.size());
  simd_->axpy(0.37, x.data(), y2.data(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(y1[i], y2[i], 1e-15 * 4) << i;
  scalar_kernels().mul_add(x.data(), w.data(), y1.data(), x.size());
  simd_->mul_add(x.data(), w.data(), y2.data(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(y1[i], y2[i], 1e-14) << i;
}

TEST_P(KernelEquivalence, ReductionsMatchScalar) {
  Rng rng(GetParam() + 200);
  const auto x = random_vector(GetParam(), rng);
  const auto& s = scalar_kernels();
  EXPECT_NEAR(simd_->sum(x.data(), x.size()), s.sum(x.data(), x.size()), tolerance(x, x));
  EXPECT_NEAR(simd_->sum_squares(x.data(), x.size()), s.sum_squares(x.data(), x.size()),
              tolerance(x, x));
}

// Lengths straddle the 4- and 16-wide unrolled bodies and their tails.
INSTANTIATE_TEST_SUITE_P(Lengths, KernelEquivalence,
                         ::testing::Values(0, 1, 3, 4, 5, 7, 8, 15, 16, 17, 31, 33, 64,
                                           100, 1000));

TEST(KernelDispatch, ScalarCanBeForcedAndRestored) {
  const KernelIsa original = kernels().isa;
  ASSERT_TRUE(set_kernel_isa(KernelIsa::kScalar));
  EXPECT_EQ(kernels().isa, KernelIsa::kScalar);
  EXPECT_EQ(kernel_isa_name(KernelIsa::kScalar), "scalar");
  EXPECT_TRUE(set_kernel_isa(original));
}

TEST(KernelDispatch, ScalarDotIsExactOnSmallIntegers) {
  const double a[] = {1, 2, 3};
  const double b[] = {4, 5, 6};
  EXPECT_EQ(scalar_kernels().dot(a, b, 3), 32.0);
  EXPECT_EQ(kernels().dot(a, b, 3), 32.0);
}

}  // namespace
}  // namespace topnn::neuro
