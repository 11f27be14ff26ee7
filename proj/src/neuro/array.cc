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

#include "topnn/neuro/array.h"

#include <cmath>
#include <utility>

#include "topnn/error.h"
#include "topnn/neuro/kernels.h"

namespace topnn::neuro {

Array2::Array2(std::size_t rows, std::size_t cols, std::vector<Real> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw ShapeError("Array2: " + std::to_string(data_.size()) +
                     " values do not fill a " + shape_string() + " array");
  }
}

Array2 Array2::column(std::span<const Real> values) {
  return Array2(values.size(), 1, std::vector<Real>(values.begin(), values.end()));
}

Array2 Array2::column(std::initializer_list<Real> values) {
  return Array2(values.size(), 1, std::vector<Real>(values));
}

Array2 Array2::identity(std::size_t n) {
  Array2 out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

void Array2::fill(Real value) {
  for (Real& v : data_) v = value;
}

bool Array2::all_finite() const {
  for (Real v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::string Array2::shape_string() const {
  return "[" + std::to_string(rows_) + "x" + std::to_string(cols_) + "]";
}

void require_same_shape(const Array2& a, const Array2& b, const char* op) {
  if (!a.same_shape(b)) {
    throw ShapeError(std::string(op) + ": shape mismatch " + a.shape_string() +
                     " vs " + b.shape_string());
  }
}

namespace {

void require_inner(std::size_t lhs, std::size_t rhs, const Array2& a,
                   const Array2& b, const char* op) {
  if (lhs != rhs) {
    throw ShapeError(std::string(op) + ": shape mismatch " + a.shape_string() +
                     " vs " + b.shape_string());
  }
}

}  // namespace

void matmul_accumulate(const Array2& a, const Array2& b, Array2& c) {
  require_inner(a.cols(), b.rows(), a, b, "matmul");
  if (c.rows() != a.rows() || c.cols() != b.cols()) {
    throw ShapeError("matmul: output " + c.shape_string() + " for " +
                     a.shape_string() + " * " + b.shape_string());
  }
  const KernelTable& k = kernels();
  const std::size_t n = a.cols();
  if (b.cols() == 1) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      c[i] += k.dot(a.data() + i * n, b.data(), n);
    }
    return;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Real* c_row = c.data() + i * c.cols();
    for (std::size_t p = 0; p < n; ++p) {
      const Real coeff = a(i, p);
      if (coeff != 0.0) k.axpy(coeff, b.data() + p * b.cols(), c_row, b.cols());
    }
  }
}

void matmul_tn_accumulate(const Array2& a, const Array2& b, Array2& c) {
  require_inner(a.rows(), b.rows(), a, b, "matmul_tn");
  if (c.rows() != a.cols() || c.cols() != b.cols()) {
    throw ShapeError("matmul_tn: output " + c.shape_string() + " for " +
                     a.shape_string() + "^T * " + b.shape_string());
  }
  const KernelTable& k = kernels();
  if (b.cols() == 1) {
    // c += a^T b as a sum of scaled rows of a.
    for (std::size_t p = 0; p < a.rows(); ++p) {
      if (b[p] != 0.0) k.axpy(b[p], a.data() + p * a.cols(), c.data(), a.cols());
    }
    return;
  }
  for (std::size_t p = 0; p < a.rows(); ++p) {
    const Real* b_row = b.data() + p * b.cols();
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const Real coeff = a(p, i);
      if (coeff != 0.0) k.axpy(coeff, b_row, c.data() + i * c.cols(), b.cols());
    }
  }
}

void matmul_nt_accumulate(const Array2& a, const Array2& b, Array2& c) {
  require_inner(a.cols(), b.cols(), a, b, "matmul_nt");
  if (c.rows() != a.rows() || c.cols() != b.rows()) {
    throw ShapeError("matmul_nt: output " + c.shape_string() + " for " +
                     a.shape_string() + " * " + b.shape_string() + "^T");
  }
  const KernelTable& k = kernels();
  const std::size_t n = a.cols();
  if (n == 1) {
    // Outer product: row i of c gets a[i] * b^T.
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a[i] != 0.0) k.axpy(a[i], b.data(), c.data() + i * c.cols(), b.rows());
    }
    return;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      c(i, j) += k.dot(a.data() + i * n, b.data() + j * n, n);
    }
  }
}

Array2 matmul(const Array2& a, const Array2& b) {
  require_inner(a.cols(), b.rows(), a, b, "matmul");
  Array2 out(a.rows(), b.cols());
  matmul_accumulate(a, b, out);
  return out;
}

Array2 add(const Array2& a, const Array2& b) {
  require_same_shape(a, b, "add");
  Array2 out = a;
  kernels().axpy(1.0, b.data(), out.data(), out.size());
  return out;
}

Array2 elementwise_mul(const Array2& a, const Array2& b) {
  require_same_shape(a, b, "elementwise_mul");
  Array2 out(a.rows(), a.cols());
  kernels().mul_add(a.data(), b.data(), out.data(), out.size());
  return out;
}

Array2 concat(std::span<const Array2> parts) {
  if (parts.empty()) return {};
  const std::size_t cols = parts.front().cols();
  std::size_t rows = 0;
  for (const Array2& p : parts) {
    if (p.cols() != cols) {
      throw ShapeError("concat: shape mismatch " + parts.front().shape_string() +
                       " vs " + p.shape_string());
    }
    rows += p.rows();
  }
  std::vector<Real> data;
  data.reserve(rows * cols);
  for (const Array2& p : parts) {
    data.insert(data.end(), p.values().begin(), p.values().end());
  }
  return Array2(rows, cols, std::move(data));
}

Array2 concat(const Array2& top, const Array2& bottom) {
  const Array2 parts[] = {top, bottom};
  return concat(std::span<const Array2>(parts));
}

Array2 transpose(const Array2& a) {
  Array2 out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

Array2 tanh(const Array2& a) {
  Array2 out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::tanh(a[i]);
  return out;
}

namespace {

Real logistic(Real x) {
  // Branches keep exp() from overflowing for large |x|.
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const Real e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

Array2 sigmoid(const Array2& a) {
  Array2 out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = logistic(a[i]);
  return out;
}

void axpy(Real alpha, const Array2& x, Array2& y) {
  require_same_shape(x, y, "axpy");
  kernels().axpy(alpha, x.data(), y.data(), y.size());
}

Real dot(const Array2& a, const Array2& b) {
  require_same_shape(a, b, "dot");
  return kernels().dot(a.data(), b.data(), a.size());
}

Real sum(const Array2& a) { return kernels().sum(a.data(), a.size()); }

Real squared_norm(const Array2& a) {
  return kernels().sum_squares(a.data(), a.size());
}

}  // namespace topnn::neuro
