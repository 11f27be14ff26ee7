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

#ifndef TOPNN_NEURO_ARRAY_H_
#define TOPNN_NEURO_ARRAY_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace topnn::neuro {

using Real = double;

// Row-major dense matrix. Column vectors are Array2 with cols() == 1.
class Array2 {
 public:
  Array2() = default;
  Array2(std::size_t rows, std::size_t cols, Real fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Array2(std::size_t rows, std::size_t cols, std::vector<Real> data);

  static Array2 column(std::span<const Real> values);
  static Array2 column(std::initializer_list<Real> values);
  static Array2 identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  Real& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Real operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Real& operator[](std::size_t i) { return data_[i]; }
  Real operator[](std::size_t i) const { return data_[i]; }

  Real* data() { return data_.data(); }
  const Real* data() const { return data_.data(); }
  std::span<Real> values() { return data_; }
  std::span<const Real> values() const { return data_; }
  std::span<Real> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Real> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void fill(Real value);
  bool same_shape(const Array2& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }
  bool all_finite() const;
  std::string shape_string() const;

  friend bool operator==(const Array2&, const Array2&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Real> data_;
};

// Throws ShapeError naming both shapes unless a and b have equal shape.
void require_same_shape(const Array2& a, const Array2& b, const char* op);

// Eager arithmetic. All of these throw ShapeError on incompatible operands.
Array2 matmul(const Array2& a, const Array2& b);
Array2 add(const Array2& a, const Array2& b);
Array2 elementwise_mul(const Array2& a, const Array2& b);
// Stacks operands vertically; all must have the same column count.
Array2 concat(std::span<const Array2> parts);
Array2 concat(const Array2& top, const Array2& bottom);
Array2 transpose(const Array2& a);
Array2 tanh(const Array2& a);
Array2 sigmoid(const Array2& a);

// c += a * b, c += a^T * b and c += a * b^T. The transposed forms serve the
// backward pass of matmul.
void matmul_accumulate(const Array2& a, const Array2& b, Array2& c);
void matmul_tn_accumulate(const Array2& a, const Array2& b, Array2& c);
void matmul_nt_accumulate(const Array2& a, const Array2& b, Array2& c);

// y += alpha * x over the whole array.
void axpy(Real alpha, const Array2& x, Array2& y);

Real dot(const Array2& a, const Array2& b);
Real sum(const Array2& a);
Real squared_norm(const Array2& a);

}  // namespace topnn::neuro

#endif  // TOPNN_NEURO_ARRAY_H_
