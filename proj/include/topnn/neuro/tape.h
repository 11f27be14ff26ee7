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

#ifndef TOPNN_NEURO_TAPE_H_
#define TOPNN_NEURO_TAPE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "topnn/neuro/array.h"

namespace topnn::neuro {

// Handle to a value recorded on a Tape.
struct Var {
  std::size_t id = static_cast<std::size_t>(-1);
};

// Reverse-mode recorder. Nodes are appended in evaluation order, so the
// creation order is a topological order and backward() walks it in reverse.
//
// Parameter leaves reference caller-owned storage: their values are read in
// place and their gradients are accumulated straight into the caller's
// gradient arrays. Everything else lives on the tape.
//
// With recording disabled the tape still evaluates and stores values but
// keeps no backward closures; use that for decoding.
class Tape {
 public:
  explicit Tape(bool recording = true) : recording_(recording) {}

  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  bool recording() const { return recording_; }
  std::size_t size() const { return nodes_.size(); }

  Var constant(Array2 value);
  // grad may be null for parameters that should not receive gradients.
  Var parameter(const Array2& value, Array2* grad);

  const Array2& value(Var v) const;
  Real scalar(Var v) const;
  // Gradient of a non-parameter node after backward(); parameter gradients
  // live in the caller's arrays.
  const Array2& grad(Var v) const;

  Var matmul(Var a, Var b);
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var mul(Var a, Var b);
  // a * b^T
  Var matmul_nt(Var a, Var b);
  Var scale(Var a, Real factor);
  Var one_minus(Var a);
  Var tanh(Var a);
  Var sigmoid(Var a);
  Var concat(std::span<const Var> parts);
  Var concat(Var top, Var bottom);
  // Row `row` of a matrix as a column vector (embedding lookup).
  Var gather_row(Var table, std::size_t row);
  Var dot(Var a, Var b);
  Var sum(Var a);
  // Mean of 1x1 nodes.
  Var mean(std::span<const Var> scalars);
  // Numerically stable softmax over a column vector. Entries whose mask bit
  // is false get exactly zero probability. An empty mask means "all valid".
  Var softmax(Var logits, std::span<const std::uint8_t> mask = {});
  // -log(dist[target] + kCrossEntropyEpsilon)
  Var cross_entropy(Var dist, std::size_t target);

  // Column vectors stacked as the rows of a matrix.
  Var stack_rows(std::span<const Var> columns);
  // e_j = v . tanh(query + keys_j) for every row j of keys.
  Var additive_scores(Var query, Var keys, Var v);
  // sum_j weights[j] * rows_j, returned as a column vector.
  Var weighted_rows(Var rows, Var weights);
  // Mixes generation and copy probabilities into an extended-vocabulary
  // distribution:
  //   out[w] = p_gen * p_vocab[w] + (1 - p_gen) * sum_{j : source[j] == w} alpha[j]
  // where p_vocab covers the first p_vocab.rows() slots and out has
  // extended_size slots.
  Var pointer_mix(Var p_gen, Var p_vocab, Var alpha,
                  std::span<const std::size_t> source_ids,
                  std::size_t extended_size);

  // Accumulates d loss / d node for every node reachable from loss. loss must
  // be 1x1.
  void backward(Var loss);

  static constexpr Real kCrossEntropyEpsilon = 1e-12;

 private:
  using Backprop = std::function<void(Tape&, const Array2& upstream)>;

  struct Node {
    Array2 owned;
    const Array2* ref = nullptr;
    Array2 grad;
    Array2* external_grad = nullptr;
    bool is_parameter = false;
    Backprop backprop;

    const Array2& value() const { return ref != nullptr ? *ref : owned; }
  };

  Var push(Array2 value, Backprop backprop);
  Node& node(Var v);
  const Node& node(Var v) const;
  // Gradient buffer for v, zero-initialized on first use. Null for
  // parameters created without a gradient array.
  Array2* grad_buffer(Var v);

  bool recording_;
  std::vector<Node> nodes_;
};

}  // namespace topnn::neuro

#endif  // TOPNN_NEURO_TAPE_H_
