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

#ifndef TOPNN_NEURO_GRU_H_
#define TOPNN_NEURO_GRU_H_

#include <cstddef>

#include "topnn/neuro/array.h"
#include "topnn/neuro/tape.h"

namespace topnn::neuro {

// Gated recurrent unit:
//   z  = sigmoid(W_z x + U_z h + b_z)
//   r  = sigmoid(W_r x + U_r h + b_r)
//   h~ = tanh(W_h x + U_h (r * h) + b_h)
//   h' = (1 - z) * h + z * h~
struct GruCell {
  Array2 w_z, w_r, w_h;  // hidden x input
  Array2 u_z, u_r, u_h;  // hidden x hidden
  Array2 b_z, b_r, b_h;  // hidden x 1

  static GruCell zeros(std::size_t input_dim, std::size_t hidden_dim);

  std::size_t input_dim() const { return w_z.cols(); }
  std::size_t hidden_dim() const { return w_z.rows(); }

  // Visits every array with a stable short name, in declaration order.
  template <typename Self, typename Fn>
  static void visit(Self& cell, Fn&& fn) {
    fn("w_z", cell.w_z);
    fn("w_r", cell.w_r);
    fn("w_h", cell.w_h);
    fn("u_z", cell.u_z);
    fn("u_r", cell.u_r);
    fn("u_h", cell.u_h);
    fn("b_z", cell.b_z);
    fn("b_r", cell.b_r);
    fn("b_h", cell.b_h);
  }
};

// A GruCell's arrays bound to a tape.
struct GruVars {
  Var w_z, w_r, w_h, u_z, u_r, u_h, b_z, b_r, b_h;
  std::size_t input_dim = 0;
  std::size_t hidden_dim = 0;
};

// grads may be null; otherwise it must have the cell's shapes.
GruVars bind(Tape& tape, const GruCell& cell, GruCell* grads);

Var gru_step(Tape& tape, const GruVars& cell, Var x, Var h_prev);

// Eager evaluation of one step.
Array2 gru_step(const GruCell& cell, const Array2& x, const Array2& h_prev);

}  // namespace topnn::neuro

#endif  // TOPNN_NEURO_GRU_H_
