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

#include "topnn/neuro/gru.h"

#include <string>

#include "topnn/error.h"

namespace topnn::neuro {

GruCell GruCell::zeros(std::size_t input_dim, std::size_t hidden_dim) {
  GruCell c;
  c.w_z = c.w_r = c.w_h = Array2(hidden_dim, input_dim);
  c.u_z = c.u_r = c.u_h = Array2(hidden_dim, hidden_dim);
  c.b_z = c.b_r = c.b_h = Array2(hidden_dim, 1);
  return c;
}

GruVars bind(Tape& tape, const GruCell& cell, GruCell* grads) {
  auto p = [&](const Array2& value, Array2 GruCell::*member) {
    return tape.parameter(value, grads != nullptr ? &(grads->*member) : nullptr);
  };
  GruVars v;
  v.w_z = p(cell.w_z, &GruCell::w_z);
  v.w_r = p(cell.w_r, &GruCell::w_r);
  v.w_h = p(cell.w_h, &GruCell::w_h);
  v.u_z = p(cell.u_z, &GruCell::u_z);
  v.u_r = p(cell.u_r, &GruCell::u_r);
  v.u_h = p(cell.u_h, &GruCell::u_h);
  v.b_z = p(cell.b_z, &GruCell::b_z);
  v.b_r = p(cell.b_r, &GruCell::b_r);
  v.b_h = p(cell.b_h, &GruCell::b_h);
  v.input_dim = cell.input_dim();
  v.hidden_dim = cell.hidden_dim();
  return v;
}

Var gru_step(Tape& tape, const GruVars& cell, Var x, Var h_prev) {
  const Array2& xv = tape.value(x);
  const Array2& hv = tape.value(h_prev);
  if (xv.cols() != 1 || xv.rows() != cell.input_dim || hv.cols() != 1 ||
      hv.rows() != cell.hidden_dim) {
    throw ShapeError("gru_step: shape mismatch x" + xv.shape_string() + " h" +
                     hv.shape_string() + " for cell [" +
                     std::to_string(cell.hidden_dim) + "x" +
                     std::to_string(cell.input_dim) + "]");
  }
  auto gate = [&](Var w, Var u, Var b, Var h) {
    return tape.add(tape.add(tape.matmul(w, x), tape.matmul(u, h)), b);
  };
  Var z = tape.sigmoid(gate(cell.w_z, cell.u_z, cell.b_z, h_prev));
  Var r = tape.sigmoid(gate(cell.w_r, cell.u_r, cell.b_r, h_prev));
  Var candidate =
      tape.tanh(gate(cell.w_h, cell.u_h, cell.b_h, tape.mul(r, h_prev)));
  return tape.add(tape.mul(tape.one_minus(z), h_prev), tape.mul(z, candidate));
}

Array2 gru_step(const GruCell& cell, const Array2& x, const Array2& h_prev) {
  Tape tape(/*recording=*/false);
  GruVars vars = bind(tape, cell, nullptr);
  Var out = gru_step(tape, vars, tape.constant(x), tape.constant(h_prev));
  return tape.value(out);
}

}  // namespace topnn::neuro
