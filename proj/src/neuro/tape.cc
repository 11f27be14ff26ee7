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

#include "topnn/neuro/tape.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "topnn/error.h"
#include "topnn/neuro/kernels.h"

namespace topnn::neuro {

Var Tape::push(Array2 value, Backprop backprop) {
  Node n;
  n.owned = std::move(value);
  if (recording_) n.backprop = std::move(backprop);
  nodes_.push_back(std::move(n));
  return Var{nodes_.size() - 1};
}

Tape::Node& Tape::node(Var v) {
  if (v.id >= nodes_.size()) throw Error("Tape: unknown variable");
  return nodes_[v.id];
}

const Tape::Node& Tape::node(Var v) const {
  if (v.id >= nodes_.size()) throw Error("Tape: unknown variable");
  return nodes_[v.id];
}

Array2* Tape::grad_buffer(Var v) {
  Node& n = node(v);
  if (n.is_parameter) return n.external_grad;
  if (n.grad.empty() && !n.value().empty()) {
    n.grad = Array2(n.value().rows(), n.value().cols());
  }
  return &n.grad;
}

Var Tape::constant(Array2 value) { return push(std::move(value), nullptr); }

Var Tape::parameter(const Array2& value, Array2* grad) {
  if (grad != nullptr) require_same_shape(value, *grad, "parameter");
  Node n;
  n.ref = &value;
  n.is_parameter = true;
  n.external_grad = recording_ ? grad : nullptr;
  nodes_.push_back(std::move(n));
  return Var{nodes_.size() - 1};
}

const Array2& Tape::value(Var v) const { return node(v).value(); }

Real Tape::scalar(Var v) const {
  const Array2& a = value(v);
  if (a.size() != 1) {
    throw ShapeError("scalar: expected [1x1], got " + a.shape_string());
  }
  return a[0];
}

const Array2& Tape::grad(Var v) const { return node(v).grad; }

Var Tape::matmul(Var a, Var b) {
  Array2 out = neuro::matmul(value(a), value(b));
  return push(std::move(out), [a, b](Tape& t, const Array2& g) {
    if (Array2* ga = t.grad_buffer(a)) matmul_nt_accumulate(g, t.value(b), *ga);
    if (Array2* gb = t.grad_buffer(b)) matmul_tn_accumulate(t.value(a), g, *gb);
  });
}

Var Tape::matmul_nt(Var a, Var b) {
  const Array2& av = value(a);
  const Array2& bv = value(b);
  Array2 out(av.rows(), bv.rows());
  matmul_nt_accumulate(av, bv, out);
  return push(std::move(out), [a, b](Tape& t, const Array2& g) {
    if (Array2* ga = t.grad_buffer(a)) matmul_accumulate(g, t.value(b), *ga);
    if (Array2* gb = t.grad_buffer(b)) matmul_tn_accumulate(g, t.value(a), *gb);
  });
}

Var Tape::add(Var a, Var b) {
  Array2 out = neuro::add(value(a), value(b));
  return push(std::move(out), [a, b](Tape& t, const Array2& g) {
    if (Array2* ga = t.grad_buffer(a)) axpy(1.0, g, *ga);
    if (Array2* gb = t.grad_buffer(b)) axpy(1.0, g, *gb);
  });
}

Var Tape::sub(Var a, Var b) {
  require_same_shape(value(a), value(b), "sub");
  Array2 out = value(a);
  axpy(-1.0, value(b), out);
  return push(std::move(out), [a, b](Tape& t, const Array2& g) {
    if (Array2* ga = t.grad_buffer(a)) axpy(1.0, g, *ga);
    if (Array2* gb = t.grad_buffer(b)) axpy(-1.0, g, *gb);
  });
}

Var Tape::mul(Var a, Var b) {
  Array2 out = elementwise_mul(value(a), value(b));
  return push(std::move(out), [a, b](Tape& t, const Array2& g) {
    const KernelTable& k = kernels();
    if (Array2* ga = t.grad_buffer(a)) {
      k.mul_add(g.data(), t.value(b).data(), ga->data(), g.size());
    }
    if (Array2* gb = t.grad_buffer(b)) {
      k.mul_add(g.data(), t.value(a).data(), gb->data(), g.size());
    }
  });
}

Var Tape::scale(Var a, Real factor) {
  Array2 out(value(a).rows(), value(a).cols());
  axpy(factor, value(a), out);
  return push(std::move(out), [a, factor](Tape& t, const Array2& g) {
    if (Array2* ga = t.grad_buffer(a)) axpy(factor, g, *ga);
  });
}

Var Tape::one_minus(Var a) {
  const Array2& x = value(a);
  Array2 out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = 1.0 - x[i];
  return push(std::move(out), [a](Tape& t, const Array2& g) {
    if (Array2* ga = t.grad_buffer(a)) axpy(-1.0, g, *ga);
  });
}

Var Tape::tanh(Var a) {
  Array2 out = neuro::tanh(value(a));
  Var self{nodes_.size()};
  return push(std::move(out), [a, self](Tape& t, const Array2& g) {
    Array2* ga = t.grad_buffer(a);
    if (ga == nullptr) return;
    const Array2& y = t.value(self);
    for (std::size_t i = 0; i < y.size(); ++i) {
      (*ga)[i] += g[i] * (1.0 - y[i] * y[i]);
    }
  });
}

Var Tape::sigmoid(Var a) {
  Array2 out = neuro::sigmoid(value(a));
  Var self{nodes_.size()};
  return push(std::move(out), [a, self](Tape& t, const Array2& g) {
    Array2* ga = t.grad_buffer(a);
    if (ga == nullptr) return;
    const Array2& y = t.value(self);
    for (std::size_t i = 0; i < y.size(); ++i) {
      (*ga)[i] += g[i] * y[i] * (1.0 - y[i]);
    }
  });
}

Var Tape::concat(std::span<const Var> parts) {
  std::vector<Array2> values;
  values.reserve(parts.size());
  for (Var p : parts) values.push_back(value(p));
  Array2 out = neuro::concat(std::span<const Array2>(values));
  std::vector<Var> inputs(parts.begin(), parts.end());
  return push(std::move(out), [inputs = std::move(inputs)](Tape& t,
                                                           const Array2& g) {
    std::size_t offset = 0;
    for (Var p : inputs) {
      const std::size_t n = t.value(p).size();
      if (Array2* gp = t.grad_buffer(p)) {
        kernels().axpy(1.0, g.data() + offset, gp->data(), n);
      }
      offset += n;
    }
  });
}

Var Tape::concat(Var top, Var bottom) {
  const Var parts[] = {top, bottom};
  return concat(std::span<const Var>(parts));
}

Var Tape::gather_row(Var table, std::size_t row) {
  const Array2& m = value(table);
  if (row >= m.rows()) {
    throw ShapeError("gather_row: row " + std::to_string(row) +
                     " out of range for " + m.shape_string());
  }
  Array2 out = Array2::column(m.row(row));
  return push(std::move(out), [table, row](Tape& t, const Array2& g) {
    Array2* gt = t.grad_buffer(table);
    if (gt == nullptr) return;
    kernels().axpy(1.0, g.data(), gt->row(row).data(), g.size());
  });
}

Var Tape::dot(Var a, Var b) {
  Array2 out(1, 1, neuro::dot(value(a), value(b)));
  return push(std::move(out), [a, b](Tape& t, const Array2& g) {
    if (Array2* ga = t.grad_buffer(a)) axpy(g[0], t.value(b), *ga);
    if (Array2* gb = t.grad_buffer(b)) axpy(g[0], t.value(a), *gb);
  });
}

Var Tape::sum(Var a) {
  Array2 out(1, 1, neuro::sum(value(a)));
  return push(std::move(out), [a](Tape& t, const Array2& g) {
    Array2* ga = t.grad_buffer(a);
    if (ga == nullptr) return;
    for (Real& v : ga->values()) v += g[0];
  });
}

Var Tape::mean(std::span<const Var> scalars) {
  if (scalars.empty()) throw ShapeError("mean: no operands");
  Real total = 0.0;
  for (Var s : scalars) total += scalar(s);
  const Real inv = 1.0 / static_cast<Real>(scalars.size());
  std::vector<Var> inputs(scalars.begin(), scalars.end());
  return push(Array2(1, 1, total * inv),
              [inputs = std::move(inputs), inv](Tape& t, const Array2& g) {
                for (Var s : inputs) {
                  if (Array2* gs = t.grad_buffer(s)) (*gs)[0] += g[0] * inv;
                }
              });
}

Var Tape::softmax(Var logits, std::span<const std::uint8_t> mask) {
  const Array2& x = value(logits);
  if (x.cols() != 1) {
    throw ShapeError("softmax: expected a column vector, got " +
                     x.shape_string());
  }
  if (!mask.empty() && mask.size() != x.rows()) {
    throw ShapeError("softmax: mask of length " + std::to_string(mask.size()) +
                     " for logits " + x.shape_string());
  }
  auto valid = [&](std::size_t i) { return mask.empty() || mask[i] != 0; };
  Real max_logit = -std::numeric_limits<Real>::infinity();
  bool any = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (valid(i)) {
      max_logit = std::max(max_logit, x[i]);
      any = true;
    }
  }
  if (!any) throw Error("softmax: every entry is masked");
  Array2 out(x.rows(), 1);
  Real total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (valid(i)) {
      out[i] = std::exp(x[i] - max_logit);
      total += out[i];
    }
  }
  const Real inv = 1.0 / total;
  for (Real& v : out.values()) v *= inv;

  Var self{nodes_.size()};
  return push(std::move(out), [logits, self](Tape& t, const Array2& g) {
    Array2* gx = t.grad_buffer(logits);
    if (gx == nullptr) return;
    const Array2& y = t.value(self);
    const Real inner = neuro::dot(g, y);
    for (std::size_t i = 0; i < y.size(); ++i) (*gx)[i] += y[i] * (g[i] - inner);
  });
}

Var Tape::cross_entropy(Var dist, std::size_t target) {
  const Array2& p = value(dist);
  if (target >= p.size()) {
    throw ShapeError("cross_entropy: target " + std::to_string(target) +
                     " outside " + p.shape_string());
  }
  const Real shifted = p[target] + kCrossEntropyEpsilon;
  return push(Array2(1, 1, -std::log(shifted)),
              [dist, target, shifted](Tape& t, const Array2& g) {
                if (Array2* gp = t.grad_buffer(dist)) {
                  (*gp)[target] -= g[0] / shifted;
                }
              });
}

Var Tape::stack_rows(std::span<const Var> columns) {
  if (columns.empty()) throw ShapeError("stack_rows: no operands");
  const std::size_t width = value(columns.front()).size();
  Array2 out(columns.size(), width);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Array2& c = value(columns[j]);
    if (c.cols() != 1 || c.size() != width) {
      throw ShapeError("stack_rows: shape mismatch " +
                       value(columns.front()).shape_string() + " vs " +
                       c.shape_string());
    }
    std::copy(c.values().begin(), c.values().end(), out.row(j).begin());
  }
  std::vector<Var> inputs(columns.begin(), columns.end());
  return push(std::move(out), [inputs = std::move(inputs)](Tape& t,
                                                           const Array2& g) {
    for (std::size_t j = 0; j < inputs.size(); ++j) {
      if (Array2* gc = t.grad_buffer(inputs[j])) {
        kernels().axpy(1.0, g.row(j).data(), gc->data(), gc->size());
      }
    }
  });
}

Var Tape::additive_scores(Var query, Var keys, Var v) {
  const Array2& q = value(query);
  const Array2& k = value(keys);
  const Array2& w = value(v);
  if (q.cols() != 1 || w.cols() != 1 || q.rows() != k.cols() ||
      w.rows() != k.cols()) {
    throw ShapeError("additive_scores: shape mismatch " + q.shape_string() +
                     " vs " + k.shape_string() + " vs " + w.shape_string());
  }
  const std::size_t positions = k.rows();
  const std::size_t width = k.cols();
  // Saved activations tanh(query + keys_j), one row per position.
  Array2 act(positions, width);
  Array2 out(positions, 1);
  for (std::size_t j = 0; j < positions; ++j) {
    for (std::size_t h = 0; h < width; ++h) {
      act(j, h) = std::tanh(q[h] + k(j, h));
    }
    out[j] = kernels().dot(act.row(j).data(), w.data(), width);
  }
  return push(std::move(out), [query, keys, v, act = std::move(act)](
                                  Tape& t, const Array2& g) {
    const Array2& wv = t.value(v);
    Array2* gq = t.grad_buffer(query);
    Array2* gk = t.grad_buffer(keys);
    Array2* gv = t.grad_buffer(v);
    const std::size_t width = act.cols();
    std::vector<Real> pre(width);
    for (std::size_t j = 0; j < act.rows(); ++j) {
      if (g[j] == 0.0) continue;
      if (gv != nullptr) kernels().axpy(g[j], act.row(j).data(), gv->data(), width);
      for (std::size_t h = 0; h < width; ++h) {
        const Real a = act(j, h);
        pre[h] = g[j] * wv[h] * (1.0 - a * a);
      }
      if (gq != nullptr) kernels().axpy(1.0, pre.data(), gq->data(), width);
      if (gk != nullptr) kernels().axpy(1.0, pre.data(), gk->row(j).data(), width);
    }
  });
}

Var Tape::weighted_rows(Var rows, Var weights) {
  const Array2& r = value(rows);
  const Array2& w = value(weights);
  if (w.cols() != 1 || w.rows() != r.rows()) {
    throw ShapeError("weighted_rows: shape mismatch " + r.shape_string() +
                     " vs " + w.shape_string());
  }
  Array2 out(r.cols(), 1);
  matmul_tn_accumulate(r, w, out);
  return push(std::move(out), [rows, weights](Tape& t, const Array2& g) {
    if (Array2* gr = t.grad_buffer(rows)) {
      matmul_nt_accumulate(t.value(weights), g, *gr);
    }
    if (Array2* gw = t.grad_buffer(weights)) {
      matmul_accumulate(t.value(rows), g, *gw);
    }
  });
}

Var Tape::pointer_mix(Var p_gen, Var p_vocab, Var alpha,
                      std::span<const std::size_t> source_ids,
                      std::size_t extended_size) {
  const Real gen = scalar(p_gen);
  const Array2& vocab = value(p_vocab);
  const Array2& attn = value(alpha);
  if (vocab.cols() != 1 || attn.cols() != 1 || vocab.rows() > extended_size ||
      attn.rows() != source_ids.size()) {
    throw ShapeError("pointer_mix: shape mismatch " + vocab.shape_string() +
                     " vs " + attn.shape_string() + " with " +
                     std::to_string(source_ids.size()) + " source ids");
  }
  for (std::size_t id : source_ids) {
    if (id >= extended_size) {
      throw ShapeError("pointer_mix: source id " + std::to_string(id) +
                       " outside extended vocabulary of " +
                       std::to_string(extended_size));
    }
  }
  Array2 out(extended_size, 1);
  for (std::size_t w = 0; w < vocab.rows(); ++w) out[w] = gen * vocab[w];
  const Real copy = 1.0 - gen;
  for (std::size_t j = 0; j < source_ids.size(); ++j) {
    out[source_ids[j]] += copy * attn[j];
  }
  std::vector<std::size_t> ids(source_ids.begin(), source_ids.end());
  return push(std::move(out), [p_gen, p_vocab, alpha, ids = std::move(ids)](
                                  Tape& t, const Array2& g) {
    const Real gen = t.scalar(p_gen);
    const Array2& vocab = t.value(p_vocab);
    const Array2& attn = t.value(alpha);
    if (Array2* gv = t.grad_buffer(p_vocab)) {
      kernels().axpy(gen, g.data(), gv->data(), vocab.size());
    }
    if (Array2* ga = t.grad_buffer(alpha)) {
      for (std::size_t j = 0; j < ids.size(); ++j) {
        (*ga)[j] += (1.0 - gen) * g[ids[j]];
      }
    }
    if (Array2* gg = t.grad_buffer(p_gen)) {
      Real d = kernels().dot(g.data(), vocab.data(), vocab.size());
      for (std::size_t j = 0; j < ids.size(); ++j) d -= g[ids[j]] * attn[j];
      (*gg)[0] += d;
    }
  });
}

void Tape::backward(Var loss) {
  const Array2& l = value(loss);
  if (l.size() != 1) {
    throw ShapeError("backward: loss must be [1x1], got " + l.shape_string());
  }
  if (!recording_) throw Error("backward: tape was not recording");
  Array2* seed = grad_buffer(loss);
  if (seed == nullptr) return;
  (*seed)[0] += 1.0;
  for (std::size_t i = loss.id + 1; i-- > 0;) {
    Node& n = nodes_[i];
    if (n.is_parameter || !n.backprop || n.grad.empty()) continue;
    // The closure only touches gradients of earlier nodes, so a reference to
    // this node's gradient stays valid.
    n.backprop(*this, n.grad);
  }
}

}  // namespace topnn::neuro
