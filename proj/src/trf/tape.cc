// trf/tape.cc
//
// Copyright 2026  The trflm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the Apache 2 License for the specific language governing permissions
// and limitations under the License.

#include "trf/tape.h"

#include <cmath>

#include "trf/logmath.h"

namespace trf {

void Tape::Reset() {
  used_ = 0;
  args_used_ = 0;
}

Tape::Node& Tape::NewNode(Op op) {
  if (used_ == static_cast<int>(nodes_.size())) {
    nodes_.emplace_back();
  }
  Node& n = nodes_[used_++];
  n.op = op;
  n.a = n.b = -1;
  n.aux = n.aux2 = 0;
  n.args_off = 0;
  n.ext = nullptr;
  return n;
}

Tape::Id Tape::Constant(const Tensor& v) {
  Node& n = NewNode(Op::kConstant);
  n.val.ResizeLike(v);
  std::copy(v.Flat().begin(), v.Flat().end(), n.val.data());
  return used_ - 1;
}

Tape::Id Tape::ZeroVector(int len) {
  Node& n = NewNode(Op::kConstant);
  n.val.Resize(1, len, 1);
  n.val.Zero();
  return used_ - 1;
}

Tape::Id Tape::Param(int block_index) {
  TRF_CHECK(store_ != nullptr, "tape has no bound parameter store");
  Node& n = NewNode(Op::kParam);
  n.aux = block_index;
  n.ext = &store_->block(block_index).value;
  return used_ - 1;
}

Tape::Id Tape::MatMul(Id a, Id b) {
  const Tensor& av = val_of(nodes_[a]);
  const Tensor& bv = val_of(nodes_[b]);
  TRF_CHECK(av.rank() == 2, "matmul lhs must be a matrix");
  int k = bv.rank() == 2 ? bv.rows() : bv.size();
  TRF_CHECK(av.cols() == k, "matmul inner dimensions ", av.cols(), " vs ", k);
  Node& n = NewNode(Op::kMatMul);
  n.a = a;
  n.b = b;
  if (bv.rank() == 2) {
    n.val.Resize(2, av.rows(), bv.cols());
    n.val.Zero();
    for (int i = 0; i < av.rows(); ++i) {
      for (int p = 0; p < k; ++p) {
        double aip = av.at(i, p);
        for (int j = 0; j < bv.cols(); ++j) {
          n.val.at(i, j) += aip * bv.at(p, j);
        }
      }
    }
  } else {
    n.val.Resize(1, av.rows(), 1);
    for (int i = 0; i < av.rows(); ++i) {
      const double* row = av.data() + static_cast<size_t>(i) * k;
      double s = 0.0;
      for (int p = 0; p < k; ++p) s += row[p] * bv[p];
      n.val[i] = s;
    }
  }
  return used_ - 1;
}

Tape::Id Tape::Add(Id a, Id b) {
  const Tensor& av = val_of(nodes_[a]);
  const Tensor& bv = val_of(nodes_[b]);
  TRF_CHECK(av.SameShape(bv), "add shape mismatch");
  Node& n = NewNode(Op::kAdd);
  n.a = a;
  n.b = b;
  n.val.ResizeLike(av);
  for (int i = 0; i < av.size(); ++i) n.val[i] = av[i] + bv[i];
  return used_ - 1;
}

Tape::Id Tape::Mul(Id a, Id b) {
  const Tensor& av = val_of(nodes_[a]);
  const Tensor& bv = val_of(nodes_[b]);
  TRF_CHECK(av.SameShape(bv), "mul shape mismatch");
  Node& n = NewNode(Op::kMul);
  n.a = a;
  n.b = b;
  n.val.ResizeLike(av);
  for (int i = 0; i < av.size(); ++i) n.val[i] = av[i] * bv[i];
  return used_ - 1;
}

Tape::Id Tape::Sigmoid(Id a) {
  const Tensor& av = val_of(nodes_[a]);
  Node& n = NewNode(Op::kSigmoid);
  n.a = a;
  n.val.ResizeLike(av);
  for (int i = 0; i < av.size(); ++i) n.val[i] = StableSigmoid(av[i]);
  return used_ - 1;
}

Tape::Id Tape::Tanh(Id a) {
  const Tensor& av = val_of(nodes_[a]);
  Node& n = NewNode(Op::kTanh);
  n.a = a;
  n.val.ResizeLike(av);
  for (int i = 0; i < av.size(); ++i) n.val[i] = std::tanh(av[i]);
  return used_ - 1;
}

Tape::Id Tape::Dot(Id a, Id b) {
  const Tensor& av = val_of(nodes_[a]);
  const Tensor& bv = val_of(nodes_[b]);
  TRF_CHECK(av.size() == bv.size(), "dot length mismatch");
  Node& n = NewNode(Op::kDot);
  n.a = a;
  n.b = b;
  n.val.Resize(1, 1, 1);
  double s = 0.0;
  for (int i = 0; i < av.size(); ++i) s += av[i] * bv[i];
  n.val[0] = s;
  return used_ - 1;
}

Tape::Id Tape::EmbedRow(Id table, int row) {
  const Tensor& tv = val_of(nodes_[table]);
  TRF_CHECK(tv.rank() == 2 && row >= 0 && row < tv.rows(), "embedding row ", row,
            " out of range");
  Node& n = NewNode(Op::kEmbedRow);
  n.a = table;
  n.aux = row;
  n.val.Resize(1, tv.cols(), 1);
  auto src = tv.Row(row);
  std::copy(src.begin(), src.end(), n.val.data());
  return used_ - 1;
}

Tape::Id Tape::Slice(Id a, int offset, int len) {
  const Tensor& av = val_of(nodes_[a]);
  TRF_CHECK(av.rank() == 1 && offset >= 0 && offset + len <= av.size(),
            "slice out of range");
  Node& n = NewNode(Op::kSlice);
  n.a = a;
  n.aux = offset;
  n.aux2 = len;
  n.val.Resize(1, len, 1);
  for (int i = 0; i < len; ++i) n.val[i] = av[offset + i];
  return used_ - 1;
}

Tape::Id Tape::Sum(std::span<const Id> ids) {
  TRF_CHECK(!ids.empty(), "sum over no terms");
  const Tensor& first = val_of(nodes_[ids[0]]);
  int off = args_used_;
  for (Id id : ids) {
    TRF_CHECK(val_of(nodes_[id]).SameShape(first), "sum shape mismatch");
    if (args_used_ == static_cast<int>(args_.size())) {
      args_.push_back(id);
    } else {
      args_[args_used_] = id;
    }
    ++args_used_;
  }
  Node& n = NewNode(Op::kSum);
  n.args_off = off;
  n.aux2 = static_cast<int>(ids.size());
  n.val.ResizeLike(first);
  n.val.Zero();
  for (Id id : ids) {
    const Tensor& v = val_of(nodes_[id]);
    for (int i = 0; i < v.size(); ++i) n.val[i] += v[i];
  }
  return used_ - 1;
}

Tape::Id Tape::LogSoftmaxPick(Id logits, int index) {
  const Tensor& lv = val_of(nodes_[logits]);
  TRF_CHECK(lv.rank() == 1 && index >= 0 && index < lv.size(),
            "log-softmax pick index out of range");
  Node& n = NewNode(Op::kLogSoftmaxPick);
  n.a = logits;
  n.aux = index;
  n.val.Resize(1, 1, 1);
  n.cache.Resize(1, lv.size(), 1);
  double mx = lv[0];
  for (int i = 1; i < lv.size(); ++i) mx = std::max(mx, lv[i]);
  double z = 0.0;
  for (int i = 0; i < lv.size(); ++i) {
    n.cache[i] = std::exp(lv[i] - mx);
    z += n.cache[i];
  }
  for (int i = 0; i < lv.size(); ++i) n.cache[i] /= z;
  n.val[0] = lv[index] - mx - std::log(z);
  return used_ - 1;
}

const Tensor& Tape::value(Id id) const {
  TRF_CHECK(id >= 0 && id < used_, "bad tape id");
  return val_of(nodes_[id]);
}

double Tape::scalar(Id id) const {
  const Tensor& v = value(id);
  TRF_CHECK(v.size() == 1, "node is not a scalar");
  return v[0];
}

void Tape::Backward(Id output, GradSink& sink, double seed) {
  TRF_CHECK(output >= 0 && output < used_, "bad tape id");
  TRF_CHECK(value(output).size() == 1, "backward needs a scalar output");
  for (int i = 0; i <= output; ++i) {
    Node& n = nodes_[i];
    n.adj.ResizeLike(val_of(n));
    n.adj.Zero();
  }
  nodes_[output].adj[0] = seed;

  for (int i = output; i >= 0; --i) {
    Node& n = nodes_[i];
    const Tensor& adj = n.adj;
    switch (n.op) {
      case Op::kConstant:
        break;
      case Op::kParam:
        Axpy(1.0, adj, sink[n.aux]);
        break;
      case Op::kMatMul: {
        Node& na = nodes_[n.a];
        Node& nb = nodes_[n.b];
        const Tensor& av = val_of(na);
        const Tensor& bv = val_of(nb);
        int k = av.cols();
        if (bv.rank() == 2) {
          for (int r = 0; r < av.rows(); ++r) {
            for (int p = 0; p < k; ++p) {
              double s = 0.0;
              for (int j = 0; j < bv.cols(); ++j) s += adj.at(r, j) * bv.at(p, j);
              na.adj.at(r, p) += s;
            }
          }
          for (int p = 0; p < k; ++p) {
            for (int j = 0; j < bv.cols(); ++j) {
              double s = 0.0;
              for (int r = 0; r < av.rows(); ++r) s += av.at(r, p) * adj.at(r, j);
              nb.adj.at(p, j) += s;
            }
          }
        } else {
          for (int r = 0; r < av.rows(); ++r) {
            double g = adj[r];
            if (g == 0.0) continue;
            double* arow = na.adj.data() + static_cast<size_t>(r) * k;
            const double* vrow = av.data() + static_cast<size_t>(r) * k;
            for (int p = 0; p < k; ++p) {
              arow[p] += g * bv[p];
              nb.adj[p] += g * vrow[p];
            }
          }
        }
        break;
      }
      case Op::kAdd: {
        Axpy(1.0, adj, nodes_[n.a].adj);
        Axpy(1.0, adj, nodes_[n.b].adj);
        break;
      }
      case Op::kMul: {
        Node& na = nodes_[n.a];
        Node& nb = nodes_[n.b];
        const Tensor& av = val_of(na);
        const Tensor& bv = val_of(nb);
        for (int j = 0; j < adj.size(); ++j) {
          na.adj[j] += adj[j] * bv[j];
          nb.adj[j] += adj[j] * av[j];
        }
        break;
      }
      case Op::kSigmoid: {
        Node& na = nodes_[n.a];
        for (int j = 0; j < adj.size(); ++j) {
          double y = n.val[j];
          na.adj[j] += adj[j] * y * (1.0 - y);
        }
        break;
      }
      case Op::kTanh: {
        Node& na = nodes_[n.a];
        for (int j = 0; j < adj.size(); ++j) {
          double y = n.val[j];
          na.adj[j] += adj[j] * (1.0 - y * y);
        }
        break;
      }
      case Op::kDot: {
        Node& na = nodes_[n.a];
        Node& nb = nodes_[n.b];
        const Tensor& av = val_of(na);
        const Tensor& bv = val_of(nb);
        double g = adj[0];
        for (int j = 0; j < av.size(); ++j) {
          na.adj[j] += g * bv[j];
          nb.adj[j] += g * av[j];
        }
        break;
      }
      case Op::kEmbedRow: {
        Node& na = nodes_[n.a];
        double* row = na.adj.data() + static_cast<size_t>(n.aux) * na.adj.cols();
        for (int j = 0; j < adj.size(); ++j) row[j] += adj[j];
        break;
      }
      case Op::kSlice: {
        Node& na = nodes_[n.a];
        for (int j = 0; j < n.aux2; ++j) na.adj[n.aux + j] += adj[j];
        break;
      }
      case Op::kSum: {
        for (int t = 0; t < n.aux2; ++t) {
          Axpy(1.0, adj, nodes_[args_[n.args_off + t]].adj);
        }
        break;
      }
      case Op::kLogSoftmaxPick: {
        Node& na = nodes_[n.a];
        double g = adj[0];
        for (int j = 0; j < n.cache.size(); ++j) {
          double ind = (j == n.aux) ? 1.0 : 0.0;
          na.adj[j] += g * (ind - n.cache[j]);
        }
        break;
      }
    }
  }
}

}  // namespace trf
