// Copyright 2026 The dualsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dualsim/layout.hpp"

#include "dualsim/error.hpp"

#include <string>

namespace dualsim {
namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Offset of each local basis index inside the full index, targets[0] being
// the most significant local digit.
std::vector<std::size_t> local_offsets(const WireLayout& layout,
                                       std::span<const std::size_t> targets) {
  const std::size_t d = layout.local_dim;
  const std::size_t local = ipow(d, targets.size());
  std::vector<std::size_t> offsets(local, 0);
  for (std::size_t j = 0; j < local; ++j) {
    std::size_t rem = j;
    std::size_t off = 0;
    for (std::size_t t = targets.size(); t-- > 0;) {
      off += (rem % d) * layout.stride(targets[t]);
      rem /= d;
    }
    offsets[j] = off;
  }
  return offsets;
}

}  // namespace

std::vector<std::size_t> rest_bases(const WireLayout& layout,
                                    std::span<const std::size_t> targets) {
  std::vector<bool> is_target(layout.wires, false);
  for (auto t : targets) is_target[t] = true;
  std::vector<std::size_t> free_strides;
  for (std::size_t w = layout.wires; w-- > 0;) {
    if (!is_target[w]) free_strides.push_back(layout.stride(w));
  }
  const std::size_t d = layout.local_dim;
  const std::size_t count = ipow(d, free_strides.size());
  std::vector<std::size_t> bases;
  bases.reserve(count);
  std::vector<std::size_t> counter(free_strides.size(), 0);
  std::size_t base = 0;
  for (std::size_t n = 0; n < count; ++n) {
    bases.push_back(base);
    // Odometer increment, least significant free wire first.
    for (std::size_t i = 0; i < counter.size(); ++i) {
      if (++counter[i] < d) {
        base += free_strides[i];
        break;
      }
      base -= (d - 1) * free_strides[i];
      counter[i] = 0;
    }
  }
  return bases;
}

namespace {

void check_op(const WireLayout& layout, const ComplexMatrix& op,
              std::size_t n_targets) {
  const auto expected = static_cast<Eigen::Index>(ipow(layout.local_dim, n_targets));
  if (op.rows() != expected || op.cols() != expected) {
    throw DimensionError("operator is " + std::to_string(op.rows()) + "x" +
                         std::to_string(op.cols()) + " but " +
                         std::to_string(n_targets) + " target(s) of local dimension " +
                         std::to_string(layout.local_dim) + " need " +
                         std::to_string(expected) + "x" + std::to_string(expected));
  }
}

}  // namespace

std::size_t WireLayout::dim() const { return ipow(local_dim, wires); }

std::size_t WireLayout::stride(std::size_t wire) const {
  return ipow(local_dim, wires - 1 - wire);
}

std::size_t WireLayout::digit(std::size_t index, std::size_t wire) const {
  return (index / stride(wire)) % local_dim;
}

std::vector<std::size_t> WireLayout::digits(std::size_t index) const {
  std::vector<std::size_t> out(wires);
  for (std::size_t w = wires; w-- > 0;) {
    out[w] = index % local_dim;
    index /= local_dim;
  }
  return out;
}

void check_targets(const WireLayout& layout,
                   std::span<const std::size_t> targets) {
  if (targets.empty()) throw DimensionError("no target wires given");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] >= layout.wires) {
      throw DimensionError("wire " + std::to_string(targets[i]) +
                           " out of range for " + std::to_string(layout.wires) +
                           " wire(s)");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[j] == targets[i]) {
        throw DimensionError("duplicate target wire " +
                             std::to_string(targets[i]));
      }
    }
  }
}

void apply_local_inplace(StateVector& state, const WireLayout& layout,
                         const ComplexMatrix& op,
                         std::span<const std::size_t> targets) {
  check_targets(layout, targets);
  check_op(layout, op, targets.size());
  if (static_cast<std::size_t>(state.size()) != layout.dim()) {
    throw DimensionError("state has " + std::to_string(state.size()) +
                         " amplitudes, layout expects " +
                         std::to_string(layout.dim()));
  }
  const auto offsets = local_offsets(layout, targets);
  const auto bases = rest_bases(layout, targets);
  const std::size_t local = offsets.size();
  std::vector<Complex> in(local);
  std::vector<Complex> out(local);
  for (const std::size_t base : bases) {
    for (std::size_t j = 0; j < local; ++j) in[j] = state(base + offsets[j]);
    for (std::size_t i = 0; i < local; ++i) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < local; ++j) {
        acc += op(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * in[j];
      }
      out[i] = acc;
    }
    for (std::size_t i = 0; i < local; ++i) state(base + offsets[i]) = out[i];
  }
}

StateVector apply_local(const StateVector& state, const WireLayout& layout,
                        const ComplexMatrix& op,
                        std::span<const std::size_t> targets) {
  StateVector out = state;
  apply_local_inplace(out, layout, op, targets);
  return out;
}

ComplexMatrix embed_dense(const ComplexMatrix& op,
                          std::span<const std::size_t> targets,
                          const WireLayout& layout) {
  check_targets(layout, targets);
  check_op(layout, op, targets.size());
  const std::size_t dim = layout.dim();
  if (dim > kMaxDenseDim) {
    throw CapacityError("dense operator of dimension " + std::to_string(dim) +
                        " exceeds the limit of " + std::to_string(kMaxDenseDim));
  }
  const auto offsets = local_offsets(layout, targets);
  const auto bases = rest_bases(layout, targets);
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const std::size_t base : bases) {
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      for (std::size_t j = 0; j < offsets.size(); ++j) {
        out(static_cast<Eigen::Index>(base + offsets[i]),
            static_cast<Eigen::Index>(base + offsets[j])) =
            op(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return out;
}

}  // namespace dualsim
