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
#pragma once

#include "dualsim/numeric.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace dualsim {

/// Largest basis dimension for which a dense operator is materialized.
inline constexpr std::size_t kMaxDenseDim = 4096;

/// Homogeneous tensor-product layout: `wires` factors of size `local_dim`,
/// big-endian (wire 0 is the leftmost factor and the most significant digit
/// of a basis index).
struct WireLayout {
  std::size_t local_dim = 2;
  std::size_t wires = 1;

  std::size_t dim() const;
  std::size_t stride(std::size_t wire) const;
  std::size_t digit(std::size_t index, std::size_t wire) const;
  std::vector<std::size_t> digits(std::size_t index) const;

  friend bool operator==(const WireLayout&, const WireLayout&) = default;
};

/// Throws DimensionError on out-of-range or duplicate wires.
void check_targets(const WireLayout& layout,
                   std::span<const std::size_t> targets);

/// Applies `op` (dimension local_dim^k for k targets, targets[0] most
/// significant) to the given wires without materializing the full operator.
StateVector apply_local(const StateVector& state, const WireLayout& layout,
                        const ComplexMatrix& op,
                        std::span<const std::size_t> targets);

void apply_local_inplace(StateVector& state, const WireLayout& layout,
                         const ComplexMatrix& op,
                         std::span<const std::size_t> targets);

/// Indices whose digit is zero on every target wire, increasing. Adding the
/// local offsets of the targets to each enumerates the full basis.
std::vector<std::size_t> rest_bases(const WireLayout& layout,
                                    std::span<const std::size_t> targets);

/// Full dim x dim matrix acting as `op` on the targets and identity elsewhere.
ComplexMatrix embed_dense(const ComplexMatrix& op,
                          std::span<const std::size_t> targets,
                          const WireLayout& layout);

}  // namespace dualsim
