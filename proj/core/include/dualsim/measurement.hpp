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

#include "dualsim/layout.hpp"
#include "dualsim/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dualsim {

enum class ObservableKind { PauliX, PauliY, PauliZ, Number };

std::string_view to_string(ObservableKind kind);
std::optional<ObservableKind> parse_observable_kind(std::string_view name);

struct Observable {
  ObservableKind kind;
  ComplexMatrix matrix;
};

/// Pauli observables are 2x2; Number is diag(0, ..., local_dim - 1).
Observable make_observable(ObservableKind kind, std::size_t local_dim = 2);

/// Bit strings "b0b1..." for qubits, occupation tuples "(k0,k1,...)" for
/// qumodes; wire 0 first in both.
enum class LabelStyle { Bits, Occupations };

std::string basis_label(std::size_t index, const WireLayout& layout,
                        LabelStyle style);

/// Born rule: |c_k|^2 / sum_j |c_j|^2. Throws DomainError on a zero vector.
RealVector probabilities(const StateVector& state);

/// Shots per RNG block. Block b draws from Rng(seed).child(b), so counts do
/// not depend on how blocks are spread over threads.
inline constexpr std::uint64_t kShotBlock = 4096;

/// Multinomial draw by inverse CDF; keys are basis indices with count > 0.
std::map<std::size_t, std::uint64_t> sample_indices(const StateVector& state,
                                                    std::uint64_t shots,
                                                    std::uint64_t seed);

/// Same draw keyed by basis label.
std::map<std::string, std::uint64_t> sample(const StateVector& state,
                                            const WireLayout& layout,
                                            LabelStyle style,
                                            std::uint64_t shots,
                                            std::uint64_t seed);

/// Reduced density matrix of one wire, rho(i, j) = sum_rest psi_i conj(psi_j).
ComplexMatrix reduced_density_matrix(const StateVector& state,
                                     const WireLayout& layout,
                                     std::size_t wire);

/// <psi| I x .. x A x .. x I |psi> / <psi|psi>.
double expectation(const StateVector& state, const WireLayout& layout,
                   const Observable& obs, std::size_t wire);

/// <A^2> - <A>^2 on one wire, clamped at zero from rounding below -1e-12.
double variance(const StateVector& state, const WireLayout& layout,
                const Observable& obs, std::size_t wire);

/// One value per wire.
std::vector<double> expectations(const StateVector& state,
                                 const WireLayout& layout,
                                 const Observable& obs);
std::vector<double> variances(const StateVector& state,
                              const WireLayout& layout, const Observable& obs);

/// Product of the per-wire expectations.
double expectation_product(const StateVector& state, const WireLayout& layout,
                           const Observable& obs);

enum class ResultKind { Expectation, Variance, Probabilities, Counts };

/// Read-out of one circuit execution. For Counts, \`values\` holds the
/// (integral) count of each observed label, in basis order.
struct MeasurementResult {
  ResultKind kind;
  std::vector<std::string> labels;
  std::vector<double> values;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const MeasurementResult&,
                         const MeasurementResult&) = default;
};

struct SampleMoments {
  double mean;
  /// Mean squared deviation from the sample mean (divides by shot count).
  double variance;
};

/// Statistics of the eigenvalue read off each sampled outcome on `wire`.
/// Only observables diagonal in the computational basis (PauliZ, Number)
/// can be estimated from counts; others throw DomainError.
SampleMoments sampled_moments(const std::map<std::size_t, std::uint64_t>& counts,
                              const WireLayout& layout, ObservableKind kind,
                              std::size_t wire);

}  // namespace dualsim
