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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dualsim {

inline constexpr std::size_t kMaxQubits = 20;

enum class QubitGateKind { H, X, Y, Z, T, RX, P, CNOT, CP, CU };

std::string_view to_string(QubitGateKind kind);
std::optional<QubitGateKind> parse_qubit_gate_kind(std::string_view name);

/// Number of wires and real parameters a named gate takes.
std::size_t gate_wire_count(QubitGateKind kind);
std::size_t gate_param_count(QubitGateKind kind);

struct QubitGate {
  QubitGateKind kind;
  std::vector<double> params;
  ComplexMatrix matrix;

  std::size_t wire_count() const;
};

/// H, X, Y, Z, T, RX(theta), P(theta), CNOT, CP(theta). Throws DomainError on
/// an unknown name or DimensionError on a parameter-count mismatch.
QubitGate standard_gate(QubitGateKind kind, std::span<const double> params = {});
QubitGate standard_gate(std::string_view name, std::span<const double> params = {});

/// |0><0| (x) I + |1><1| (x) U, control on the first (most significant) wire.
/// Throws NonUnitaryError if u is not unitary within kUnitarityTolerance.
ComplexMatrix controlled_unitary(const ComplexMatrix& u);

/// Wraps controlled_unitary(u) as a two-wire CU gate.
QubitGate controlled_gate(const ComplexMatrix& u);

/// 2^n x 2^n operator for the gate on `targets` (n <= 12).
ComplexMatrix embed_gate(const QubitGate& gate,
                         std::span<const std::size_t> targets,
                         std::size_t n_qubits);

class QubitRegister {
 public:
  /// |0...0> on n qubits.
  explicit QubitRegister(std::size_t n_qubits);

  /// Wraps an existing state; throws if its length is not 2^n or it is not
  /// normalized within kNormTolerance.
  QubitRegister(std::size_t n_qubits, StateVector state);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const StateVector& state() const noexcept { return state_; }
  WireLayout layout() const { return {2, n_qubits_}; }

 private:
  std::size_t n_qubits_;
  StateVector state_;
};

/// Returns a new register with the gate applied. Uses the local-axis kernel;
/// agrees with embed_gate(...) * state.
QubitRegister apply(const QubitRegister& reg, const QubitGate& gate,
                    std::span<const std::size_t> targets);

}  // namespace dualsim
