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

#include "dualsim/qubit.hpp"

#include "dualsim/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dualsim {
namespace {

constexpr Complex kI{0.0, 1.0};

struct GateInfo {
  QubitGateKind kind;
  std::string_view name;
  std::size_t wires;
  std::size_t params;
};

constexpr GateInfo kGateTable[] = {
    {QubitGateKind::H, "H", 1, 0},     {QubitGateKind::X, "X", 1, 0},
    {QubitGateKind::Y, "Y", 1, 0},     {QubitGateKind::Z, "Z", 1, 0},
    {QubitGateKind::T, "T", 1, 0},     {QubitGateKind::RX, "RX", 1, 1},
    {QubitGateKind::P, "P", 1, 1},     {QubitGateKind::CNOT, "CNOT", 2, 0},
    {QubitGateKind::CP, "CP", 2, 1},   {QubitGateKind::CU, "CU", 2, 0},
};

const GateInfo& info(QubitGateKind kind) {
  for (const auto& g : kGateTable) {
    if (g.kind == kind) return g;
  }
  throw DomainError("unknown qubit gate kind");
}

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

ComplexMatrix phase_matrix(double theta) {
  return mat2(1.0, 0.0, 0.0, std::exp(kI * theta));
}

}  // namespace

std::string_view to_string(QubitGateKind kind) { return info(kind).name; }

std::optional<QubitGateKind> parse_qubit_gate_kind(std::string_view name) {
  for (const auto& g : kGateTable) {
    // CU has no standalone matrix; it only comes from controlled_gate().
    if (g.name == name && g.kind != QubitGateKind::CU) return g.kind;
  }
  return std::nullopt;
}

std::size_t gate_wire_count(QubitGateKind kind) { return info(kind).wires; }
std::size_t gate_param_count(QubitGateKind kind) { return info(kind).params; }

std::size_t QubitGate::wire_count() const { return gate_wire_count(kind); }

QubitGate standard_gate(QubitGateKind kind, std::span<const double> params) {
  if (kind == QubitGateKind::CU) {
    throw DomainError("CU has no standard matrix; use controlled_gate()");
  }
  const auto& g = info(kind);
  if (params.size() != g.params) {
    throw DimensionError(std::string(g.name) + " takes " +
                         std::to_string(g.params) + " parameter(s), got " +
                         std::to_string(params.size()));
  }
  const double s = 1.0 / std::sqrt(2.0);
  QubitGate gate{kind, {params.begin(), params.end()}, {}};
  switch (kind) {
    case QubitGateKind::H: gate.matrix = mat2(s, s, s, -s); break;
    case QubitGateKind::X: gate.matrix = mat2(0.0, 1.0, 1.0, 0.0); break;
    case QubitGateKind::Y: gate.matrix = mat2(0.0, -kI, kI, 0.0); break;
    case QubitGateKind::Z: gate.matrix = mat2(1.0, 0.0, 0.0, -1.0); break;
    case QubitGateKind::T: gate.matrix = phase_matrix(std::numbers::pi / 4); break;
    case QubitGateKind::P: gate.matrix = phase_matrix(params[0]); break;
    case QubitGateKind::RX: {
      const double c = std::cos(params[0] / 2);
      const Complex off = -kI * std::sin(params[0] / 2);
      gate.matrix = mat2(c, off, off, c);
      break;
    }
    case QubitGateKind::CNOT:
      gate.matrix = controlled_unitary(mat2(0.0, 1.0, 1.0, 0.0));
      break;
    case QubitGateKind::CP:
      gate.matrix = controlled_unitary(phase_matrix(params[0]));
      break;
    case QubitGateKind::CU: break;
  }
  return gate;
}

QubitGate standard_gate(std::string_view name, std::span<const double> params) {
  const auto kind = parse_qubit_gate_kind(name);
  if (!kind) throw DomainError("unknown qubit gate '" + std::string(name) + "'");
  return standard_gate(*kind, params);
}

ComplexMatrix controlled_unitary(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw DimensionError("controlled_unitary: expected a 2x2 matrix");
  }
  const double defect = unitarity_defect(u);
  if (!(defect < kUnitarityTolerance)) {
    throw NonUnitaryError("controlled_unitary: input not unitary (defect " +
                              std::to_string(defect) + ")",
                          defect);
  }
  ComplexMatrix cu = ComplexMatrix::Identity(4, 4);
  cu.block(2, 2, 2, 2) = u;
  return cu;
}

QubitGate controlled_gate(const ComplexMatrix& u) {
  return {QubitGateKind::CU, {}, controlled_unitary(u)};
}

ComplexMatrix embed_gate(const QubitGate& gate,
                         std::span<const std::size_t> targets,
                         std::size_t n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw CapacityError("register of " + std::to_string(n_qubits) +
                        " qubits outside [1, " + std::to_string(kMaxQubits) + "]");
  }
  if (targets.size() != gate.wire_count()) {
    throw DimensionError(std::string(to_string(gate.kind)) + " acts on " +
                         std::to_string(gate.wire_count()) + " wire(s), got " +
                         std::to_string(targets.size()));
  }
  return embed_dense(gate.matrix, targets, {2, n_qubits});
}

QubitRegister::QubitRegister(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw CapacityError("register of " + std::to_string(n_qubits) +
                        " qubits outside [1, " + std::to_string(kMaxQubits) + "]");
  }
  state_ = basis_state(std::size_t{1} << n_qubits, 0);
}

QubitRegister::QubitRegister(std::size_t n_qubits, StateVector state)
    : n_qubits_(n_qubits), state_(std::move(state)) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw CapacityError("register of " + std::to_string(n_qubits) +
                        " qubits outside [1, " + std::to_string(kMaxQubits) + "]");
  }
  if (static_cast<std::size_t>(state_.size()) != (std::size_t{1} << n_qubits)) {
    throw DimensionError("state length " + std::to_string(state_.size()) +
                         " is not 2^" + std::to_string(n_qubits));
  }
  if (std::abs(state_.squaredNorm() - 1.0) > kNormTolerance) {
    throw DomainError("state is not normalized");
  }
}

QubitRegister apply(const QubitRegister& reg, const QubitGate& gate,
                    std::span<const std::size_t> targets) {
  if (targets.size() != gate.wire_count()) {
    throw DimensionError(std::string(to_string(gate.kind)) + " acts on " +
                         std::to_string(gate.wire_count()) + " wire(s), got " +
                         std::to_string(targets.size()));
  }
  return QubitRegister(reg.n_qubits(),
                       apply_local(reg.state(), reg.layout(), gate.matrix, targets));
}

}  // namespace dualsim
