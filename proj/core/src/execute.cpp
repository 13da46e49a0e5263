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

#include "dualsim/circuit.hpp"
#include "dualsim/qubit.hpp"
#include "dualsim/qumode.hpp"

namespace dualsim {
namespace {

QubitGateKind qubit_kind(Mnemonic m) {
  switch (m) {
    case Mnemonic::H: return QubitGateKind::H;
    case Mnemonic::X: return QubitGateKind::X;
    case Mnemonic::Y: return QubitGateKind::Y;
    case Mnemonic::Z: return QubitGateKind::Z;
    case Mnemonic::T: return QubitGateKind::T;
    case Mnemonic::RX: return QubitGateKind::RX;
    case Mnemonic::P: return QubitGateKind::P;
    case Mnemonic::CNOT: return QubitGateKind::CNOT;
    case Mnemonic::CP: return QubitGateKind::CP;
    default: break;
  }
  throw DomainError("not a qubit mnemonic: " + std::string(to_string(m)));
}

StateVector run_qubits(const Circuit& c) {
  QubitRegister reg(c.reg.wires);
  for (const auto& inst : c.instructions) {
    reg = apply(reg, standard_gate(qubit_kind(inst.gate.mnemonic), inst.gate.params),
                inst.targets);
  }
  return reg.state();
}

InterferometerParams interferometer_params(std::span<const double> p,
                                           std::size_t modes) {
  InterferometerParams out;
  for (std::size_t j = 0; j + 1 < modes; ++j) {
    out.beamsplitters.emplace_back(p[2 * j], p[2 * j + 1]);
  }
  for (std::size_t j = 0; j < modes; ++j) {
    out.rotations.push_back(p[2 * (modes - 1) + j]);
  }
  return out;
}

StateVector run_qumodes(const Circuit& c) {
  const std::size_t d = c.reg.cutoff;
  std::vector<StateVector> modes(c.reg.wires, basis_state(d, 0));
  for (const auto& p : c.preparations) {
    modes[p.wire] = prepare_squeezed_vacuum(p.z, d);
  }
  QumodeRegister reg = product_state(modes);
  for (const auto& inst : c.instructions) {
    const auto& p = inst.gate.params;
    switch (inst.gate.mnemonic) {
      case Mnemonic::S:
        reg = apply(reg, squeezer({p[0], p[1]}, d), inst.targets);
        break;
      case Mnemonic::R:
        reg = apply(reg, rotation(p[0], d), inst.targets);
        break;
      case Mnemonic::D:
        reg = apply(reg, displacement({p[0], p[1]}, d), inst.targets);
        break;
      case Mnemonic::BS:
        reg = apply(reg, beamsplitter_blocks(p[0], p[1], d), inst.targets[0],
                    inst.targets[1]);
        break;
      case Mnemonic::INTERF:
        reg = apply_interferometer(
            reg, interferometer_params(p, inst.targets.size()), inst.targets);
        break;
      default:
        throw DomainError("not a qumode mnemonic: " +
                          std::string(to_string(inst.gate.mnemonic)));
    }
  }
  return reg.state();
}

}  // namespace

StateVector final_state(const Circuit& circuit) {
  if (auto diags = validate(circuit); !diags.empty()) {
    throw ValidationError(std::move(diags));
  }
  return circuit.reg.paradigm == Paradigm::Qubit ? run_qubits(circuit)
                                                 : run_qumodes(circuit);
}

MeasurementResult execute(const Circuit& circuit, std::uint64_t seed) {
  const StateVector state = final_state(circuit);
  const WireLayout layout{circuit.reg.local_dim(), circuit.reg.wires};
  const LabelStyle style = circuit.reg.paradigm == Paradigm::Qubit
                               ? LabelStyle::Bits
                               : LabelStyle::Occupations;
  const auto& m = circuit.measure;
  MeasurementResult result{ResultKind::Probabilities, {}, {}, 0, seed};

  switch (m.method) {
    case MeasureMethod::Probabilities: {
      const RealVector p = probabilities(state);
      for (Eigen::Index k = 0; k < p.size(); ++k) {
        result.labels.push_back(basis_label(static_cast<std::size_t>(k), layout, style));
        result.values.push_back(p(k));
      }
      break;
    }
    case MeasureMethod::Sample: {
      result.kind = ResultKind::Counts;
      result.shots = m.shots;
      for (const auto& [index, count] : sample_indices(state, m.shots, seed)) {
        result.labels.push_back(basis_label(index, layout, style));
        result.values.push_back(static_cast<double>(count));
      }
      break;
    }
    case MeasureMethod::Expectation:
    case MeasureMethod::Variance: {
      const Observable obs = make_observable(*m.observable, layout.local_dim);
      const bool expect = m.method == MeasureMethod::Expectation;
      result.kind = expect ? ResultKind::Expectation : ResultKind::Variance;
      if (expect && m.product) {
        result.labels.push_back("product");
        result.values.push_back(expectation_product(state, layout, obs));
        break;
      }
      result.values = expect ? expectations(state, layout, obs)
                             : variances(state, layout, obs);
      for (std::size_t w = 0; w < layout.wires; ++w) {
        result.labels.push_back(std::to_string(w));
      }
      break;
    }
  }
  return result;
}

}  // namespace dualsim
