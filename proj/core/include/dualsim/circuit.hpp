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

#include "dualsim/error.hpp"
#include "dualsim/measurement.hpp"
#include "dualsim/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dualsim {

enum class Paradigm { Qubit, Qumode };

std::string_view to_string(Paradigm paradigm);

struct Register {
  Paradigm paradigm = Paradigm::Qubit;
  std::size_t wires = 1;
  /// Fock cutoff; only meaningful for qumode registers.
  std::size_t cutoff = 0;
  std::size_t line = 0;

  std::size_t local_dim() const { return paradigm == Paradigm::Qubit ? 2 : cutoff; }

  friend bool operator==(const Register& a, const Register& b) {
    return a.paradigm == b.paradigm && a.wires == b.wires && a.cutoff == b.cutoff;
  }
};

enum class Mnemonic { H, X, Y, Z, T, RX, P, CNOT, CP, S, R, D, BS, INTERF };

std::string_view to_string(Mnemonic m);
std::optional<Mnemonic> parse_mnemonic(std::string_view name);
Paradigm paradigm_of(Mnemonic m);

/// Wire count for fixed-arity mnemonics; 0 for INTERF, which spans a list.
std::size_t mnemonic_wires(Mnemonic m);

/// Real parameters taken for the given number of wires. Complex gate
/// parameters are written as (re, im) pairs. INTERF on k wires takes
/// 2(k-1) beamsplitter (theta, phi) values then k rotation angles.
std::size_t mnemonic_params(Mnemonic m, std::size_t wires);

struct GateSpec {
  Mnemonic mnemonic;
  std::vector<double> params;

  friend bool operator==(const GateSpec&, const GateSpec&) = default;
};

/// Source line numbers are 1-based; 0 means "not from source". They are
/// ignored by equality.
struct Instruction {
  GateSpec gate;
  std::vector<std::size_t> targets;
  std::size_t line = 0;

  friend bool operator==(const Instruction& a, const Instruction& b) {
    return a.gate == b.gate && a.targets == b.targets;
  }
};

/// Squeezed-vacuum preparation S(z)|0> on one qumode.
struct Preparation {
  std::size_t wire = 0;
  double z = 0.0;
  std::size_t line = 0;

  friend bool operator==(const Preparation& a, const Preparation& b) {
    return a.wire == b.wire && a.z == b.z;
  }
};

enum class MeasureMethod { Probabilities, Sample, Expectation, Variance };

std::string_view to_string(MeasureMethod m);

struct MeasureDirective {
  MeasureMethod method = MeasureMethod::Probabilities;
  /// Required for expectation and variance.
  std::optional<ObservableKind> observable;
  /// Collapse per-wire expectations into their product.
  bool product = false;
  /// Sample only.
  std::uint64_t shots = 0;
  std::size_t line = 0;

  friend bool operator==(const MeasureDirective& a, const MeasureDirective& b) {
    return a.method == b.method && a.observable == b.observable &&
           a.product == b.product && a.shots == b.shots;
  }
};

struct Circuit {
  Register reg;
  std::vector<Preparation> preparations;
  std::vector<Instruction> instructions;
  MeasureDirective measure;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct Diagnostic {
  std::size_t line;
  std::string message;

  std::string to_string() const;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct ParseResult {
  std::optional<Circuit> circuit;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return circuit.has_value(); }
};

/// Parses the line-oriented circuit language:
///
///   register qubit N | register qumode M cutoff D
///   prepare squeeze WIRE Z            (qumode only, before any gate)
///   MNEMONIC WIRE... PARAM...
///   measure probabilities | sample SHOTS
///         | (expectation|variance) (number|paulix|pauliy|pauliz) [product]
///
/// '#' starts a comment; LF and CRLF line endings are accepted. Never
/// throws; every problem is returned as a diagnostic with its line.
ParseResult parse(std::string_view text);

/// Canonical text; parameters carry 17 significant digits so that parse()
/// restores them bit for bit.
std::string serialize(const Circuit& circuit);

/// Semantic checks (register capacity, wire ranges, gate paradigm,
/// parameter counts, measurement compatibility). Empty means valid.
std::vector<Diagnostic> validate(const Circuit& circuit);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// State after preparation and every instruction. Throws ValidationError.
StateVector final_state(const Circuit& circuit);

/// final_state followed by the measure directive; deterministic in
/// (circuit, seed). Throws ValidationError.
MeasurementResult execute(const Circuit& circuit, std::uint64_t seed);

}  // namespace dualsim
