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

#include "dualsim/circuit.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dualsim::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitIo = 2;

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::string input;
  std::uint64_t seed = 42;
  /// Replaces the file's measure directive with "measure sample N".
  std::optional<std::uint64_t> shots;
  OutputFormat format = OutputFormat::Json;
  /// stdout when empty.
  std::optional<std::string> out;
};

struct GridSpec {
  double xmin = -3.0;
  double xmax = 3.0;
  double pmin = -3.0;
  double pmax = 3.0;
  std::size_t resolution = 61;
};

struct WignerConfig {
  /// "fock N CUTOFF" or "squeeze Z CUTOFF", already split into words.
  std::vector<std::string> state;
  GridSpec grid;
  std::optional<std::string> out;
};

/// Axis points: resolution values evenly spaced over [lo, hi], or the
/// midpoint when resolution is 1.
std::vector<double> grid_axis(double lo, double hi, std::size_t resolution);

/// {paradigm, wires, cutoff?, method, shots?, seed, labels[], values[]}.
std::string to_json(const Circuit& circuit, const MeasurementResult& result);

/// "label,value" rows, or "label,count" for sampled counts.
std::string to_csv(const MeasurementResult& result);

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_wigner(const WignerConfig& config, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& input, std::ostream& out, std::ostream& err);

/// argv front end shared by the binary and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace dualsim::cli
