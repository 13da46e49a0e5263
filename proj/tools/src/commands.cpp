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

#include "dualsim_cli/commands.hpp"

#include "dualsim/qumode.hpp"
#include "dualsim/wigner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dualsim::cli {
namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

// Writes to --out or to stdout; false on an I/O failure.
bool emit(const std::optional<std::string>& path, const std::string& payload,
          std::ostream& out) {
  if (!path) {
    out << payload;
    return static_cast<bool>(out);
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) return false;
  file << payload;
  return static_cast<bool>(file);
}

void report(std::ostream& err, const std::string& source,
            const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) {
    err << source << ":" << d.line << ": error: " << d.message << "\n";
  }
}

std::string_view method_name(ResultKind kind) {
  switch (kind) {
    case ResultKind::Expectation: return "expectation";
    case ResultKind::Variance: return "variance";
    case ResultKind::Probabilities: return "probabilities";
    case ResultKind::Counts: return "sample";
  }
  return "?";
}

std::optional<StateVector> parse_state_spec(const std::vector<std::string>& words,
                                            std::ostream& err) {
  if (words.size() != 3) {
    err << "error: wigner needs a single-mode state 'fock N CUTOFF' or "
           "'squeeze Z CUTOFF'\n";
    return std::nullopt;
  }
  std::size_t cutoff = 0;
  {
    const auto& w = words[2];
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), cutoff);
    if (ec != std::errc() || ptr != w.data() + w.size() || cutoff < kMinCutoff ||
        cutoff > kMaxCutoff) {
      err << "error: cutoff '" << w << "' must be an integer in [" << kMinCutoff
          << ", " << kMaxCutoff << "]\n";
      return std::nullopt;
    }
  }
  if (words[0] == "fock") {
    std::size_t n = 0;
    const auto& w = words[1];
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), n);
    if (ec != std::errc() || ptr != w.data() + w.size() || n >= cutoff) {
      err << "error: photon number '" << w << "' must be an integer below the cutoff\n";
      return std::nullopt;
    }
    return basis_state(cutoff, n);
  }
  if (words[0] == "squeeze") {
    double z = 0.0;
    const auto& w = words[1];
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), z);
    if (ec != std::errc() || ptr != w.data() + w.size() || !std::isfinite(z)) {
      err << "error: squeezing '" << w << "' is not a finite number\n";
      return std::nullopt;
    }
    return prepare_squeezed_vacuum(z, cutoff);
  }
  err << "error: unknown state kind '" << words[0]
      << "' (expected fock or squeeze; only single-mode states are supported)\n";
  return std::nullopt;
}

}  // namespace

std::vector<double> grid_axis(double lo, double hi, std::size_t resolution) {
  if (resolution == 1) return {0.5 * (lo + hi)};
  std::vector<double> axis(resolution);
  const double step = (hi - lo) / static_cast<double>(resolution - 1);
  for (std::size_t i = 0; i < resolution; ++i) {
    axis[i] = i + 1 == resolution ? hi : lo + static_cast<double>(i) * step;
  }
  return axis;
}

std::string to_json(const Circuit& circuit, const MeasurementResult& result) {
  nlohmann::ordered_json j;
  j["paradigm"] = std::string(to_string(circuit.reg.paradigm));
  j["wires"] = circuit.reg.wires;
  if (circuit.reg.paradigm == Paradigm::Qumode) j["cutoff"] = circuit.reg.cutoff;
  j["method"] = std::string(method_name(result.kind));
  if (result.kind == ResultKind::Counts) j["shots"] = result.shots;
  j["seed"] = result.seed;
  j["labels"] = result.labels;
  auto values = nlohmann::ordered_json::array();
  for (double v : result.values) {
    if (result.kind == ResultKind::Counts) {
      values.push_back(static_cast<std::uint64_t>(v));
    } else {
      values.push_back(v);
    }
  }
  j["values"] = std::move(values);
  return j.dump(2) + "\n";
}

std::string to_csv(const MeasurementResult& result) {
  const bool counts = result.kind == ResultKind::Counts;
  std::string out = counts ? "label,count\n" : "label,value\n";
  for (std::size_t i = 0; i < result.labels.size(); ++i) {
    // Occupation labels contain commas.
    const auto& label = result.labels[i];
    out += label.find(',') == std::string::npos ? label : "\"" + label + "\"";
    out += ',';
    out += counts ? std::to_string(static_cast<std::uint64_t>(result.values[i]))
                  : format_double(result.values[i]);
    out += '\n';
  }
  return out;
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto text = read_file(config.input);
  if (!text) {
    err << "error: cannot read '" << config.input << "'\n";
    return kExitIo;
  }
  auto parsed = parse(*text);
  if (!parsed.ok()) {
    report(err, config.input, parsed.diagnostics);
    return kExitInvalid;
  }
  Circuit circuit = std::move(*parsed.circuit);
  if (config.shots) {
    circuit.measure.method = MeasureMethod::Sample;
    circuit.measure.shots = *config.shots;
    circuit.measure.observable.reset();
    circuit.measure.product = false;
  }
  if (auto diags = validate(circuit); !diags.empty()) {
    report(err, config.input, diags);
    return kExitInvalid;
  }
  MeasurementResult result;
  try {
    result = execute(circuit, config.seed);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  const std::string payload = config.format == OutputFormat::Json
                                  ? to_json(circuit, result)
                                  : to_csv(result);
  if (!emit(config.out, payload, out)) {
    err << "error: cannot write '" << config.out.value_or("<stdout>") << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_wigner(const WignerConfig& config, std::ostream& out, std::ostream& err) {
  const auto& g = config.grid;
  if (g.resolution == 0 || !std::isfinite(g.xmin) || !std::isfinite(g.xmax) ||
      !std::isfinite(g.pmin) || !std::isfinite(g.pmax) ||
      (g.resolution > 1 && (g.xmin >= g.xmax || g.pmin >= g.pmax))) {
    err << "error: bad grid; need xmin < xmax, pmin < pmax and resolution >= 1\n";
    return kExitInvalid;
  }
  const auto state = parse_state_spec(config.state, err);
  if (!state) return kExitInvalid;

  const auto xs = grid_axis(g.xmin, g.xmax, g.resolution);
  const auto ps = grid_axis(g.pmin, g.pmax, g.resolution);
  const Eigen::MatrixXd w = wigner_grid(*state, xs, ps);
  std::string payload = "x,p,w\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      payload += format_double(xs[i]) + ',' + format_double(ps[j]) + ',' +
                 format_double(w(static_cast<Eigen::Index>(i),
                                 static_cast<Eigen::Index>(j))) + '\n';
    }
  }
  if (!emit(config.out, payload, out)) {
    err << "error: cannot write '" << config.out.value_or("<stdout>") << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_check(const std::string& input, std::ostream& out, std::ostream& err) {
  const auto text = read_file(input);
  if (!text) {
    err << "error: cannot read '" << input << "'\n";
    return kExitIo;
  }
  auto parsed = parse(*text);
  if (!parsed.ok()) {
    report(err, input, parsed.diagnostics);
    return kExitInvalid;
  }
  if (auto diags = validate(*parsed.circuit); !diags.empty()) {
    report(err, input, diags);
    return kExitInvalid;
  }
  out << "ok\n";
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"dualsim: qubit and qumode circuit simulator"};
  app.require_subcommand(1);

  RunConfig run;
  std::string format = "json";
  std::string out_path;
  auto* run_cmd = app.add_subcommand("run", "Execute a circuit file");
  run_cmd->add_option("file", run.input, "Circuit file")->required();
  run_cmd->add_option("--seed", run.seed, "Sampling seed")->capture_default_str();
  run_cmd->add_option("--shots", run.shots, "Sample N shots instead of the file's measure");
  run_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  run_cmd->add_option("--out", out_path, "Output file (default stdout)");

  WignerConfig wig;
  std::vector<double> grid;
  std::string wig_out;
  auto* wig_cmd = app.add_subcommand("wigner", "Sample a single-mode Wigner function to CSV");
  wig_cmd->add_option("state", wig.state, "fock N CUTOFF | squeeze Z CUTOFF")
      ->required()
      ->expected(1, 3);
  wig_cmd->add_option("--grid", grid, "XMIN XMAX PMIN PMAX RESOLUTION")->expected(5);
  wig_cmd->add_option("--out", wig_out, "Output file (default stdout)");

  std::string check_input;
  auto* check_cmd = app.add_subcommand("check", "Parse and validate without executing");
  check_cmd->add_option("file", check_input, "Circuit file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  if (*run_cmd) {
    run.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    if (!out_path.empty()) run.out = out_path;
    return cmd_run(run, out, err);
  }
  if (*wig_cmd) {
    if (!grid.empty()) {
      const double res = grid[4];
      if (!(res >= 1.0) || res != std::floor(res) || res > 1e6) {
        err << "error: grid resolution must be a positive integer\n";
        return kExitInvalid;
      }
      wig.grid = {grid[0], grid[1], grid[2], grid[3], static_cast<std::size_t>(res)};
    }
    if (!wig_out.empty()) wig.out = wig_out;
    return cmd_wigner(wig, out, err);
  }
  return cmd_check(check_input, out, err);
}

}  // namespace dualsim::cli
