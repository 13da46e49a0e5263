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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>

namespace dualsim {
namespace {

struct MnemonicInfo {
  Mnemonic mnemonic;
  std::string_view name;
  Paradigm paradigm;
  std::size_t wires;
  std::size_t params;
};

constexpr MnemonicInfo kMnemonics[] = {
    {Mnemonic::H, "H", Paradigm::Qubit, 1, 0},
    {Mnemonic::X, "X", Paradigm::Qubit, 1, 0},
    {Mnemonic::Y, "Y", Paradigm::Qubit, 1, 0},
    {Mnemonic::Z, "Z", Paradigm::Qubit, 1, 0},
    {Mnemonic::T, "T", Paradigm::Qubit, 1, 0},
    {Mnemonic::RX, "RX", Paradigm::Qubit, 1, 1},
    {Mnemonic::P, "P", Paradigm::Qubit, 1, 1},
    {Mnemonic::CNOT, "CNOT", Paradigm::Qubit, 2, 0},
    {Mnemonic::CP, "CP", Paradigm::Qubit, 2, 1},
    {Mnemonic::S, "S", Paradigm::Qumode, 1, 2},
    {Mnemonic::R, "R", Paradigm::Qumode, 1, 1},
    {Mnemonic::D, "D", Paradigm::Qumode, 1, 2},
    {Mnemonic::BS, "BS", Paradigm::Qumode, 2, 2},
    {Mnemonic::INTERF, "INTERF", Paradigm::Qumode, 0, 0},
};

const MnemonicInfo& info(Mnemonic m) {
  for (const auto& i : kMnemonics) {
    if (i.mnemonic == m) return i;
  }
  throw DomainError("unknown mnemonic");
}

bool is_token_char(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' || c == '_';
}

std::optional<std::uint64_t> to_count(std::string_view tok) {
  std::uint64_t v = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::optional<double> to_float(std::string_view tok) {
  double v = 0.0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  return std::string(buf, ptr);
}

class Parser {
 public:
  ParseResult run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t nl = text.find('\n', pos);
      const std::size_t stop = nl == std::string_view::npos ? text.size() : nl;
      ++line_no;
      parse_line(text.substr(pos, stop - pos), line_no);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (!have_register_ && !register_error_) {
      error(1, "missing register declaration");
    }
    if (have_register_ && !have_measure_) {
      error(line_no, "missing measure directive");
    }
    ParseResult result;
    result.diagnostics = std::move(diagnostics_);
    if (result.diagnostics.empty()) result.circuit = std::move(circuit_);
    return result;
  }

 private:
  void error(std::size_t line, std::string message) {
    diagnostics_.push_back({line, std::move(message)});
  }

  // Splits on blanks after dropping the comment and a trailing CR. Returns
  // false on a lexical error.
  bool tokenize(std::string_view raw, std::size_t line,
                std::vector<std::string_view>& tokens) {
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t i = 0;
    while (i < raw.size()) {
      const auto c = static_cast<unsigned char>(raw[i]);
      if (c == ' ' || c == '\t') {
        ++i;
        continue;
      }
      if (!is_token_char(c)) {
        char hex[8];
        std::snprintf(hex, sizeof(hex), "0x%02X", c);
        error(line, "lexical error: unexpected byte " + std::string(hex) +
                        " at column " + std::to_string(i + 1));
        return false;
      }
      const std::size_t start = i;
      while (i < raw.size() && is_token_char(static_cast<unsigned char>(raw[i]))) ++i;
      tokens.push_back(raw.substr(start, i - start));
    }
    return true;
  }

  void parse_line(std::string_view raw, std::size_t line) {
    std::vector<std::string_view> tokens;
    if (!tokenize(raw, line, tokens) || tokens.empty()) return;
    const std::string_view head = tokens[0];

    if (!have_register_ && !register_error_) {
      if (head != "register") {
        register_error_ = true;
        error(line, "missing register declaration (first statement must be "
                    "'register')");
        return;
      }
      parse_register(tokens, line);
      return;
    }
    if (head == "register") {
      error(line, "duplicate register declaration");
      return;
    }
    if (have_measure_) {
      if (head == "measure") {
        error(line, "duplicate measure directive");
      } else {
        error(line, "statement after measure directive (mid-circuit "
                    "measurement is not supported)");
      }
      return;
    }
    if (head == "prepare") {
      parse_prepare(tokens, line);
    } else if (head == "measure") {
      parse_measure(tokens, line);
    } else {
      parse_gate(tokens, line);
    }
  }

  void parse_register(const std::vector<std::string_view>& t, std::size_t line) {
    register_error_ = true;
    if (t.size() < 3) {
      error(line, "register: expected 'register qubit N' or "
                  "'register qumode M cutoff D'");
      return;
    }
    const auto wires = to_count(t[2]);
    if (!wires) {
      error(line, "register: wire count " + quoted(t[2]) +
                      " is not a non-negative integer");
      return;
    }
    if (t[1] == "qubit") {
      if (t.size() != 3) {
        error(line, "register qubit: expected exactly one count");
        return;
      }
      circuit_.reg = {Paradigm::Qubit, *wires, 0, line};
    } else if (t[1] == "qumode") {
      if (t.size() != 5 || t[3] != "cutoff") {
        error(line, "register qumode: expected 'register qumode M cutoff D'");
        return;
      }
      const auto cutoff = to_count(t[4]);
      if (!cutoff) {
        error(line, "register: cutoff " + quoted(t[4]) +
                        " is not a non-negative integer");
        return;
      }
      circuit_.reg = {Paradigm::Qumode, *wires, *cutoff, line};
    } else {
      error(line, "register: unknown paradigm " + quoted(t[1]) +
                      " (expected qubit or qumode)");
      return;
    }
    register_error_ = false;
    have_register_ = true;
  }

  std::optional<std::size_t> parse_wire(std::string_view tok, std::size_t line) {
    const auto w = to_count(tok);
    if (!w) {
      error(line, "wire " + quoted(tok) + " is not a non-negative integer");
      return std::nullopt;
    }
    if (have_register_ && *w >= circuit_.reg.wires) {
      error(line, "wire " + std::to_string(*w) + " out of range for " +
                      std::to_string(circuit_.reg.wires) + " wire(s)");
      return std::nullopt;
    }
    return static_cast<std::size_t>(*w);
  }

  void parse_prepare(const std::vector<std::string_view>& t, std::size_t line) {
    if (!circuit_.instructions.empty()) {
      error(line, "prepare must come before any gate");
      return;
    }
    if (t.size() != 4 || t[1] != "squeeze") {
      error(line, "prepare: expected 'prepare squeeze WIRE Z'");
      return;
    }
    const auto wire = parse_wire(t[2], line);
    const auto z = to_float(t[3]);
    if (!z) error(line, "prepare: squeezing " + quoted(t[3]) + " is not a finite number");
    if (!wire || !z) return;
    circuit_.preparations.push_back({*wire, *z, line});
  }

  void parse_measure(const std::vector<std::string_view>& t, std::size_t line) {
    have_measure_ = true;
    MeasureDirective m;
    m.line = line;
    if (t.size() < 2) {
      error(line, "measure: missing method");
      return;
    }
    if (t[1] == "probabilities") {
      if (t.size() != 2) {
        error(line, "measure probabilities: unexpected arguments");
        return;
      }
      m.method = MeasureMethod::Probabilities;
    } else if (t[1] == "sample") {
      if (t.size() != 3) {
        error(line, "measure sample: expected 'measure sample SHOTS'");
        return;
      }
      const auto shots = to_count(t[2]);
      if (!shots || *shots == 0) {
        error(line, "measure sample: shots " + quoted(t[2]) +
                        " is not a positive integer");
        return;
      }
      m.method = MeasureMethod::Sample;
      m.shots = *shots;
    } else if (t[1] == "expectation" || t[1] == "variance") {
      m.method = t[1] == "expectation" ? MeasureMethod::Expectation
                                       : MeasureMethod::Variance;
      if (t.size() < 3 || t.size() > 4) {
        error(line, "measure " + std::string(t[1]) +
                        ": expected an observable and optional 'product'");
        return;
      }
      m.observable = parse_observable_kind(t[2]);
      if (!m.observable) {
        error(line, "measure: unknown observable " + quoted(t[2]) +
                        " (expected number, paulix, pauliy or pauliz)");
        return;
      }
      if (t.size() == 4) {
        if (t[3] != "product") {
          error(line, "measure: unexpected " + quoted(t[3]) + " (expected 'product')");
          return;
        }
        m.product = true;
      }
    } else {
      error(line, "measure: unknown method " + quoted(t[1]));
      return;
    }
    circuit_.measure = m;
  }

  void parse_gate(const std::vector<std::string_view>& t, std::size_t line) {
    const auto mnemonic = parse_mnemonic(t[0]);
    if (!mnemonic) {
      error(line, "unknown gate " + quoted(t[0]));
      return;
    }
    const std::size_t args = t.size() - 1;
    std::size_t wires = mnemonic_wires(*mnemonic);
    if (*mnemonic == Mnemonic::INTERF) {
      // k wires + 2(k - 1) + k parameters = 4k - 2 arguments.
      if (args < 2 || (args + 2) % 4 != 0) {
        error(line, "arity mismatch: INTERF takes k wires followed by 3k-2 "
                    "parameters, got " + std::to_string(args) + " argument(s)");
        return;
      }
      wires = (args + 2) / 4;
    }
    const std::size_t params = mnemonic_params(*mnemonic, wires);
    if (args != wires + params) {
      error(line, "arity mismatch: " + std::string(t[0]) + " takes " +
                      std::to_string(wires) + " wire(s) and " +
                      std::to_string(params) + " parameter(s), got " +
                      std::to_string(args) + " argument(s)");
      return;
    }
    Instruction inst{{*mnemonic, {}}, {}, line};
    bool ok = true;
    for (std::size_t i = 0; i < wires; ++i) {
      const auto w = parse_wire(t[1 + i], line);
      if (!w) {
        ok = false;
        continue;
      }
      for (auto prev : inst.targets) {
        if (prev == *w) {
          error(line, "duplicate wire " + std::to_string(*w));
          ok = false;
        }
      }
      inst.targets.push_back(*w);
    }
    for (std::size_t i = 0; i < params; ++i) {
      const auto tok = t[1 + wires + i];
      const auto v = to_float(tok);
      if (!v) {
        error(line, "parameter " + quoted(tok) + " is not a finite number");
        ok = false;
        continue;
      }
      inst.gate.params.push_back(*v);
    }
    if (ok) circuit_.instructions.push_back(std::move(inst));
  }

  Circuit circuit_;
  std::vector<Diagnostic> diagnostics_;
  bool have_register_ = false;
  bool register_error_ = false;
  bool have_measure_ = false;
};

}  // namespace

std::string_view to_string(Paradigm paradigm) {
  return paradigm == Paradigm::Qubit ? "qubit" : "qumode";
}

std::string_view to_string(Mnemonic m) { return info(m).name; }

std::optional<Mnemonic> parse_mnemonic(std::string_view name) {
  for (const auto& i : kMnemonics) {
    if (i.name == name) return i.mnemonic;
  }
  return std::nullopt;
}

Paradigm paradigm_of(Mnemonic m) { return info(m).paradigm; }

std::size_t mnemonic_wires(Mnemonic m) { return info(m).wires; }

std::size_t mnemonic_params(Mnemonic m, std::size_t wires) {
  if (m == Mnemonic::INTERF) return wires == 0 ? 0 : 3 * wires - 2;
  return info(m).params;
}

std::string_view to_string(MeasureMethod m) {
  switch (m) {
    case MeasureMethod::Probabilities: return "probabilities";
    case MeasureMethod::Sample: return "sample";
    case MeasureMethod::Expectation: return "expectation";
    case MeasureMethod::Variance: return "variance";
  }
  return "?";
}

std::string Diagnostic::to_string() const {
  return "line " + std::to_string(line) + ": " + message;
}

ParseResult parse(std::string_view text) {
  return Parser().run(text);
}

std::string serialize(const Circuit& c) {
  std::string out = "register ";
  out += to_string(c.reg.paradigm);
  out += ' ' + std::to_string(c.reg.wires);
  if (c.reg.paradigm == Paradigm::Qumode) {
    out += " cutoff " + std::to_string(c.reg.cutoff);
  }
  out += '\n';
  for (const auto& p : c.preparations) {
    out += "prepare squeeze " + std::to_string(p.wire) + ' ' + format_double(p.z) + '\n';
  }
  for (const auto& inst : c.instructions) {
    out += to_string(inst.gate.mnemonic);
    for (auto w : inst.targets) out += ' ' + std::to_string(w);
    for (double v : inst.gate.params) out += ' ' + format_double(v);
    out += '\n';
  }
  out += "measure ";
  out += to_string(c.measure.method);
  if (c.measure.method == MeasureMethod::Sample) {
    out += ' ' + std::to_string(c.measure.shots);
  } else if (c.measure.observable) {
    out += ' ';
    out += to_string(*c.measure.observable);
    if (c.measure.product) out += " product";
  }
  out += '\n';
  return out;
}

std::vector<Diagnostic> validate(const Circuit& c) {
  std::vector<Diagnostic> diags;
  auto add = [&](std::size_t line, std::string msg) {
    diags.push_back({line, std::move(msg)});
  };

  const Register& reg = c.reg;
  const std::size_t reg_line = reg.line;
  bool reg_ok = true;
  if (reg.paradigm == Paradigm::Qubit) {
    if (reg.wires < 1 || reg.wires > kMaxQubits) {
      add(reg_line, "capacity error: qubit register of " + std::to_string(reg.wires) +
                        " wires outside [1, " + std::to_string(kMaxQubits) + "]");
      reg_ok = false;
    }
  } else {
    try {
      check_qumode_shape(reg.wires, reg.cutoff);
    } catch (const Error& e) {
      add(reg_line, std::string("capacity error: ") + e.what());
      reg_ok = false;
    }
  }

  std::set<std::size_t> prepared;
  for (const auto& p : c.preparations) {
    if (reg.paradigm != Paradigm::Qumode) {
      add(p.line, "paradigm mismatch: prepare squeeze needs a qumode register");
      continue;
    }
    if (p.wire >= reg.wires) {
      add(p.line, "wire " + std::to_string(p.wire) + " out of range");
    } else if (!prepared.insert(p.wire).second) {
      add(p.line, "wire " + std::to_string(p.wire) + " prepared twice");
    }
    if (!std::isfinite(p.z)) add(p.line, "squeezing parameter is not finite");
  }

  for (const auto& inst : c.instructions) {
    const auto m = inst.gate.mnemonic;
    const std::string name(to_string(m));
    if (paradigm_of(m) != reg.paradigm) {
      add(inst.line, "paradigm mismatch: " + std::string(to_string(paradigm_of(m))) +
                         " gate " + name + " in a " +
                         std::string(to_string(reg.paradigm)) + " register");
      continue;
    }
    const std::size_t wires =
        m == Mnemonic::INTERF ? inst.targets.size() : mnemonic_wires(m);
    if (inst.targets.size() != wires || wires == 0) {
      add(inst.line, "arity mismatch: " + name + " takes " + std::to_string(wires) +
                         " wire(s), got " + std::to_string(inst.targets.size()));
      continue;
    }
    if (inst.gate.params.size() != mnemonic_params(m, wires)) {
      add(inst.line, "arity mismatch: " + name + " takes " +
                         std::to_string(mnemonic_params(m, wires)) +
                         " parameter(s), got " + std::to_string(inst.gate.params.size()));
    }
    for (std::size_t i = 0; i < inst.targets.size(); ++i) {
      if (inst.targets[i] >= reg.wires) {
        add(inst.line, "wire " + std::to_string(inst.targets[i]) + " out of range for " +
                           std::to_string(reg.wires) + " wire(s)");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (inst.targets[j] == inst.targets[i]) {
          add(inst.line, "duplicate wire " + std::to_string(inst.targets[i]));
        }
      }
    }
    for (double v : inst.gate.params) {
      if (!std::isfinite(v)) add(inst.line, name + ": parameter is not finite");
    }
  }

  const auto& meas = c.measure;
  switch (meas.method) {
    case MeasureMethod::Probabilities:
      break;
    case MeasureMethod::Sample:
      if (meas.shots < 1) add(meas.line, "measure sample: shots must be >= 1");
      break;
    case MeasureMethod::Expectation:
    case MeasureMethod::Variance: {
      if (!meas.observable) {
        add(meas.line, "measure: " + std::string(to_string(meas.method)) +
                           " needs an observable");
        break;
      }
      const bool number = *meas.observable == ObservableKind::Number;
      if (number && reg.paradigm == Paradigm::Qubit) {
        add(meas.line, "measure: number observable needs a qumode register");
      } else if (!number && reg_ok && reg.local_dim() != 2) {
        add(meas.line, "measure: " + std::string(to_string(*meas.observable)) +
                           " is 2x2 but the wire dimension is " +
                           std::to_string(reg.local_dim()));
      }
      if (meas.product && meas.method == MeasureMethod::Variance) {
        add(meas.line, "measure: 'product' only applies to expectation");
      }
      break;
    }
  }
  return diags;
}

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : Error([&] {
        std::string msg = "invalid circuit";
        for (const auto& d : diagnostics) msg += "\n  " + d.to_string();
        return msg;
      }()),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace dualsim
