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
#include "dualsim/error.hpp"
#include "dualsim/qumode.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>
#include <string>

namespace dualsim {
namespace {

bool mentions(const std::vector<Diagnostic>& diags, std::string_view needle) {
  for (const auto& d : diags) {
    if (d.message.find(needle) != std::string::npos) return true;
  }
  return false;
}

Circuit must_parse(std::string_view text) {
  ParseResult r = parse(text);
  EXPECT_TRUE(r.ok()) << (r.diagnostics.empty() ? "" : r.diagnostics[0].to_string());
  return r.ok() ? *r.circuit : Circuit{};
}

TEST(Parse, HadamardCircuit) {
  Circuit c = must_parse("register qubit 1\nH 0\nmeasure probabilities\n");
  EXPECT_EQ(c.reg.paradigm, Paradigm::Qubit);
  EXPECT_EQ(c.reg.wires, 1u);
  ASSERT_EQ(c.instructions.size(), 1u);
  EXPECT_EQ(c.instructions[0].gate.mnemonic, Mnemonic::H);
  EXPECT_EQ(c.instructions[0].line, 2u);
  EXPECT_EQ(c.measure.method, MeasureMethod::Probabilities);
  const MeasurementResult r = execute(c, 0);
  ASSERT_EQ(r.values.size(), 2u);
  EXPECT_NEAR(r.values[0], 0.5, 1e-15);
  EXPECT_NEAR(r.values[1], 0.5, 1e-15);
  EXPECT_EQ(r.labels, (std::vector<std::string>{"0", "1"}));
}

TEST(Parse, SqueezedBeamsplitterSplitsPhotons) {
  Circuit c = must_parse(
      "register qumode 2 cutoff 6\nprepare squeeze 0 0.5\nBS 0 1 0.7853981633974483 0\n"
      "measure expectation number");
  EXPECT_TRUE(validate(c).empty());
  const MeasurementResult r = execute(c, 1);
  ASSERT_EQ(r.values.size(), 2u);
  const StateVector input = prepare_squeezed_vacuum(0.5, 6);
  double n_in = 0;
  for (int k = 0; k < 6; ++k) n_in += k * std::norm(input(k));
  EXPECT_NEAR(r.values[0] + r.values[1], n_in, 1e-8);
}

TEST(Parse, ArityMismatchCarriesLine) {
  ParseResult r = parse("register qubit 1\nH 0 1");
  ASSERT_FALSE(r.ok());
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0].line, 2u);
  EXPECT_TRUE(mentions(r.diagnostics, "arity mismatch"));
}

TEST(Parse, ErrorCases) {
  struct Case {
    const char* text;
    std::size_t line;
    const char* needle;
  };
  const Case cases[] = {
      {"", 1, "missing register declaration"},
      {"H 0\n", 1, "missing register declaration"},
      {"register qubit 1\nregister qubit 2\nmeasure probabilities", 2, "duplicate register"},
      {"register qubit 1\nH 0", 2, "missing measure directive"},
      {"register qubit 1\nmeasure probabilities\nH 0", 3, "statement after measure"},
      {"register qubit 1\nmeasure probabilities\nmeasure probabilities", 3, "duplicate measure"},
      {"register qubit 1\nFOO 0\nmeasure probabilities", 2, "unknown gate"},
      {"register qubit 2\nCNOT 0 0\nmeasure probabilities", 2, "duplicate wire"},
      {"register qubit 2\nH 5\nmeasure probabilities", 2, "out of range"},
      {"register qubit 1\nRX 0 nan\nmeasure probabilities", 2, "finite"},
      {"register qubit 1\nRX 0 1e999\nmeasure probabilities", 2, "finite"},
      {"register qumode 1 cutoff 4\nR 0 0.1\nprepare squeeze 0 0.2\nmeasure probabilities", 3, "before any gate"},
      {"register qubit 1\nmeasure magic", 2, "unknown method"},
      {"register qubit 1\nmeasure expectation spin", 2, "unknown observable"},
      {"register qubit 1\nH 0 $\nmeasure probabilities", 2, "lexical error"},
      {"register qutrit 1\nmeasure probabilities", 1, "unknown paradigm"},
      {"register qumode 2 cutoff 4\nINTERF 0 1 0.1\nmeasure probabilities", 2, "arity mismatch"},
  };
  for (const auto& c : cases) {
    ParseResult r = parse(c.text);
    ASSERT_FALSE(r.ok()) << c.text;
    ASSERT_FALSE(r.diagnostics.empty()) << c.text;
    EXPECT_EQ(r.diagnostics[0].line, c.line) << c.text;
    EXPECT_TRUE(mentions(r.diagnostics, c.needle)) << c.text << " -> " << r.diagnostics[0].message;
  }
}

TEST(Parse, CommentsBlankLinesAndCarriageReturns) {
  Circuit c = must_parse("# header\r\n\r\nregister qubit 2  # two\r\n  X 1\r\nCNOT 1 0\nmeasure sample 10\n");
  EXPECT_EQ(c.instructions.size(), 2u);
  EXPECT_EQ(c.instructions[1].targets, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(c.measure.shots, 10u);
  EXPECT_EQ(c.reg.line, 3u);
}

TEST(Parse, InterferometerSyntax) {
  Circuit c = must_parse("register qumode 3 cutoff 3\nINTERF 0 1 2 0.1 0.2 0.3 0.4 0.5 0.6 0.7\nmeasure probabilities");
  ASSERT_EQ(c.instructions.size(), 1u);
  EXPECT_EQ(c.instructions[0].targets.size(), 3u);
  EXPECT_EQ(c.instructions[0].gate.params.size(), 7u);
}

TEST(Serialize, HadamardRoundTripIsCanonical) {
  const std::string text = "register qubit 1\nH 0\nmeasure probabilities\n";
  EXPECT_EQ(serialize(must_parse(text)), text);
}

TEST(Serialize, SeventeenDigitsReparseBitIdentical) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 2000; ++trial) {
    double v;
    std::uint64_t bits = gen();
    std::memcpy(&v, &bits, sizeof v);
    if (!std::isfinite(v)) continue;
    Circuit c;
    c.reg = {Paradigm::Qubit, 1, 0};
    c.instructions.push_back({{Mnemonic::RX, {v}}, {0}, 0});
    Circuit back = must_parse(serialize(c));
    ASSERT_EQ(back.instructions.size(), 1u);
    std::uint64_t got;
    std::memcpy(&got, &back.instructions[0].gate.params[0], sizeof got);
    EXPECT_EQ(got, bits) << v;
  }
}

TEST(Serialize, RandomCircuitsRoundTrip) {
  std::mt19937_64 gen(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const Circuit c = testing::random_circuit(gen);
    const std::string text = serialize(c);
    const ParseResult first = parse(text);
    ASSERT_TRUE(first.ok()) << text << first.diagnostics[0].to_string();
    EXPECT_EQ(*first.circuit, c) << text;
    EXPECT_EQ(serialize(*first.circuit), text);
    const ParseResult second = parse(serialize(*first.circuit));
    ASSERT_TRUE(second.ok());
    EXPECT_EQ(*second.circuit, *first.circuit);
    EXPECT_TRUE(validate(c).empty()) << text << validate(c)[0].to_string();
  }
}

TEST(Parse, RandomBytesNeverCrash) {
  std::mt19937_64 gen(555);
  const std::string alphabet = "registerqubitmode cutoffprepsquzHXYZTRCNOTPBSDINTERF0123456789.-+e#\n\r\t ";
  for (int trial = 0; trial < 10000; ++trial) {
    std::string bytes(gen() % 200, '\0');
    const bool structured = trial % 2 == 0;
    for (auto& b : bytes) {
      b = structured ? alphabet[gen() % alphabet.size()] : static_cast<char>(gen() & 0xff);
    }
    ParseResult r = parse(bytes);
    if (!r.ok()) {
      ASSERT_FALSE(r.diagnostics.empty());
      for (const auto& d : r.diagnostics) EXPECT_GE(d.line, 1u);
    }
  }
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(must_parse("register qubit 1\nH 0\nmeasure probabilities")).empty());
  auto mismatch = validate(must_parse("register qubit 1\nS 0 0.1 0\nmeasure probabilities"));
  ASSERT_FALSE(mismatch.empty());
  EXPECT_TRUE(mentions(mismatch, "paradigm mismatch"));
  EXPECT_EQ(mismatch[0].line, 2u);
  auto capacity = validate(must_parse("register qubit 25\nmeasure probabilities"));
  EXPECT_TRUE(mentions(capacity, "capacity error"));
  EXPECT_TRUE(mentions(validate(must_parse("register qumode 5 cutoff 2\nmeasure probabilities")), "capacity error"));
  EXPECT_TRUE(mentions(validate(must_parse("register qumode 2 cutoff 1\nmeasure probabilities")), "capacity error"));
  EXPECT_TRUE(mentions(validate(must_parse("register qubit 1\nprepare squeeze 0 0.3\nmeasure probabilities")),
                       "paradigm mismatch"));
  EXPECT_TRUE(mentions(validate(must_parse("register qubit 1\nmeasure expectation number")), "number"));
  EXPECT_TRUE(mentions(validate(must_parse("register qumode 1 cutoff 3\nmeasure expectation pauliz")), "pauliz"));
  EXPECT_FALSE(validate(must_parse("register qubit 2\nmeasure variance pauliz product")).empty());
  EXPECT_FALSE(validate(must_parse("register qumode 1 cutoff 3\nR 0 0.1\nH 0\nmeasure probabilities")).empty());
}

TEST(Validate, ExecuteRejectsInvalid) {
  Circuit c = must_parse("register qubit 2\nBS 0 1 0.1 0.1\nmeasure probabilities");
  EXPECT_THROW(execute(c, 0), ValidationError);
}

TEST(Execute, Kickback) {
  const MeasurementResult r =
      execute(must_parse("register qubit 2\nX 1\nH 0\nCP 0 1 1.5707963267948966\nmeasure probabilities"), 0);
  ASSERT_EQ(r.values.size(), 4u);
  const double want[] = {0, 0.5, 0, 0.5};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(r.values[i], want[i], 1e-15);
}

TEST(Execute, VacuumAndEmptyCircuit) {
  const MeasurementResult vac = execute(must_parse("register qumode 1 cutoff 10\nprepare squeeze 0 0\nmeasure probabilities"), 0);
  ASSERT_EQ(vac.values.size(), 10u);
  EXPECT_EQ(vac.values[0], 1.0);
  for (std::size_t k = 1; k < 10; ++k) EXPECT_EQ(vac.values[k], 0.0);
  EXPECT_EQ(vac.labels[3], "(3)");
  const MeasurementResult z = execute(must_parse("register qubit 3\nmeasure expectation pauliz"), 0);
  EXPECT_EQ(z.values, (std::vector<double>{1, 1, 1}));
  EXPECT_EQ(z.kind, ResultKind::Expectation);
}

TEST(Execute, SampleAndProduct) {
  const Circuit c = must_parse("register qubit 2\nH 0\nmeasure sample 1000");
  const MeasurementResult a = execute(c, 7), b = execute(c, 7);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.kind, ResultKind::Counts);
  EXPECT_EQ(a.shots, 1000u);
  EXPECT_EQ(a.seed, 7u);
  double total = 0;
  for (double v : a.values) total += v;
  EXPECT_EQ(total, 1000.0);
  const MeasurementResult p = execute(must_parse("register qubit 2\nH 1\nmeasure expectation pauliz product"), 0);
  ASSERT_EQ(p.values.size(), 1u);
  EXPECT_NEAR(p.values[0], 0.0, 1e-15);
}

TEST(Execute, DeterministicOnRandomCorpus) {
  std::mt19937_64 gen(71);
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit c = testing::random_circuit(gen);
    const std::uint64_t seed = gen();
    EXPECT_EQ(execute(c, seed), execute(c, seed)) << serialize(c);
  }
}

TEST(Execute, MatchesFullMatrixReference) {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit c = testing::random_qubit_circuit(gen, 6, 20);
    const StateVector want = testing::reference_qubit_state(c);
    EXPECT_LT((final_state(c) - want).cwiseAbs().maxCoeff(), 1e-10) << serialize(c);
  }
}

TEST(Execute, InterferometerMatchesDense) {
  Circuit c = must_parse(
      "register qumode 3 cutoff 4\nprepare squeeze 1 0.3\nINTERF 2 0 1 0.1 0.2 0.3 0.4 0.5 0.6 0.7\n"
      "measure probabilities");
  InterferometerParams p{{{0.1, 0.2}, {0.3, 0.4}}, {0.5, 0.6, 0.7}};
  const std::array<std::size_t, 3> wires{2, 0, 1};
  std::array<StateVector, 3> modes{basis_state(4, 0), prepare_squeezed_vacuum(0.3, 4), basis_state(4, 0)};
  const QumodeRegister in = product_state(modes);
  EXPECT_LT((final_state(c) - apply_interferometer(in, p, wires).state()).cwiseAbs().maxCoeff(), 1e-14);
  // Dense oracle: reorder modes so the INTERF wires come first, apply, undo.
  const WireLayout layout{4, 3};
  const ComplexMatrix u = interferometer(p, 3, 4);
  StateVector permuted(64), expected(64);
  for (std::size_t i = 0; i < 64; ++i) {
    const auto d = layout.digits(i);
    permuted(static_cast<Eigen::Index>(d[2] * 16 + d[0] * 4 + d[1])) = in.state()(static_cast<Eigen::Index>(i));
  }
  const StateVector out = u * permuted;
  for (std::size_t i = 0; i < 64; ++i) {
    const auto d = layout.digits(i);
    expected(static_cast<Eigen::Index>(i)) = out(static_cast<Eigen::Index>(d[2] * 16 + d[0] * 4 + d[1]));
  }
  EXPECT_LT((final_state(c) - expected).cwiseAbs().maxCoeff(), 1e-12);
}

}  // namespace
}  // namespace dualsim
