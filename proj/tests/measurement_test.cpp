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

#include "dualsim/error.hpp"
#include "dualsim/measurement.hpp"
#include "dualsim/qumode.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace dualsim {
namespace {

StateVector plus_state() {
  StateVector v(2);
  v << 1, 1;
  return v / std::sqrt(2.0);
}

const WireLayout kOneQubit{2, 1};

ComplexMatrix embed_single(const ComplexMatrix& a, std::size_t wire, const WireLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.local_dim);
  ComplexMatrix full = ComplexMatrix::Identity(1, 1);
  for (std::size_t w = 0; w < layout.wires; ++w) {
    full = kron(full, w == wire ? a : ComplexMatrix::Identity(d, d));
  }
  return full;
}

TEST(Probabilities, Examples) {
  const RealVector p = probabilities(plus_state());
  EXPECT_NEAR(p(0), 0.5, 1e-15);
  EXPECT_NEAR(p(1), 0.5, 1e-15);
  const RealVector q = probabilities(2.0 * basis_state(2, 0));
  EXPECT_EQ(q(0), 1.0);
  EXPECT_EQ(q(1), 0.0);
  std::array<StateVector, 2> modes{prepare_squeezed_vacuum(0.4, 3), basis_state(3, 1)};
  EXPECT_EQ(probabilities(product_state(modes).state()).size(), 9);
  EXPECT_THROW(probabilities(StateVector::Zero(4)), DomainError);
}

TEST(Probabilities, TableShapes) {
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 8}, {2, 4}, {3, 3}}) {
    QumodeRegister reg(m, n);
    EXPECT_EQ(static_cast<std::size_t>(probabilities(reg.state()).size()),
              static_cast<std::size_t>(std::pow(n, m)));
    const Observable number = make_observable(ObservableKind::Number, n);
    EXPECT_EQ(expectations(reg.state(), reg.layout(), number).size(), m);
    EXPECT_EQ(variances(reg.state(), reg.layout(), number).size(), m);
  }
}

TEST(Probabilities, GlobalPhaseInvariant) {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> phase(0, 2 * std::numbers::pi);
  for (int trial = 0; trial < 50; ++trial) {
    StateVector psi = testing::random_state(16, gen);
    RealVector a = probabilities(psi), b = probabilities(std::polar(1.0, phase(gen)) * psi);
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_NEAR(a.sum(), 1.0, 1e-12);
  }
}

TEST(Sample, DeterministicOutcome) {
  auto counts = sample(basis_state(2, 1), kOneQubit, LabelStyle::Bits, 100, 3);
  ASSERT_EQ(counts.size(), 1u);
  EXPECT_EQ(counts.at("1"), 100u);
}

TEST(Sample, BinomialWindow) {
  const double sigma3 = 3 * std::sqrt(1e5 * 0.25);
  for (std::uint64_t seed : {0ull, 1ull, 42ull, 987654321ull}) {
    auto counts = sample(plus_state(), kOneQubit, LabelStyle::Bits, 100000, seed);
    EXPECT_NEAR(static_cast<double>(counts["0"]), 50000, sigma3);
    EXPECT_NEAR(static_cast<double>(counts["1"]), 50000, sigma3);
    EXPECT_EQ(counts["0"] + counts["1"], 100000u);
  }
}

TEST(Sample, Reproducible) {
  std::mt19937_64 gen(2);
  StateVector psi = testing::random_state(16, gen);
  EXPECT_EQ(sample_indices(psi, 20000, 5), sample_indices(psi, 20000, 5));
  EXPECT_NE(sample_indices(psi, 20000, 5), sample_indices(psi, 20000, 6));
  EXPECT_THROW(sample_indices(psi, 0, 5), DomainError);
}

TEST(Sample, PrefixStableAcrossBlocks) {
  // Shots in the first block do not depend on how many blocks follow.
  const StateVector psi = plus_state();
  auto small = sample_indices(psi, kShotBlock, 9);
  auto large = sample_indices(psi, 3 * kShotBlock, 9);
  EXPECT_LE(small[0], large[0]);
  EXPECT_LE(small[1], large[1]);
}

TEST(Sample, ConvergesInTotalVariation) {
  std::mt19937_64 gen(19);
  std::vector<StateVector> states{plus_state(), basis_state(4, 2), testing::random_state(16, gen),
                                  testing::random_state(8, gen), testing::random_state(5, gen)};
  for (std::size_t s = 0; s < states.size(); ++s) {
    const RealVector p = probabilities(states[s]);
    auto counts = sample_indices(states[s], 1'000'000, 100 + s);
    double tv = 0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      const auto it = counts.find(static_cast<std::size_t>(i));
      const double freq = it == counts.end() ? 0.0 : static_cast<double>(it->second) / 1e6;
      tv += std::abs(freq - p(i));
    }
    EXPECT_LT(tv / 2, 0.01) << s;
  }
}

TEST(Sample, Labels) {
  EXPECT_EQ(basis_label(0b011, WireLayout{2, 3}, LabelStyle::Bits), "011");
  EXPECT_EQ(basis_label(7, WireLayout{3, 2}, LabelStyle::Occupations), "(2,1)");
  auto counts = sample(kron(basis_state(3, 2), basis_state(3, 0)), WireLayout{3, 2},
                       LabelStyle::Occupations, 10, 1);
  EXPECT_EQ(counts.at("(2,0)"), 10u);
}

TEST(Expectation, Examples) {
  const Observable x = make_observable(ObservableKind::PauliX);
  const Observable z = make_observable(ObservableKind::PauliZ);
  EXPECT_NEAR(expectation(plus_state(), kOneQubit, x, 0), 1.0, 1e-15);
  EXPECT_NEAR(expectation(basis_state(2, 0), kOneQubit, z, 0), 1.0, 1e-15);
  const StateVector coherent = displacement(0.5, 40).matrix * basis_state(40, 0);
  EXPECT_NEAR(expectation(coherent, WireLayout{40, 1}, make_observable(ObservableKind::Number, 40), 0), 0.25, 1e-6);
}

TEST(Expectation, PauliXClosedForm) {
  std::mt19937_64 gen(4);
  const Observable x = make_observable(ObservableKind::PauliX);
  for (int trial = 0; trial < 100; ++trial) {
    StateVector psi = testing::random_state(2, gen);
    const double want = 2 * (psi(0).real() * psi(1).real() + psi(0).imag() * psi(1).imag());
    EXPECT_NEAR(expectation(psi, kOneQubit, x, 0), want, 1e-14);
  }
}

TEST(Expectation, MatchesDenseFullSpace) {
  std::mt19937_64 gen(8);
  for (const WireLayout layout : {WireLayout{2, 4}, WireLayout{3, 3}, WireLayout{5, 2}}) {
    StateVector psi = testing::random_state(layout.dim(), gen);
    std::vector<Observable> observables{make_observable(ObservableKind::Number, layout.local_dim)};
    if (layout.local_dim == 2) {
      for (auto k : {ObservableKind::PauliX, ObservableKind::PauliY, ObservableKind::PauliZ}) {
        observables.push_back(make_observable(k));
      }
    }
    for (const auto& obs : observables) {
      for (std::size_t w = 0; w < layout.wires; ++w) {
        const ComplexMatrix full = embed_single(obs.matrix, w, layout);
        const double mean = psi.dot(full * psi).real();
        const double square = psi.dot(full * full * psi).real();
        EXPECT_NEAR(expectation(psi, layout, obs, w), mean, 1e-12);
        EXPECT_NEAR(variance(psi, layout, obs, w), square - mean * mean, 1e-12);
      }
    }
  }
}

TEST(Variance, Examples) {
  const Observable z = make_observable(ObservableKind::PauliZ);
  EXPECT_EQ(variance(basis_state(2, 0), kOneQubit, z, 0), 0.0);
  EXPECT_NEAR(variance(plus_state(), kOneQubit, z, 0), 1.0, 1e-15);
}

TEST(Variance, SqueezedVacuumBruteForce) {
  const std::size_t d = 30;
  const StateVector psi = prepare_squeezed_vacuum(0.5, d);
  double m1 = 0, m2 = 0;
  for (std::size_t k = 0; k < d; ++k) {
    const double p = std::norm(psi(static_cast<Eigen::Index>(k)));
    m1 += static_cast<double>(k) * p;
    m2 += static_cast<double>(k * k) * p;
  }
  EXPECT_NEAR(variance(psi, WireLayout{d, 1}, make_observable(ObservableKind::Number, d), 0), m2 - m1 * m1, 1e-10);
}

TEST(ExpectationProduct, Examples) {
  const Observable z = make_observable(ObservableKind::PauliZ);
  EXPECT_NEAR(expectation_product(basis_state(4, 0), WireLayout{2, 2}, z), 1.0, 1e-15);
  EXPECT_NEAR(expectation_product(kron(basis_state(2, 0), plus_state()), WireLayout{2, 2}, z), 0.0, 1e-15);
  EXPECT_EQ(expectation_product(QumodeRegister(3, 4).state(), WireLayout{4, 3},
                                make_observable(ObservableKind::Number, 4)), 0.0);
}

TEST(Observable, Errors) {
  EXPECT_THROW(expectation(basis_state(3, 0), WireLayout{3, 1}, make_observable(ObservableKind::PauliX), 0),
               DimensionError);
  EXPECT_EQ(parse_observable_kind("pauliz"), ObservableKind::PauliZ);
  EXPECT_EQ(parse_observable_kind("PauliZ"), std::nullopt);
  EXPECT_THROW(expectation(basis_state(2, 0), kOneQubit, make_observable(ObservableKind::PauliZ), 1), DimensionError);
}

TEST(SampledMoments, AgreeWithAnalytic) {
  std::mt19937_64 gen(30);
  const WireLayout layout{4, 2};
  const StateVector psi = testing::random_state(16, gen);
  const Observable number = make_observable(ObservableKind::Number, 4);
  auto counts = sample_indices(psi, 400000, 77);
  for (std::size_t w = 0; w < 2; ++w) {
    const SampleMoments m = sampled_moments(counts, layout, ObservableKind::Number, w);
    EXPECT_NEAR(m.mean, expectation(psi, layout, number, w), 0.02);
    EXPECT_NEAR(m.variance, variance(psi, layout, number, w), 0.03);
  }
  std::map<std::size_t, std::uint64_t> exact{{0, 3}, {1, 1}};
  const SampleMoments z = sampled_moments(exact, kOneQubit, ObservableKind::PauliZ, 0);
  EXPECT_DOUBLE_EQ(z.mean, 0.5);
  EXPECT_DOUBLE_EQ(z.variance, 0.75);
  EXPECT_THROW(sampled_moments(exact, kOneQubit, ObservableKind::PauliX, 0), DomainError);
}

}  // namespace
}  // namespace dualsim
