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

#include "dualsim/measurement.hpp"

#include "dualsim/error.hpp"
#include "dualsim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace dualsim {
namespace {

constexpr double kVarianceFloor = -1e-12;

void check_wire(const WireLayout& layout, const Observable& obs,
                std::size_t wire) {
  if (wire >= layout.wires) {
    throw DimensionError("wire " + std::to_string(wire) + " out of range for " +
                         std::to_string(layout.wires) + " wire(s)");
  }
  const auto d = static_cast<Eigen::Index>(layout.local_dim);
  if (obs.matrix.rows() != d || obs.matrix.cols() != d) {
    throw DimensionError(std::string(to_string(obs.kind)) + " observable is " +
                         std::to_string(obs.matrix.rows()) + "x" +
                         std::to_string(obs.matrix.cols()) +
                         " but the wire dimension is " +
                         std::to_string(layout.local_dim));
  }
}

void check_state(const StateVector& state, const WireLayout& layout) {
  if (static_cast<std::size_t>(state.size()) != layout.dim()) {
    throw DimensionError("state has " + std::to_string(state.size()) +
                         " amplitudes, layout expects " +
                         std::to_string(layout.dim()));
  }
}

void draw_block(const std::vector<double>& cdf, std::uint64_t seed,
                std::uint64_t block, std::uint64_t shots,
                std::vector<std::uint64_t>& tally) {
  Rng rng = Rng(seed).child(block);
  const double total = cdf.back();
  const std::size_t last = cdf.size() - 1;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double target = rng.uniform() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
    std::size_t k = it == cdf.end() ? last : static_cast<std::size_t>(it - cdf.begin());
    // Guard against landing on a trailing zero-probability entry.
    while (k > 0 && cdf[k] == cdf[k - 1]) --k;
    ++tally[k];
  }
}

double observable_eigenvalue(ObservableKind kind, std::size_t digit) {
  switch (kind) {
    case ObservableKind::PauliZ: return digit == 0 ? 1.0 : -1.0;
    case ObservableKind::Number: return static_cast<double>(digit);
    default: break;
  }
  throw DomainError(std::string(to_string(kind)) +
                    " is not diagonal in the computational basis");
}

}  // namespace

std::string_view to_string(ObservableKind kind) {
  switch (kind) {
    case ObservableKind::PauliX: return "paulix";
    case ObservableKind::PauliY: return "pauliy";
    case ObservableKind::PauliZ: return "pauliz";
    case ObservableKind::Number: return "number";
  }
  return "?";
}

std::optional<ObservableKind> parse_observable_kind(std::string_view name) {
  for (auto k : {ObservableKind::PauliX, ObservableKind::PauliY,
                 ObservableKind::PauliZ, ObservableKind::Number}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

Observable make_observable(ObservableKind kind, std::size_t local_dim) {
  ComplexMatrix m;
  switch (kind) {
    case ObservableKind::PauliX:
      m.resize(2, 2);
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case ObservableKind::PauliY:
      m.resize(2, 2);
      m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
      break;
    case ObservableKind::PauliZ:
      m.resize(2, 2);
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    case ObservableKind::Number: {
      if (local_dim < 1) throw DimensionError("number observable needs dim >= 1");
      const auto d = static_cast<Eigen::Index>(local_dim);
      m = ComplexMatrix::Zero(d, d);
      for (Eigen::Index k = 0; k < d; ++k) m(k, k) = static_cast<double>(k);
      break;
    }
  }
  return {kind, std::move(m)};
}

std::string basis_label(std::size_t index, const WireLayout& layout,
                        LabelStyle style) {
  const auto digits = layout.digits(index);
  std::string out;
  if (style == LabelStyle::Bits) {
    for (auto d : digits) out += std::to_string(d);
    return out;
  }
  out = "(";
  for (std::size_t w = 0; w < digits.size(); ++w) {
    if (w) out += ',';
    out += std::to_string(digits[w]);
  }
  out += ')';
  return out;
}

RealVector probabilities(const StateVector& state) {
  const double total = state.squaredNorm();
  if (!(total > 0.0)) throw DomainError("probabilities: zero state vector");
  RealVector p(state.size());
  for (Eigen::Index k = 0; k < state.size(); ++k) p(k) = std::norm(state(k)) / total;
  return p;
}

std::map<std::size_t, std::uint64_t> sample_indices(const StateVector& state,
                                                    std::uint64_t shots,
                                                    std::uint64_t seed) {
  if (shots < 1) throw DomainError("sample: shots must be >= 1");
  const RealVector p = probabilities(state);
  std::vector<double> cdf(static_cast<std::size_t>(p.size()));
  double running = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    running += p(k);
    cdf[static_cast<std::size_t>(k)] = running;
  }

  const std::uint64_t blocks = (shots + kShotBlock - 1) / kShotBlock;
  const auto shots_in = [&](std::uint64_t b) {
    return std::min(kShotBlock, shots - b * kShotBlock);
  };
  const std::uint64_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers = std::min<std::uint64_t>(hw, blocks);

  // Worker w handles blocks w, w + workers, ...; tallies are summed, so the
  // totals are the same for any worker count.
  std::vector<std::vector<std::uint64_t>> tallies(
      workers, std::vector<std::uint64_t>(cdf.size(), 0));
  auto run = [&](std::uint64_t w) {
    for (std::uint64_t b = w; b < blocks; b += workers) {
      draw_block(cdf, seed, b, shots_in(b), tallies[w]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  std::map<std::size_t, std::uint64_t> counts;
  for (std::size_t k = 0; k < cdf.size(); ++k) {
    std::uint64_t c = 0;
    for (const auto& t : tallies) c += t[k];
    if (c) counts[k] = c;
  }
  return counts;
}

std::map<std::string, std::uint64_t> sample(const StateVector& state,
                                            const WireLayout& layout,
                                            LabelStyle style,
                                            std::uint64_t shots,
                                            std::uint64_t seed) {
  check_state(state, layout);
  std::map<std::string, std::uint64_t> out;
  for (const auto& [index, count] : sample_indices(state, shots, seed)) {
    out[basis_label(index, layout, style)] = count;
  }
  return out;
}

ComplexMatrix reduced_density_matrix(const StateVector& state,
                                     const WireLayout& layout,
                                     std::size_t wire) {
  check_state(state, layout);
  if (wire >= layout.wires) {
    throw DimensionError("wire " + std::to_string(wire) + " out of range");
  }
  const std::size_t d = layout.local_dim;
  const std::size_t stride = layout.stride(wire);
  const std::size_t target[] = {wire};
  const auto di = static_cast<Eigen::Index>(d);
  ComplexMatrix rho = ComplexMatrix::Zero(di, di);
  for (const std::size_t base : rest_bases(layout, target)) {
    for (std::size_t i = 0; i < d; ++i) {
      const Complex a = state(static_cast<Eigen::Index>(base + i * stride));
      if (a == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < d; ++j) {
        rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
            a * std::conj(state(static_cast<Eigen::Index>(base + j * stride)));
      }
    }
  }
  return rho / state.squaredNorm();
}

double expectation(const StateVector& state, const WireLayout& layout,
                   const Observable& obs, std::size_t wire) {
  check_wire(layout, obs, wire);
  const ComplexMatrix rho = reduced_density_matrix(state, layout, wire);
  // tr(rho A) = sum_ij rho_ij A_ji
  return (rho.cwiseProduct(obs.matrix.transpose())).sum().real();
}

double variance(const StateVector& state, const WireLayout& layout,
                const Observable& obs, std::size_t wire) {
  check_wire(layout, obs, wire);
  const ComplexMatrix rho = reduced_density_matrix(state, layout, wire);
  const ComplexMatrix a2 = obs.matrix * obs.matrix;
  const double mean = rho.cwiseProduct(obs.matrix.transpose()).sum().real();
  const double second = rho.cwiseProduct(a2.transpose()).sum().real();
  const double var = second - mean * mean;
  if (var < 0.0 && var >= kVarianceFloor) return 0.0;
  return var;
}

std::vector<double> expectations(const StateVector& state,
                                 const WireLayout& layout,
                                 const Observable& obs) {
  std::vector<double> out;
  out.reserve(layout.wires);
  for (std::size_t w = 0; w < layout.wires; ++w) {
    out.push_back(expectation(state, layout, obs, w));
  }
  return out;
}

std::vector<double> variances(const StateVector& state,
                              const WireLayout& layout, const Observable& obs) {
  std::vector<double> out;
  out.reserve(layout.wires);
  for (std::size_t w = 0; w < layout.wires; ++w) {
    out.push_back(variance(state, layout, obs, w));
  }
  return out;
}

double expectation_product(const StateVector& state, const WireLayout& layout,
                           const Observable& obs) {
  double product = 1.0;
  for (double e : expectations(state, layout, obs)) product *= e;
  return product;
}

SampleMoments sampled_moments(const std::map<std::size_t, std::uint64_t>& counts,
                              const WireLayout& layout, ObservableKind kind,
                              std::size_t wire) {
  if (wire >= layout.wires) {
    throw DimensionError("wire " + std::to_string(wire) + " out of range");
  }
  double n = 0.0;
  double sum = 0.0;
  for (const auto& [index, count] : counts) {
    const double c = static_cast<double>(count);
    n += c;
    sum += c * observable_eigenvalue(kind, layout.digit(index, wire));
  }
  if (n == 0.0) throw DomainError("sampled_moments: no shots");
  const double mean = sum / n;
  double sq = 0.0;
  for (const auto& [index, count] : counts) {
    const double dev = observable_eigenvalue(kind, layout.digit(index, wire)) - mean;
    sq += static_cast<double>(count) * dev * dev;
  }
  return {mean, sq / n};
}

}  // namespace dualsim
