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

#include "dualsim/qumode.hpp"

#include "dualsim/error.hpp"

#include <cmath>
#include <string>

namespace dualsim {
namespace {

constexpr Complex kI{0.0, 1.0};

void check_cutoff(std::size_t cutoff) {
  if (cutoff < kMinCutoff || cutoff > kMaxCutoff) {
    throw DomainError("cutoff " + std::to_string(cutoff) + " outside [" +
                      std::to_string(kMinCutoff) + ", " +
                      std::to_string(kMaxCutoff) + "]");
  }
}

std::size_t checked_dim(std::size_t modes, std::size_t cutoff) {
  check_qumode_shape(modes, cutoff);
  std::size_t dim = 1;
  for (std::size_t i = 0; i < modes; ++i) dim *= cutoff;
  return dim;
}

void check_normalized(const StateVector& state) {
  if (std::abs(state.squaredNorm() - 1.0) > kNormTolerance) {
    throw DomainError("state is not normalized");
  }
}

}  // namespace

void check_qumode_shape(std::size_t modes, std::size_t cutoff) {
  if (modes < 1 || modes > kMaxModes) {
    throw CapacityError("qumode count " + std::to_string(modes) +
                        " outside [1, " + std::to_string(kMaxModes) + "]");
  }
  check_cutoff(cutoff);
  std::size_t dim = 1;
  for (std::size_t i = 0; i < modes; ++i) {
    dim *= cutoff;
    if (dim > kMaxQumodeDim) {
      throw CapacityError("cutoff^modes = " + std::to_string(cutoff) + "^" +
                          std::to_string(modes) + " exceeds 2^20");
    }
  }
}

LadderOps ladder_ops(std::size_t cutoff) {
  if (cutoff < kMinCutoff) {
    throw DomainError("ladder_ops: cutoff must be >= 2, got " +
                      std::to_string(cutoff));
  }
  const auto d = static_cast<Eigen::Index>(cutoff);
  LadderOps ops{cutoff, ComplexMatrix::Zero(d, d), ComplexMatrix::Zero(d, d),
                ComplexMatrix::Zero(d, d)};
  for (Eigen::Index k = 1; k < d; ++k) {
    const double s = std::sqrt(static_cast<double>(k));
    ops.annihilate(k - 1, k) = s;
    ops.create(k, k - 1) = s;
  }
  // Written out rather than multiplied: sqrt(k)^2 is not always k in doubles.
  for (Eigen::Index k = 0; k < d; ++k) ops.number(k, k) = static_cast<double>(k);
  return ops;
}

std::string_view to_string(CvGateKind kind) {
  switch (kind) {
    case CvGateKind::Squeezer: return "S";
    case CvGateKind::Rotation: return "R";
    case CvGateKind::Displacement: return "D";
    case CvGateKind::Beamsplitter: return "BS";
  }
  return "?";
}

CvGate squeezer(Complex z, std::size_t cutoff) {
  check_cutoff(cutoff);
  const auto ops = ladder_ops(cutoff);
  const ComplexMatrix a2 = ops.annihilate * ops.annihilate;
  const ComplexMatrix c2 = ops.create * ops.create;
  const ComplexMatrix generator = 0.5 * (std::conj(z) * a2 - z * c2);
  return {CvGateKind::Squeezer, {z}, cutoff, expm(generator)};
}

CvGate rotation(double phi, std::size_t cutoff) {
  check_cutoff(cutoff);
  const auto d = static_cast<Eigen::Index>(cutoff);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    m(k, k) = std::exp(kI * (phi * static_cast<double>(k)));
  }
  return {CvGateKind::Rotation, {Complex(phi, 0.0)}, cutoff, std::move(m)};
}

CvGate displacement(Complex alpha, std::size_t cutoff) {
  check_cutoff(cutoff);
  const auto ops = ladder_ops(cutoff);
  const ComplexMatrix generator =
      alpha * ops.create - std::conj(alpha) * ops.annihilate;
  return {CvGateKind::Displacement, {alpha}, cutoff, expm(generator)};
}

BeamsplitterBlocks beamsplitter_blocks(double theta, double phi,
                                       std::size_t cutoff) {
  check_cutoff(cutoff);
  const std::size_t top = cutoff - 1;
  const Complex forward = theta * std::exp(kI * phi);   // a^dagger b
  const Complex backward = theta * std::exp(-kI * phi); // a b^dagger
  BeamsplitterBlocks out{theta, phi, cutoff, {}};
  out.sectors.reserve(2 * top + 1);
  for (std::size_t total = 0; total <= 2 * top; ++total) {
    const std::size_t lo = total > top ? total - top : 0;
    const std::size_t hi = std::min(total, top);
    const auto size = static_cast<Eigen::Index>(hi - lo + 1);
    PhotonSector sector{total, {}, ComplexMatrix::Zero(size, size)};
    for (std::size_t na = lo; na <= hi; ++na) {
      sector.members.push_back(na * cutoff + (total - na));
    }
    ComplexMatrix generator = ComplexMatrix::Zero(size, size);
    for (Eigen::Index i = 0; i + 1 < size; ++i) {
      // |na, nb> -> |na + 1, nb - 1> with amplitude sqrt(na + 1) sqrt(nb).
      const auto na = static_cast<double>(lo + static_cast<std::size_t>(i));
      const double nb = static_cast<double>(total) - na;
      const double amp = std::sqrt((na + 1.0) * nb);
      generator(i + 1, i) = forward * amp;
      generator(i, i + 1) = -backward * amp;
    }
    sector.block = expm(generator);
    out.sectors.push_back(std::move(sector));
  }
  return out;
}

CvGate beamsplitter(double theta, double phi, std::size_t cutoff) {
  const auto blocks = beamsplitter_blocks(theta, phi, cutoff);
  const auto dim = static_cast<Eigen::Index>(cutoff * cutoff);
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (const auto& sector : blocks.sectors) {
    for (std::size_t i = 0; i < sector.members.size(); ++i) {
      for (std::size_t j = 0; j < sector.members.size(); ++j) {
        m(static_cast<Eigen::Index>(sector.members[i]),
          static_cast<Eigen::Index>(sector.members[j])) =
            sector.block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return {CvGateKind::Beamsplitter, {Complex(theta, 0.0), Complex(phi, 0.0)},
          cutoff, std::move(m)};
}

void check_interferometer_params(const InterferometerParams& params,
                                 std::size_t m_modes) {
  if (m_modes == 0) throw DimensionError("interferometer needs at least one mode");
  if (params.beamsplitters.size() != m_modes - 1) {
    throw DimensionError("interferometer on " + std::to_string(m_modes) +
                         " modes needs " + std::to_string(m_modes - 1) +
                         " beamsplitter(s), got " +
                         std::to_string(params.beamsplitters.size()));
  }
  if (params.rotations.size() != m_modes) {
    throw DimensionError("interferometer on " + std::to_string(m_modes) +
                         " modes needs " + std::to_string(m_modes) +
                         " rotation(s), got " +
                         std::to_string(params.rotations.size()));
  }
}

ComplexMatrix interferometer(const InterferometerParams& params,
                             std::size_t m_modes, std::size_t cutoff) {
  check_interferometer_params(params, m_modes);
  const std::size_t dim = checked_dim(m_modes, cutoff);
  if (dim > kMaxDenseDim) {
    throw CapacityError("dense interferometer of dimension " +
                        std::to_string(dim) + " exceeds the limit of " +
                        std::to_string(kMaxDenseDim));
  }
  const WireLayout layout{cutoff, m_modes};
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  for (std::size_t j = 0; j + 1 < m_modes; ++j) {
    const auto [theta, phi] = params.beamsplitters[j];
    const std::size_t wires[] = {j, j + 1};
    u = embed_dense(beamsplitter(theta, phi, cutoff).matrix, wires, layout) * u;
  }
  ComplexMatrix rotations = rotation(params.rotations[0], cutoff).matrix;
  for (std::size_t j = 1; j < m_modes; ++j) {
    rotations = kron(rotations, rotation(params.rotations[j], cutoff).matrix);
  }
  return rotations * u;
}

QumodeRegister::QumodeRegister(std::size_t modes, std::size_t cutoff)
    : modes_(modes), cutoff_(cutoff) {
  state_ = basis_state(checked_dim(modes, cutoff), 0);
}

QumodeRegister::QumodeRegister(std::size_t modes, std::size_t cutoff,
                               StateVector state)
    : modes_(modes), cutoff_(cutoff), state_(std::move(state)) {
  const std::size_t dim = checked_dim(modes, cutoff);
  if (static_cast<std::size_t>(state_.size()) != dim) {
    throw DimensionError("state length " + std::to_string(state_.size()) +
                         " is not " + std::to_string(cutoff) + "^" +
                         std::to_string(modes));
  }
  check_normalized(state_);
}

QumodeRegister product_state(std::span<const StateVector> mode_states) {
  if (mode_states.empty()) throw DimensionError("product_state: no modes");
  const auto cutoff = static_cast<std::size_t>(mode_states[0].size());
  StateVector state = mode_states[0];
  for (std::size_t i = 1; i < mode_states.size(); ++i) {
    if (static_cast<std::size_t>(mode_states[i].size()) != cutoff) {
      throw DimensionError("product_state: modes have different cutoffs");
    }
    state = kron(state, mode_states[i]);
  }
  return QumodeRegister(mode_states.size(), cutoff, std::move(state));
}

QumodeRegister apply(const QumodeRegister& reg, const CvGate& gate,
                     std::span<const std::size_t> targets) {
  if (gate.cutoff != reg.cutoff()) {
    throw DimensionError("gate cutoff " + std::to_string(gate.cutoff) +
                         " differs from register cutoff " +
                         std::to_string(reg.cutoff()));
  }
  if (targets.size() != gate.wire_count()) {
    throw DimensionError(std::string(to_string(gate.kind)) + " acts on " +
                         std::to_string(gate.wire_count()) + " mode(s), got " +
                         std::to_string(targets.size()));
  }
  return QumodeRegister(reg.modes(), reg.cutoff(),
                        apply_local(reg.state(), reg.layout(), gate.matrix, targets));
}

QumodeRegister apply(const QumodeRegister& reg, const BeamsplitterBlocks& bs,
                     std::size_t first, std::size_t second) {
  if (bs.cutoff != reg.cutoff()) {
    throw DimensionError("beamsplitter cutoff differs from register cutoff");
  }
  const WireLayout layout = reg.layout();
  const std::size_t targets[] = {first, second};
  check_targets(layout, targets);
  const std::size_t stride_a = layout.stride(first);
  const std::size_t stride_b = layout.stride(second);
  const std::size_t d = reg.cutoff();

  StateVector state = reg.state();
  std::vector<Complex> in, out;
  for (const std::size_t base : rest_bases(layout, targets)) {
    for (const auto& sector : bs.sectors) {
      const std::size_t n = sector.members.size();
      in.resize(n);
      out.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t m = sector.members[j];
        in[j] = state(static_cast<Eigen::Index>(base + (m / d) * stride_a +
                                                (m % d) * stride_b));
      }
      for (std::size_t i = 0; i < n; ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          acc += sector.block(static_cast<Eigen::Index>(i),
                              static_cast<Eigen::Index>(j)) * in[j];
        }
        out[i] = acc;
      }
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t m = sector.members[i];
        state(static_cast<Eigen::Index>(base + (m / d) * stride_a +
                                        (m % d) * stride_b)) = out[i];
      }
    }
  }
  return QumodeRegister(reg.modes(), reg.cutoff(), std::move(state));
}

QumodeRegister apply_interferometer(const QumodeRegister& reg,
                                    const InterferometerParams& params,
                                    std::span<const std::size_t> wires) {
  check_interferometer_params(params, wires.size());
  check_targets(reg.layout(), wires);
  QumodeRegister out = reg;
  for (std::size_t j = 0; j + 1 < wires.size(); ++j) {
    const auto [theta, phi] = params.beamsplitters[j];
    out = apply(out, beamsplitter_blocks(theta, phi, reg.cutoff()), wires[j],
                wires[j + 1]);
  }
  for (std::size_t j = 0; j < wires.size(); ++j) {
    const std::size_t target[] = {wires[j]};
    out = apply(out, rotation(params.rotations[j], reg.cutoff()), target);
  }
  return out;
}

SqueezedSeries squeezed_vacuum_series(double z, std::size_t cutoff) {
  check_cutoff(cutoff);
  const auto d = static_cast<Eigen::Index>(cutoff);
  SqueezedSeries out{StateVector::Zero(d), 0.0};
  const double t = std::tanh(z);
  const double log_prefactor = -0.5 * std::log(std::cosh(z));
  out.amplitudes(0) = std::exp(log_prefactor);
  if (t != 0.0) {
    const double log_t = std::log(std::abs(t));
    for (std::size_t n = 1; 2 * n < cutoff; ++n) {
      const auto nd = static_cast<double>(n);
      // log( sqrt((2n)!) / (2^n n!) |tanh z|^n ) via log-gamma.
      const double log_c = log_prefactor + 0.5 * std::lgamma(2.0 * nd + 1.0) -
                           nd * std::log(2.0) - std::lgamma(nd + 1.0) + nd * log_t;
      const double sign = (t < 0.0 && n % 2 == 1) ? -1.0 : 1.0;
      out.amplitudes(static_cast<Eigen::Index>(2 * n)) = sign * std::exp(log_c);
    }
  }
  out.norm_deficit = 1.0 - out.amplitudes.squaredNorm();
  return out;
}

StateVector prepare_squeezed_vacuum(double z, std::size_t cutoff) {
  auto series = squeezed_vacuum_series(z, cutoff);
  return series.amplitudes / series.amplitudes.norm();
}

double leakage(const QumodeRegister& reg, std::size_t top_levels) {
  if (top_levels < 1 || top_levels >= reg.cutoff()) {
    throw DomainError("leakage: top_levels " + std::to_string(top_levels) +
                      " outside [1, " + std::to_string(reg.cutoff() - 1) + "]");
  }
  const WireLayout layout = reg.layout();
  const std::size_t threshold = reg.cutoff() - top_levels;
  const StateVector& state = reg.state();
  double mass = 0.0;
  for (std::size_t i = 0; i < layout.dim(); ++i) {
    for (std::size_t w = 0; w < layout.wires; ++w) {
      if (layout.digit(i, w) >= threshold) {
        mass += std::norm(state(static_cast<Eigen::Index>(i)));
        break;
      }
    }
  }
  return mass / state.squaredNorm();
}

}  // namespace dualsim
