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

#include "dualsim/layout.hpp"
#include "dualsim/numeric.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace dualsim {

inline constexpr std::size_t kMaxModes = 4;
inline constexpr std::size_t kMinCutoff = 2;
inline constexpr std::size_t kMaxCutoff = 64;
inline constexpr std::size_t kMaxQumodeDim = std::size_t{1} << 20;

/// Throws DomainError/CapacityError unless 1 <= modes <= 4,
/// 2 <= cutoff <= 64 and cutoff^modes <= 2^20.
void check_qumode_shape(std::size_t modes, std::size_t cutoff);

/// Truncated creation, annihilation and number operators.
struct LadderOps {
  std::size_t cutoff;
  ComplexMatrix create;
  ComplexMatrix annihilate;
  ComplexMatrix number;
};

LadderOps ladder_ops(std::size_t cutoff);

enum class CvGateKind { Squeezer, Rotation, Displacement, Beamsplitter };

std::string_view to_string(CvGateKind kind);

struct CvGate {
  CvGateKind kind;
  std::vector<Complex> params;
  std::size_t cutoff;
  /// d x d for single-mode gates, d^2 x d^2 (first mode most significant)
  /// for the beamsplitter.
  ComplexMatrix matrix;

  std::size_t wire_count() const {
    return kind == CvGateKind::Beamsplitter ? 2 : 1;
  }
};

/// exp((conj(z) a^2 - z a^dagger^2) / 2) on the truncated space.
CvGate squeezer(Complex z, std::size_t cutoff);

/// exp(i phi n) = diag(e^{i phi k}).
CvGate rotation(double phi, std::size_t cutoff);

/// exp(alpha a^dagger - conj(alpha) a) on the truncated space.
CvGate displacement(Complex alpha, std::size_t cutoff);

/// exp(theta (e^{i phi} a^dagger b - e^{-i phi} a b^dagger)).
CvGate beamsplitter(double theta, double phi, std::size_t cutoff);

/// The beamsplitter generator conserves total photon number, and so does its
/// truncation: the gate is block diagonal over sectors N = n_a + n_b.
struct PhotonSector {
  std::size_t total;
  /// Two-mode local indices n_a * d + n_b, ordered by increasing n_a.
  std::vector<std::size_t> members;
  ComplexMatrix block;
};

struct BeamsplitterBlocks {
  double theta;
  double phi;
  std::size_t cutoff;
  std::vector<PhotonSector> sectors;
};

BeamsplitterBlocks beamsplitter_blocks(double theta, double phi,
                                       std::size_t cutoff);

struct InterferometerParams {
  /// (theta, phi) for the beamsplitter on modes (j, j + 1), j = 0..m-2.
  std::vector<std::pair<double, double>> beamsplitters;
  /// Rotation angle for each of the m modes.
  std::vector<double> rotations;
};

/// Throws DimensionError unless the parameter lists have lengths m-1 and m.
void check_interferometer_params(const InterferometerParams& params,
                                 std::size_t m_modes);

/// (R(phi_0) x ... x R(phi_{m-1})) * BS_{m-2} * ... * BS_0, where BS_j acts
/// on modes j and j+1. BS_0 is applied to the state first. Materialized
/// densely, so cutoff^m is further limited to kMaxDenseDim.
ComplexMatrix interferometer(const InterferometerParams& params,
                             std::size_t m_modes, std::size_t cutoff);

class QumodeRegister {
 public:
  /// Vacuum on every mode.
  QumodeRegister(std::size_t modes, std::size_t cutoff);

  /// Throws if the state length is not cutoff^modes or it is not normalized.
  QumodeRegister(std::size_t modes, std::size_t cutoff, StateVector state);

  std::size_t modes() const noexcept { return modes_; }
  std::size_t cutoff() const noexcept { return cutoff_; }
  const StateVector& state() const noexcept { return state_; }
  WireLayout layout() const { return {cutoff_, modes_}; }

 private:
  std::size_t modes_;
  std::size_t cutoff_;
  StateVector state_;
};

/// Product state of single-mode states, mode 0 leftmost.
QumodeRegister product_state(std::span<const StateVector> mode_states);

QumodeRegister apply(const QumodeRegister& reg, const CvGate& gate,
                     std::span<const std::size_t> targets);

/// Beamsplitter applied sector by sector on modes (first, second).
QumodeRegister apply(const QumodeRegister& reg, const BeamsplitterBlocks& bs,
                     std::size_t first, std::size_t second);

/// Interferometer on the listed modes, in list order (wires[j], wires[j+1])
/// for beamsplitter j. Does not materialize the dense matrix.
QumodeRegister apply_interferometer(const QumodeRegister& reg,
                                    const InterferometerParams& params,
                                    std::span<const std::size_t> wires);

/// Unnormalized truncated series for S(z)|0>, with the missing norm.
struct SqueezedSeries {
  StateVector amplitudes;
  /// 1 - sum |c_k|^2 over the retained terms.
  double norm_deficit;
};

/// (1/sqrt(cosh z)) sum_n sqrt((2n)!)/(2^n n!) tanh^n(z) |2n>, for 2n < cutoff.
SqueezedSeries squeezed_vacuum_series(double z, std::size_t cutoff);

/// The series above, renormalized.
StateVector prepare_squeezed_vacuum(double z, std::size_t cutoff);

/// Probability mass on basis states where some mode has occupation
/// >= cutoff - top_levels. Requires 1 <= top_levels < cutoff.
double leakage(const QumodeRegister& reg, std::size_t top_levels);

}  // namespace dualsim
