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

#include "dualsim/wigner.hpp"

#include "dualsim/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

namespace dualsim {
namespace {

// Beyond |u| = sqrt(2 n + 1) + kTailMargin every phi_k, k <= n, is below
// e^{-kTailMargin^2 / 2} ~ 1e-14.
constexpr double kTailMargin = 8.0;
constexpr double kRelativeTolerance = 1e-13;
constexpr unsigned kMaxDepth = 12;

std::size_t highest_occupied(const StateVector& state) {
  for (Eigen::Index k = state.size(); k-- > 0;) {
    if (state(k) != Complex(0.0, 0.0)) return static_cast<std::size_t>(k);
  }
  return 0;
}

}  // namespace

std::vector<double> hermite_functions(double x, std::size_t count) {
  std::vector<double> phi(count, 0.0);
  if (count == 0) return phi;
  phi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (count > 1) phi[1] = std::sqrt(2.0) * x * phi[0];
  for (std::size_t n = 1; n + 1 < count; ++n) {
    const auto nd = static_cast<double>(n);
    phi[n + 1] = std::sqrt(2.0 / (nd + 1.0)) * x * phi[n] -
                 std::sqrt(nd / (nd + 1.0)) * phi[n - 1];
  }
  return phi;
}

Complex position_wavefunction(const StateVector& state, double x) {
  const auto phi = hermite_functions(x, static_cast<std::size_t>(state.size()));
  Complex psi = 0.0;
  for (Eigen::Index k = 0; k < state.size(); ++k) {
    psi += state(k) * phi[static_cast<std::size_t>(k)];
  }
  return psi;
}

double wigner(const StateVector& state, double x, double p) {
  if (state.size() == 0) throw DimensionError("wigner: empty state");
  const double n_max = static_cast<double>(highest_occupied(state));
  // Both arguments x +/- y/2 exceed |y|/2 in magnitude for one sign, so the
  // window only depends on the occupied levels.
  const double half_window = 2.0 * (std::sqrt(2.0 * n_max + 1.0) + kTailMargin);

  // f(-y) = conj(f(y)) for f(y) = psi(x + y/2) conj(psi(x - y/2)), so the
  // integral over [-L, L] is twice the real part over [0, L].
  auto integrand = [&](double y) {
    const Complex f = position_wavefunction(state, x + 0.5 * y) *
                      std::conj(position_wavefunction(state, x - 0.5 * y));
    return (std::exp(Complex(0.0, -p * y)) * f).real();
  };
  using Quadrature = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double half = Quadrature::integrate(integrand, 0.0, half_window,
                                            kMaxDepth, kRelativeTolerance);
  return 2.0 * half / (2.0 * std::numbers::pi * state.squaredNorm());
}

double wigner(const QumodeRegister& reg, double x, double p) {
  if (reg.modes() != 1) {
    throw DimensionError("wigner: expected a single-mode state, got " +
                         std::to_string(reg.modes()) + " modes");
  }
  return wigner(reg.state(), x, p);
}

Eigen::MatrixXd wigner_grid(const StateVector& state,
                            std::span<const double> xs,
                            std::span<const double> ps) {
  Eigen::MatrixXd grid(static_cast<Eigen::Index>(xs.size()),
                       static_cast<Eigen::Index>(ps.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      grid(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          wigner(state, xs[i], ps[j]);
    }
  }
  return grid;
}

}  // namespace dualsim
