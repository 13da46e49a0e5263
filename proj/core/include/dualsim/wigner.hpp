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

#include "dualsim/numeric.hpp"
#include "dualsim/qumode.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace dualsim {

/// Normalized Hermite functions phi_0(x) ... phi_{count-1}(x), the position
/// wavefunctions of the Fock states in units with hbar = 1.
std::vector<double> hermite_functions(double x, std::size_t count);

/// Position wavefunction psi(x) = sum_k c_k phi_k(x) of a single-mode state.
Complex position_wavefunction(const StateVector& state, double x);

/// W(x, p) = (1 / 2 pi) Integral e^{-i p y} psi(x + y/2) conj(psi(x - y/2)) dy,
/// evaluated by adaptive Gauss-Kronrod quadrature on a window outside of
/// which the integrand is below 1e-12. `state` is a single-mode Fock vector.
double wigner(const StateVector& state, double x, double p);

/// Same, throwing DimensionError unless the register has exactly one mode.
double wigner(const QumodeRegister& reg, double x, double p);

/// W sampled on xs x ps; result(i, j) = W(xs[i], ps[j]).
Eigen::MatrixXd wigner_grid(const StateVector& state,
                            std::span<const double> xs,
                            std::span<const double> ps);

}  // namespace dualsim
