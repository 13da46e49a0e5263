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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace dualsim {

using Complex = std::complex<double>;

/// Dense complex matrix. Indexing is (row, col); storage order is an Eigen
/// detail and never observable through the API.
using ComplexMatrix = Eigen::MatrixXcd;

/// Complex amplitude vector over a computational basis.
using StateVector = Eigen::VectorXcd;

using RealVector = Eigen::VectorXd;

inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kOracleTolerance = 1e-12;

/// Kronecker product; dims (a.rows*b.rows) x (a.cols*b.cols).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector kron(const StateVector& a, const StateVector& b);

/// Matrix exponential by scaling and squaring with a diagonal Pade core
/// (degrees 3, 5, 7, 9, 13 selected from the 1-norm).
ComplexMatrix expm(const ComplexMatrix& m);

/// Partial Taylor sum  sum_{k=0}^{terms-1} m^k / k!.
ComplexMatrix expm_taylor(const ComplexMatrix& m, std::size_t terms);

/// sqrt(<x-y|x-y>).
double distance(const StateVector& x, const StateVector& y);

/// arccos(|<x|y>| / (|x| |y|)), in [0, pi/2].
double angle(const StateVector& x, const StateVector& y);

/// True iff |x - g y| < tol for some unit-modulus g. The phase is fixed by
/// aligning the largest-magnitude amplitude of x.
bool equal_up_to_global_phase(const StateVector& x, const StateVector& y,
                              double tol);

/// max |(U^dagger U - I)_{ij}|.
double unitarity_defect(const ComplexMatrix& u);

/// max |(A - A^dagger)_{ij}|.
double hermiticity_defect(const ComplexMatrix& a);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// |index> in a basis of size dim.
StateVector basis_state(std::size_t dim, std::size_t index);

/// True iff every entry is finite.
bool all_finite(const ComplexMatrix& m);

}  // namespace dualsim
