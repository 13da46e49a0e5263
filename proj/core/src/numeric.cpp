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

#include "dualsim/numeric.hpp"

#include "dualsim/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace dualsim {
namespace {

void require_square(const ComplexMatrix& m, const char* op) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(op) + ": matrix is " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
}

void require_same_dim(const StateVector& x, const StateVector& y,
                      const char* op) {
  if (x.size() != y.size()) {
    throw DimensionError(std::string(op) + ": basis dimensions differ (" +
                         std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()) + ")");
  }
}

double one_norm(const ComplexMatrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

// Theta_m bounds for double precision (Higham 2005, Table 2.3).
constexpr std::array<double, 5> kPadeTheta = {
    1.495585217958292e-2, 2.539398330063230e-1, 9.504178996162932e-1,
    2.097847961257068e0, 5.371920351148152e0};

constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0,
                                          420.0,   30.0,    1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0,
                                          277200.0,   25200.0,   1512.0,
                                          56.0,       1.0};
constexpr std::array<double, 10> kPade9 = {
    17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
    2162160.0,     110880.0,     3960.0,       90.0,        1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

// r_m(A) = (V - U)^{-1} (V + U) where U collects odd and V even powers.
template <std::size_t N>
ComplexMatrix pade_low(const ComplexMatrix& a, const std::array<double, N>& b) {
  const Eigen::Index n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  ComplexMatrix odd = b[1] * ident;
  ComplexMatrix even = b[0] * ident;
  ComplexMatrix power = ident;
  for (std::size_t k = 2; k < N; k += 2) {
    power = power * a2;
    even += b[k] * power;
    if (k + 1 < N) odd += b[k + 1] * power;
  }
  const ComplexMatrix u = a * odd;
  return (even - u).partialPivLu().solve(even + u);
}

ComplexMatrix pade13(const ComplexMatrix& a) {
  const auto& b = kPade13;
  const Eigen::Index n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  const ComplexMatrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                                b[7] * a6 + b[5] * a4 + b[3] * a2 +
                                b[1] * ident;
  const ComplexMatrix u = a * u_inner;
  const ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                          b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols();
  const Eigen::Index br = b.rows(), bc = b.cols();
  ComplexMatrix out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i) {
    for (Eigen::Index j = 0; j < ac; ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix expm(const ComplexMatrix& m) {
  require_square(m, "expm");
  const Eigen::Index n = m.rows();
  if (n == 0) return m;

  const double norm = one_norm(m);
  if (norm <= kPadeTheta[0]) return pade_low(m, kPade3);
  if (norm <= kPadeTheta[1]) return pade_low(m, kPade5);
  if (norm <= kPadeTheta[2]) return pade_low(m, kPade7);
  if (norm <= kPadeTheta[3]) return pade_low(m, kPade9);

  int squarings = 0;
  if (norm > kPadeTheta[4]) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kPadeTheta[4])));
  }
  ComplexMatrix result = pade13(m / std::ldexp(1.0, squarings));
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

ComplexMatrix expm_taylor(const ComplexMatrix& m, std::size_t terms) {
  require_square(m, "expm_taylor");
  if (terms == 0) throw DomainError("expm_taylor: terms must be >= 1");
  const Eigen::Index n = m.rows();
  ComplexMatrix sum = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (std::size_t k = 1; k < terms; ++k) {
    term = (term * m) / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

double distance(const StateVector& x, const StateVector& y) {
  require_same_dim(x, y, "distance");
  return (x - y).norm();
}

double angle(const StateVector& x, const StateVector& y) {
  require_same_dim(x, y, "angle");
  const double nx = x.norm();
  const double ny = y.norm();
  if (nx == 0.0 || ny == 0.0) throw DomainError("angle: zero vector");
  // Rounding can push the ratio a hair above 1.
  const double ratio = std::min(1.0, std::abs(x.dot(y)) / (nx * ny));
  return std::acos(ratio);
}

bool equal_up_to_global_phase(const StateVector& x, const StateVector& y,
                              double tol) {
  if (x.size() != y.size()) return false;
  if (x.size() == 0) return true;
  Eigen::Index pivot = 0;
  x.cwiseAbs().maxCoeff(&pivot);
  if (std::abs(y(pivot)) == 0.0) return x.norm() < tol && y.norm() < tol;
  const Complex ratio = x(pivot) / y(pivot);
  const Complex phase = ratio / std::abs(ratio);
  return (x - phase * y).norm() < tol;
}

double unitarity_defect(const ComplexMatrix& u) {
  require_square(u, "unitarity_defect");
  const ComplexMatrix gram = u.adjoint() * u;
  return (gram - ComplexMatrix::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& a) {
  require_square(a, "hermiticity_defect");
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

StateVector basis_state(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw DimensionError("basis_state: index " + std::to_string(index) +
                         " out of range for dimension " + std::to_string(dim));
  }
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

}  // namespace dualsim
