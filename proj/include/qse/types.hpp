// Copyright (c) 2026 The qse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qse {

using cplx = std::complex<double>;

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;

// Decision tolerances shared across modules. Functions that take a tolerance
// parameter default to these values.
namespace tol {

// Hermiticity required of 4x4 density-like matrices at construction.
inline constexpr double hermitian = 1e-12;
// Trace normalization of a density matrix.
inline constexpr double trace = 1e-10;
// Eigenvalue floor for PSD validation at construction.
inline constexpr double psd_construct = 1e-10;
// Looser eigenvalue floor when assembling a state from a Pauli expansion,
// where coefficients may come from files with limited precision.
inline constexpr double psd_assemble = 1e-8;
// Theta_00 normalization.
inline constexpr double theta00 = 1e-10;
// |b| >= 1 - product_branch means the state is treated as a product state:
// the gamma^2 factors blow up beyond this point.
inline constexpr double product_branch = 1e-9;
// Light-cone positivity slack.
inline constexpr double light_cone = 1e-12;
// Boost velocity cutoff.
inline constexpr double superluminal = 1e-12;
// A semiaxis above this counts toward the ellipsoid dimension.
inline constexpr double semiaxis_rank = 1e-7;
// Singular values of Theta above this count toward rank(Theta).
inline constexpr double theta_rank = 1e-8;
// PPT decision bands: det(rho^TB) < -det_band or min eig < -eig_band.
inline constexpr double det_band = 1e-12;
inline constexpr double eig_band = 1e-10;

}  // namespace tol

inline Mat2c pauli(int mu) {
  Mat2c m;
  switch (mu) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

// 2x2 state with the given Bloch vector, (I + r.sigma)/2.
inline Mat2c qubit_state(const Vec3& r) {
  Mat2c m;
  m << cplx(1.0 + r.z(), 0.0), cplx(r.x(), -r.y()),
       cplx(r.x(), r.y()), cplx(1.0 - r.z(), 0.0);
  return 0.5 * m;
}

inline Vec3 bloch_of(const Mat2c& m) {
  return Vec3(2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(),
              (m(0, 0) - m(1, 1)).real());
}

inline Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

// Rotation by angle about a unit axis (Rodrigues form).
inline Mat3 rotation_about(const Vec3& axis, double angle) {
  Mat3 k;
  k << 0, -axis.z(), axis.y(),
       axis.z(), 0, -axis.x(),
       -axis.y(), axis.x(), 0;
  return Mat3::Identity() + std::sin(angle) * k +
         (1.0 - std::cos(angle)) * k * k;
}

}  // namespace qse
