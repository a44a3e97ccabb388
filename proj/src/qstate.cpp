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

#include "qse/qstate.hpp"

#include <array>
#include <cmath>

namespace qse {

namespace {

const std::array<Mat4c, 16>& pauli_basis() {
  static const std::array<Mat4c, 16> basis = []() {
    std::array<Mat4c, 16> t;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        t[4 * mu + nu] = kron(pauli(mu), pauli(nu));
    return t;
  }();
  return basis;
}

}  // namespace

DensityMatrix::DensityMatrix(const Mat4c& m, double psd_tol) {
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol::hermitian) {
    throw InvalidState("hermiticity violated by " + std::to_string(herm_dev));
  }
  m_ = 0.5 * (m + m.adjoint());
  const double tr_dev = std::abs(m_.trace().real() - 1.0) +
                        std::abs(m_.trace().imag());
  if (tr_dev > tol::trace) {
    throw InvalidState("trace violated by " + std::to_string(tr_dev));
  }
  Eigen::SelfAdjointEigenSolver<Mat4c> solver(m_, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -psd_tol) {
    throw InvalidState("positivity violated: eigenvalue " +
                       std::to_string(min_eig));
  }
}

Mat2c DensityMatrix::reduced_A() const {
  Mat2c r;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      r(i, k) = m_(2 * i, 2 * k) + m_(2 * i + 1, 2 * k + 1);
  return r;
}

Mat2c DensityMatrix::reduced_B() const {
  Mat2c r;
  for (int j = 0; j < 2; ++j)
    for (int l = 0; l < 2; ++l) r(j, l) = m_(j, l) + m_(2 + j, 2 + l);
  return r;
}

ThetaMatrix::ThetaMatrix(const Mat4& m) : m_(m) {
  if (std::abs(m_(0, 0) - 1.0) > tol::theta00) {
    throw InvalidState("theta00 deviates from 1 by " +
                       std::to_string(std::abs(m_(0, 0) - 1.0)));
  }
  if (a().norm() > 1.0 + 1e-9 || b().norm() > 1.0 + 1e-9) {
    throw InvalidState("bloch-norm exceeds 1");
  }
}

int ThetaMatrix::rank(double cutoff) const {
  Eigen::JacobiSVD<Mat4> svd(m_);
  int r = 0;
  for (int i = 0; i < 4; ++i)
    if (svd.singularValues()[i] > cutoff) ++r;
  return r;
}

ThetaMatrix to_theta(const DensityMatrix& rho) {
  const auto& basis = pauli_basis();
  Mat4 th;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      th(mu, nu) = (rho.matrix() * basis[4 * mu + nu]).trace().real();
  return ThetaMatrix(th);
}

DensityMatrix from_theta(const ThetaMatrix& theta) {
  const auto& basis = pauli_basis();
  Mat4c rho = Mat4c::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      rho += theta.matrix()(mu, nu) * basis[4 * mu + nu];
  rho *= 0.25;
  try {
    return DensityMatrix(rho, tol::psd_assemble);
  } catch (const InvalidState& e) {
    throw NotPhysical(std::string("theta is not a state: ") + e.what());
  }
}

Mat4c partial_transpose_B(const Mat4c& m) {
  Mat4c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          r(2 * i + j, 2 * k + l) = m(2 * i + l, 2 * k + j);
  return r;
}

Mat4Herm partial_transpose_B(const DensityMatrix& rho) {
  return Mat4Herm(partial_transpose_B(rho.matrix()));
}

Mat4c reshuffle(const Mat4c& m) {
  Mat4c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          r(2 * i + j, 2 * k + l) = m(2 * i + k, 2 * j + l);
  return r;
}

const Mat4c& upsilon() {
  static const Mat4c y = []() {
    const double s = 1.0 / std::sqrt(2.0);
    Mat4c m;
    m << s, 0, 0, s,
         0, s, s, 0,
         0, cplx(0, s), cplx(0, -s), 0,
         s, 0, 0, -s;
    return m;
  }();
  return y;
}

double det_reshuffle_identity_check(const Mat4c& m) {
  const Mat4c mtb = partial_transpose_B(m);
  const cplx lhs = m.determinant();
  const cplx rhs = mtb.determinant() - reshuffle(mtb).determinant();
  return std::abs(lhs - rhs);
}

DensityMatrix random_density(int rank, Rng& rng) {
  if (rank < 1 || rank > 4) throw Error("rank must be in 1..4");
  Eigen::MatrixXcd g(4, rank);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = rng.gauss_cplx();
  Mat4c rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

}  // namespace qse
