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

#include "qse/numerics.hpp"

#include <cmath>

namespace qse {

namespace {

// First component with magnitude above 1e-12 made positive.
void fix_column_sign(Mat3& m, Mat3* tandem) {
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < 3; ++r) {
      const double x = m(r, c);
      if (std::abs(x) > 1e-12) {
        if (x < 0.0) {
          m.col(c) = -m.col(c);
          if (tandem) tandem->col(c) = -tandem->col(c);
        }
        break;
      }
    }
  }
}

}  // namespace

Mat3Sym Mat3Sym::from(const Mat3& m) {
  Mat3Sym s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= i; ++j) s.at(i, j) = 0.5 * (m(i, j) + m(j, i));
  return s;
}

Mat3Sym Mat3Sym::gram(const Mat3& m) {
  Mat3Sym s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= i; ++j) s.at(i, j) = m.row(i).dot(m.row(j));
  return s;
}

Mat3Sym Mat3Sym::diagonal(const Vec3& d) {
  Mat3Sym s;
  s.at(0, 0) = d[0];
  s.at(1, 1) = d[1];
  s.at(2, 2) = d[2];
  return s;
}

Mat3Sym Mat3Sym::congruence(const Mat3& r, const Mat3Sym& q) {
  const Mat3 p = r * q.full();
  Mat3Sym s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= i; ++j) s.at(i, j) = p.row(i).dot(r.row(j));
  return s;
}

Mat3 Mat3Sym::full() const {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = (*this)(i, j);
  return m;
}

Mat4Herm::Mat4Herm(const Mat4c& m, double tolerance) {
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tolerance) {
    throw NotHermitian("matrix deviates from Hermiticity by " +
                       std::to_string(dev));
  }
  m_ = 0.5 * (m + m.adjoint());
}

EigSym3 eig_sym3(const Mat3Sym& m) {
  Eigen::SelfAdjointEigenSolver<Mat3> solver(m.full());
  EigSym3 out;
  // Eigen sorts ascending; flip to descending.
  for (int i = 0; i < 3; ++i) {
    out.values[i] = solver.eigenvalues()[2 - i];
    out.vectors.col(i) = solver.eigenvectors().col(2 - i);
  }
  fix_column_sign(out.vectors, nullptr);
  return out;
}

Mat3Sym sqrt_psd(const Mat3Sym& m) {
  EigSym3 e = eig_sym3(m);
  Vec3 s;
  for (int i = 0; i < 3; ++i) {
    if (e.values[i] < -tol::psd_construct) {
      throw NotPsd("eigenvalue " + std::to_string(e.values[i]) +
                   " below PSD clamp threshold");
    }
    s[i] = std::sqrt(std::max(e.values[i], 0.0));
  }
  return Mat3Sym::congruence(e.vectors, Mat3Sym::diagonal(s));
}

Mat2c sqrt_psd(const Mat2c& m) {
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol::hermitian) {
    throw NotHermitian("2x2 matrix deviates from Hermiticity by " +
                       std::to_string(dev));
  }
  Eigen::SelfAdjointEigenSolver<Mat2c> solver(m);
  Eigen::Vector2d w = solver.eigenvalues();
  for (int i = 0; i < 2; ++i) {
    if (w[i] < -tol::psd_construct) {
      throw NotPsd("eigenvalue " + std::to_string(w[i]) +
                   " below PSD clamp threshold");
    }
    w[i] = std::sqrt(std::max(w[i], 0.0));
  }
  return solver.eigenvectors() * w.asDiagonal() *
         solver.eigenvectors().adjoint();
}

Svd3 svd3(const Mat3& m) {
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Svd3 out;
  out.u = svd.matrixU();
  out.singular_values = svd.singularValues();
  out.v = svd.matrixV();
  fix_column_sign(out.u, &out.v);
  return out;
}

Vec4 eig_herm4(const Mat4Herm& m) {
  Eigen::SelfAdjointEigenSolver<Mat4c> solver(m.matrix(),
                                              Eigen::EigenvaluesOnly);
  Vec4 out;
  for (int i = 0; i < 4; ++i) out[i] = solver.eigenvalues()[3 - i];
  return out;
}

}  // namespace qse
