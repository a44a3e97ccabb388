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

#include "qse/lorentz.hpp"

#include <cmath>

namespace qse {

namespace {

Mat4 minkowski_metric() {
  Mat4 eta = Mat4::Zero();
  eta.diagonal() << 1, -1, -1, -1;
  return eta;
}

}  // namespace

BoostMatrix::BoostMatrix(const Mat4& m) : m_(m) {
  static const Mat4 eta = minkowski_metric();
  const double dev = (m_.transpose() * eta * m_ - eta).cwiseAbs().maxCoeff();
  if (dev > 1e-10) {
    throw Error("boost does not preserve the Minkowski metric: deviation " +
                std::to_string(dev));
  }
  if (m_(0, 0) < 1.0 - 1e-12) {
    throw Error("boost is not orthochronous");
  }
}

bool is_positive(const MinkowskiVector& x) {
  return x.x0 >= -tol::light_cone &&
         x.x0 * x.x0 >= x.x.squaredNorm() - tol::light_cone;
}

BoostMatrix boost(const Vec3& b) {
  const double b2 = b.squaredNorm();
  if (b2 >= (1.0 - tol::superluminal) * (1.0 - tol::superluminal)) {
    throw Superluminal("|b| = " + std::to_string(std::sqrt(b2)));
  }
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  Mat4 m = Mat4::Identity();
  m(0, 0) = gamma;
  m.block<1, 3>(0, 1) = -gamma * b.transpose();
  m.block<3, 1>(1, 0) = -gamma * b;
  // (gamma - 1)/b^2 written as gamma^2/(gamma + 1), stable as b -> 0.
  m.block<3, 3>(1, 1) =
      Mat3::Identity() + (gamma * gamma / (gamma + 1.0)) * b * b.transpose();
  return BoostMatrix(m);
}

CanonicalBlocks canonical_blocks(const ThetaMatrix& theta) {
  const Vec3 a = theta.a();
  const Vec3 b = theta.b();
  const Mat3 t = theta.correlation();
  const double b2 = b.squaredNorm();
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  CanonicalBlocks out;
  out.a_prime = gamma * gamma * (a - t * b);
  out.t_prime = gamma * (t - a * b.transpose()) *
                (Mat3::Identity() +
                 (gamma * gamma / (gamma + 1.0)) * b * b.transpose());
  return out;
}

ThetaMatrix canonical_state(const ThetaMatrix& theta) {
  if (theta.b().norm() >= 1.0 - tol::product_branch) {
    throw ProductState("Bob's marginal is pure; the canonical state is "
                       "undefined for product states");
  }
  const CanonicalBlocks blocks = canonical_blocks(theta);
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1.0;
  m.block<3, 1>(1, 0) = blocks.a_prime;
  m.block<3, 3>(1, 1) = blocks.t_prime;
  return ThetaMatrix(m);
}

Mat4 slocc_to_lorentz(const Mat2c& s) {
  const double abs_det = std::abs(s.determinant());
  if (abs_det < 1e-12) {
    throw SingularMatrix("|det S| = " + std::to_string(abs_det));
  }
  const Mat4c lam =
      upsilon() * kron(s, s.conjugate()) * upsilon().adjoint() / abs_det;
  const double imag_dev = lam.imag().cwiseAbs().maxCoeff();
  if (imag_dev > 1e-10) {
    throw InternalInconsistency("Lorentz image has imaginary part " +
                                std::to_string(imag_dev));
  }
  return lam.real();
}

}  // namespace qse
