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

#include "qse/ellipsoid.hpp"

#include <cmath>

namespace qse {

SteeringData steering_data_A(const ThetaMatrix& theta) {
  SteeringData data;
  const Vec3 b = theta.b();
  if (b.norm() >= 1.0 - tol::product_branch) {
    data.center = theta.a();
    data.point = true;
    return data;
  }
  const CanonicalBlocks blocks = canonical_blocks(theta);
  data.center = blocks.a_prime;
  data.t_canonical = blocks.t_prime;
  data.q = Mat3Sym::gram(blocks.t_prime);
  return data;
}

SteeringData steering_data_B(const ThetaMatrix& theta) {
  return steering_data_A(theta.transposed());
}

SteeringEllipsoid ellipsoid_from_data(const SteeringData& data,
                                      double rank_tol) {
  SteeringEllipsoid e;
  e.center = data.center;
  if (data.point) return e;
  const Svd3 svd = svd3(data.t_canonical);
  e.semiaxes = svd.singular_values;
  e.axes = svd.u;
  e.dimension = 0;
  for (int i = 0; i < 3; ++i)
    if (e.semiaxes[i] > rank_tol) ++e.dimension;
  return e;
}

SteeringEllipsoid ellipsoid_A(const ThetaMatrix& theta, double rank_tol) {
  return ellipsoid_from_data(steering_data_A(theta), rank_tol);
}

SteeringEllipsoid ellipsoid_B(const ThetaMatrix& theta, double rank_tol) {
  return ellipsoid_from_data(steering_data_B(theta), rank_tol);
}

double volume_from_ellipsoid(const SteeringEllipsoid& e) {
  return (4.0 * M_PI / 3.0) * e.semiaxes[0] * e.semiaxes[1] * e.semiaxes[2];
}

double volume_from_rho(const DensityMatrix& rho) {
  const double b2 = rho.bloch_B().squaredNorm();
  const double om = 1.0 - b2;
  if (std::sqrt(b2) >= 1.0 - tol::product_branch) return 0.0;
  const cplx det_rho = rho.matrix().determinant();
  const cplx det_pt = partial_transpose_B(rho.matrix()).determinant();
  return (64.0 * M_PI / 3.0) * std::abs(det_rho - det_pt) / (om * om);
}

double volume_ratio_check(const ThetaMatrix& theta) {
  const double a2 = theta.a().squaredNorm();
  const double b2 = theta.b().squaredNorm();
  const double va = volume_from_ellipsoid(ellipsoid_A(theta));
  const double vb = volume_from_ellipsoid(ellipsoid_B(theta));
  const double r = (1.0 - b2) / (1.0 - a2);
  return std::abs(vb - r * r * va);
}

bool is_obese(const SteeringEllipsoid& e) { return e.dimension == 3; }

double support(const SteeringEllipsoid& e, const Vec3& direction) {
  const Vec3 u = e.semiaxes.asDiagonal() * (e.axes.transpose() * direction);
  return e.center.dot(direction) + u.norm();
}

double max_radius(const SteeringEllipsoid& e) {
  // max_x |x| = max over unit directions of the support function; fixed-point
  // ascent from each axis direction and from the center direction.
  const Mat3 m = e.axes * e.semiaxes.cwiseAbs2().asDiagonal() *
                 e.axes.transpose();
  double best = 0.0;
  auto ascend = [&](Vec3 n) {
    for (int it = 0; it < 60; ++it) {
      const Vec3 du = e.semiaxes.asDiagonal() * (e.axes.transpose() * n);
      const double dn = du.norm();
      Vec3 g = e.center;
      if (dn > 1e-15) g += m * n / dn;
      const double gn = g.norm();
      if (gn < 1e-15) break;
      n = g / gn;
    }
    best = std::max(best, support(e, n));
  };
  if (e.center.norm() > 1e-12) ascend(e.center.normalized());
  for (int i = 0; i < 3; ++i) {
    ascend(e.axes.col(i));
    ascend(-e.axes.col(i));
  }
  return best;
}

Membership membership(const SteeringEllipsoid& e, const Vec3& point,
                      double rank_tol) {
  const Vec3 u = e.axes.transpose() * (point - e.center);
  Membership out;
  double off2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (e.semiaxes[i] > rank_tol) {
      const double t = u[i] / e.semiaxes[i];
      out.quadratic += t * t;
    } else {
      off2 += u[i] * u[i];
    }
  }
  out.off_span = std::sqrt(off2);
  return out;
}

}  // namespace qse
