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

#include "qse/reconstruct.hpp"

#include <cmath>

namespace qse {

namespace {

// Unit vector perpendicular to v with lexicographically largest components.
Vec3 canonical_perpendicular(const Vec3& v) {
  const Vec3 vhat = v.normalized();
  Vec3 u = Vec3::UnitX() - Vec3::UnitX().dot(vhat) * vhat;
  if (u.norm() < 1e-9) {
    u = Vec3::UnitY() - Vec3::UnitY().dot(vhat) * vhat;
  }
  return u.normalized();
}

Mat4 theta_from_blocks(const Vec3& a, const Vec3& b, const Mat3& t) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1.0;
  m.block<3, 1>(1, 0) = a;
  m.block<1, 3>(0, 1) = b.transpose();
  m.block<3, 3>(1, 1) = t;
  return m;
}

// K_kj = tr(sqrt(rho_B) sigma_k sqrt(rho_B) sigma_j)
Mat3 filter_kernel(const Vec3& b) {
  const Mat2c sq = sqrt_psd(Mat2c(qubit_state(b)));
  Mat3 k;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      k(i, j) = (sq * pauli(i + 1) * sq * pauli(j + 1)).trace().real();
  return k;
}

SteeringEllipsoid ellipsoid_of(const Mat3Sym& q, const Vec3& c) {
  const EigSym3 eig = eig_sym3(q);
  SteeringEllipsoid e;
  e.center = c;
  e.axes = eig.vectors;
  for (int i = 0; i < 3; ++i) {
    e.semiaxes[i] = std::sqrt(std::max(eig.values[i], 0.0));
    if (e.semiaxes[i] > tol::semiaxis_rank) ++e.dimension;
  }
  return e;
}

}  // namespace

void validate(const GeometricData& g) {
  const EigSym3 eig = eig_sym3(g.q);
  if (eig.values[2] < -tol::psd_construct) {
    throw NotPsd("ellipsoid matrix has eigenvalue " +
                 std::to_string(eig.values[2]));
  }
  if (g.a.norm() > 1.0 + 1e-9 || g.b.norm() > 1.0 + 1e-9) {
    throw Incompatible("Bloch vector outside the ball");
  }
  if (max_radius(ellipsoid_of(g.q, g.c)) > 1.0 + 1e-8) {
    throw Incompatible("ellipsoid leaves the Bloch ball");
  }
  // a - c must lie in the range of sqrt(Q)
  const Vec3 d = g.a - g.c;
  Vec3 off = d;
  for (int i = 0; i < 3; ++i) {
    if (std::sqrt(std::max(eig.values[i], 0.0)) > tol::semiaxis_rank) {
      off -= eig.vectors.col(i).dot(d) * eig.vectors.col(i);
    }
  }
  if (off.norm() > 1e-8) {
    throw Incompatible("a - c leaves the ellipsoid span");
  }
}

DensityMatrix canonical_from_geometry(const Mat3Sym& q, const Vec3& c,
                                      const Mat3& o) {
  const Mat3 t = sqrt_psd(q).full() * o;
  return from_theta(ThetaMatrix(theta_from_blocks(c, Vec3::Zero(), t)));
}

Mat3 solve_rotation_M(const Vec3& b, const Vec3& target) {
  const double nb = b.norm(), nt = target.norm();
  if (std::abs(nb - nt) > 1e-8) {
    throw LengthMismatch("cannot rotate a vector of length " +
                         std::to_string(nb) + " onto one of length " +
                         std::to_string(nt));
  }
  if (nb < 1e-12) return Mat3::Identity();
  const Vec3 u = b / nb, v = target / nt;
  const Vec3 axis = u.cross(v);
  const double s = axis.norm();
  const double c = u.dot(v);
  if (s < 1e-12) {
    if (c > 0) return Mat3::Identity();
    return rotation_about(canonical_perpendicular(b), M_PI);
  }
  return rotation_about(axis / s, std::atan2(s, c));
}

DensityMatrix reconstruct_state(const GeometricData& g) {
  validate(g);
  const double nb = g.b.norm();
  const EigSym3 eig = eig_sym3(g.q);

  if (nb < 1e-10) {
    if ((g.a - g.c).norm() > 1e-8) {
      throw Incompatible("b = 0 requires a equal to the ellipsoid center");
    }
    try {
      return canonical_from_geometry(g.q, g.c, Mat3::Identity());
    } catch (const NotPhysical&) {
      return canonical_from_geometry(g.q, g.c, Mat3(-Mat3::Identity()));
    }
  }

  // target = pinv(sqrt(Q)) (a - c), completed through the kernel so the
  // rotated image of b has the right length
  Vec3 target = Vec3::Zero();
  int rank = 0;
  Vec3 kernel_dir = Vec3::Zero();
  for (int i = 0; i < 3; ++i) {
    const double s = std::sqrt(std::max(eig.values[i], 0.0));
    if (s > tol::semiaxis_rank) {
      ++rank;
      target += (eig.vectors.col(i).dot(g.a - g.c) / s) * eig.vectors.col(i);
    } else if (kernel_dir.isZero()) {
      kernel_dir = eig.vectors.col(i);
    }
  }
  const double nt = target.norm();
  if (nt > nb + 1e-8) {
    throw Incompatible("no rotation maps b into the ellipsoid frame: "
                       "|target| = " + std::to_string(nt) + " > |b| = " +
                       std::to_string(nb));
  }
  Vec3 image;
  if (rank == 3) {
    if (std::abs(nt - nb) > 1e-8) {
      throw Incompatible("rotation image length mismatch on a full-rank "
                         "ellipsoid");
    }
    image = nt < 1e-14 ? Vec3(nb * Vec3::UnitZ()) : Vec3(target * (nb / nt));
  } else {
    const double k = std::sqrt(std::max(0.0, nb * nb - nt * nt));
    image = target + k * kernel_dir;
    if (image.norm() > 1e-14) image *= nb / image.norm();
  }

  const Mat3 m = solve_rotation_M(g.b, image);
  const Mat3 k = filter_kernel(g.b);
  const Mat3 sq = sqrt_psd(g.q).full();
  const Mat3 r = g.c * g.b.transpose() + sq * m * k;

  try {
    return from_theta(ThetaMatrix(theta_from_blocks(g.a, g.b, r)));
  } catch (const NotPhysical&) {
    const Mat3 reflect =
        Mat3::Identity() -
        2.0 * canonical_perpendicular(g.b) *
            canonical_perpendicular(g.b).transpose();
    return from_theta(ThetaMatrix(theta_from_blocks(g.a, g.b, r * reflect)));
  }
}

GeometricData extract_geometry(const DensityMatrix& rho) {
  const ThetaMatrix theta = to_theta(rho);
  const SteeringData data = steering_data_A(theta);
  GeometricData g;
  g.q = data.q;
  g.c = data.center;
  g.a = theta.a();
  g.b = theta.b();
  return g;
}

double geometry_distance(const GeometricData& g1, const GeometricData& g2) {
  double d = (g1.q.full() - g2.q.full()).cwiseAbs().maxCoeff();
  d = std::max(d, (g1.c - g2.c).cwiseAbs().maxCoeff());
  d = std::max(d, (g1.a - g2.a).cwiseAbs().maxCoeff());
  d = std::max(d, (g1.b - g2.b).cwiseAbs().maxCoeff());
  return d;
}

double bob_gauge_residual(const DensityMatrix& rho1,
                          const DensityMatrix& rho2) {
  const ThetaMatrix th1 = to_theta(rho1);
  const ThetaMatrix th2 = to_theta(rho2);
  double res = std::max((th1.a() - th2.a()).cwiseAbs().maxCoeff(),
                        (th1.b() - th2.b()).cwiseAbs().maxCoeff());
  const Mat3 t1 = th1.correlation();
  const Mat3 t2 = th2.correlation();
  const Vec3 b = th1.b();

  if (b.norm() < 1e-9) {
    // full orthogonal Procrustes
    const Eigen::JacobiSVD<Mat3> svd(t2.transpose() * t1,
                                     Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Mat3 x = svd.matrixU() * svd.matrixV().transpose();
    return std::max(res, (t1 - t2 * x).cwiseAbs().maxCoeff());
  }

  // gauge restricted to O(3) transformations fixing b: 2x2 Procrustes in the
  // plane perpendicular to b
  const Vec3 bhat = b.normalized();
  const Vec3 e1 = canonical_perpendicular(b);
  const Vec3 e2 = bhat.cross(e1);
  Eigen::Matrix<double, 3, 2> p;
  p.col(0) = e1;
  p.col(1) = e2;
  const Eigen::Matrix<double, 3, 2> a1 = t1 * p;
  const Eigen::Matrix<double, 3, 2> a2 = t2 * p;
  const Eigen::JacobiSVD<Eigen::Matrix2d> svd(
      a2.transpose() * a1, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix2d o2 = svd.matrixU() * svd.matrixV().transpose();
  const Mat3 x = p * o2 * p.transpose() + bhat * bhat.transpose();
  return std::max(res, (t1 - t2 * x).cwiseAbs().maxCoeff());
}

}  // namespace qse
