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

#include "qse/discord.hpp"

#include <algorithm>
#include <cmath>

#include "qse/optimize.hpp"

namespace qse {

namespace {

constexpr double kRadialTol = 1e-8;

double entropy_bit(double p) {
  double h = 0.0;
  if (p > 1e-300) h -= p * std::log2(p);
  const double q = 1.0 - p;
  if (q > 1e-300) h -= q * std::log2(q);
  return h;
}

double qubit_entropy(double bloch_norm) {
  return entropy_bit(0.5 * (1.0 + std::min(bloch_norm, 1.0)));
}

double entropy4(const Mat4c& rho) {
  Eigen::SelfAdjointEigenSolver<Mat4c> solver(rho, Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double p = solver.eigenvalues()[i];
    if (p > 1e-15) h -= p * std::log2(p);
  }
  return h;
}

// Average conditional entropy of the unmeasured party for a projective
// measurement along the axis, via the steering map.
double conditional_entropy(const Mat4& theta_eff, const Vec3& axis) {
  double total = 0.0;
  for (int sign = -1; sign <= 1; sign += 2) {
    const Vec4 x(1.0, sign * axis.x(), sign * axis.y(), sign * axis.z());
    const Vec4 y = 0.5 * theta_eff * x;
    const double p = y[0];
    if (p < 1e-14) continue;
    total += p * qubit_entropy(Vec3(y[1], y[2], y[3]).norm() / p);
  }
  return total;
}

Vec3 axis_from_angles(double polar, double azimuth) {
  return Vec3(std::sin(polar) * std::cos(azimuth),
              std::sin(polar) * std::sin(azimuth), std::cos(polar));
}

// radial needle test: dimension <= 1 and the supporting line through the
// center along the major axis passes through the origin
bool is_diameter_segment(const SteeringEllipsoid& e) {
  if (e.dimension == 0) return true;
  if (e.dimension > 1) return false;
  const Vec3 axis = e.axes.col(0);
  return (e.center - e.center.dot(axis) * axis).norm() < kRadialTol;
}

}  // namespace

bool zero_discord_A(const ThetaMatrix& theta) {
  return is_diameter_segment(ellipsoid_A(theta));
}

bool zero_discord_B_from_A_geometry(const ThetaMatrix& theta) {
  const SteeringEllipsoid ea = ellipsoid_A(theta);
  bool on_a;
  double margin_a;
  if (ea.dimension == 0) {
    on_a = true;
    margin_a = 1.0;
  } else if (ea.dimension == 1) {
    // b = 2 |c_A - a| / l_A with l_A = 2 s_1
    margin_a = std::abs(theta.b().norm() * ea.semiaxes[0] -
                        (ea.center - theta.a()).norm());
    on_a = margin_a < kRadialTol;
  } else {
    on_a = false;
    margin_a = 1.0;
  }

  const SteeringEllipsoid eb = ellipsoid_B(theta);
  const bool on_b = is_diameter_segment(eb);

  if (on_a != on_b) {
    double margin_b = 1.0;
    if (eb.dimension == 1) {
      const Vec3 axis = eb.axes.col(0);
      margin_b = (eb.center - eb.center.dot(axis) * axis).norm();
    }
    auto ambiguous = [](double m) { return m > kRadialTol / 100 && m < kRadialTol * 100; };
    if (!ambiguous(margin_a) && !ambiguous(margin_b)) {
      throw InternalInconsistency("zero-discord-B routes disagree");
    }
  }
  return on_a;
}

double concurrence(const DensityMatrix& rho) {
  static const Mat4c yy = kron(pauli(2), pauli(2));
  const Mat4c flipped = yy * rho.matrix().conjugate() * yy;
  const Eigen::ComplexEigenSolver<Mat4c> solver(rho.matrix() * flipped, false);
  std::array<double, 4> lambda;
  for (int i = 0; i < 4; ++i) {
    lambda[i] = std::sqrt(std::max(solver.eigenvalues()[i].real(), 0.0));
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double discord_numeric(const DensityMatrix& rho, MeasuredParty party,
                       const DiscordOptions& options) {
  const ThetaMatrix theta = to_theta(rho);
  const Mat4 theta_eff = party == MeasuredParty::B
                             ? theta.matrix()
                             : Mat4(theta.matrix().transpose());
  const double s_measured =
      qubit_entropy(party == MeasuredParty::B ? rho.bloch_B().norm()
                                              : rho.bloch_A().norm());
  const double s_joint = entropy4(rho.matrix());

  double best = 1e300;
  double best_polar = 0.0, best_azimuth = 0.0;
  for (int i = 0; i < options.grid_polar; ++i) {
    const double polar = M_PI * (i + 0.5) / options.grid_polar;
    for (int j = 0; j < options.grid_azimuth; ++j) {
      const double azimuth = 2.0 * M_PI * j / options.grid_azimuth;
      const double v =
          conditional_entropy(theta_eff, axis_from_angles(polar, azimuth));
      if (v < best) {
        best = v;
        best_polar = polar;
        best_azimuth = azimuth;
      }
    }
  }
  if (options.refine) {
    Eigen::VectorXd start(2);
    start << best_polar, best_azimuth;
    const NelderMeadResult r = nelder_mead(
        [&](const Eigen::VectorXd& x) {
          return conditional_entropy(theta_eff, axis_from_angles(x[0], x[1]));
        },
        start, 0.5 * M_PI / options.grid_polar, options.refine_iterations,
        1e-15);
    best = std::min(best, r.value);
  }
  return std::max(0.0, s_measured - s_joint + best);
}

Mat3 theta_family_correlation(double angle) {
  const Mat3 base = Vec3(-0.3, -0.3, -0.45).asDiagonal();
  const Mat3 ry = rotation_about(Vec3::UnitY(), angle);
  return ry * base * ry.transpose();
}

DensityMatrix theta_family(double angle) {
  Mat4 theta = Mat4::Zero();
  theta(0, 0) = 1.0;
  theta(3, 0) = 0.5;
  theta.block<3, 3>(1, 1) = theta_family_correlation(angle);
  return from_theta(ThetaMatrix(theta));
}

}  // namespace qse
