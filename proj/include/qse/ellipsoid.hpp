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

#include "qse/lorentz.hpp"
#include "qse/numerics.hpp"
#include "qse/qstate.hpp"
#include "qse/types.hpp"

namespace qse {

/// The set of Bloch vectors one party can be steered to. Semiaxes descend;
/// axes.col(i) is the direction of semiaxes[i]; dimension counts semiaxes
/// above the rank tolerance.
struct SteeringEllipsoid {
  Vec3 center = Vec3::Zero();
  Vec3 semiaxes = Vec3::Zero();
  Mat3 axes = Mat3::Identity();
  int dimension = 0;
};

/// Ellipsoid matrix and center, plus the canonical correlation matrix the
/// semiaxes are read from (q = t_canonical t_canonical^T).
struct SteeringData {
  Vec3 center = Vec3::Zero();
  Mat3Sym q;
  Mat3 t_canonical = Mat3::Zero();
  bool point = false;  // product-state branch
};

SteeringData steering_data_A(const ThetaMatrix& theta);
SteeringData steering_data_B(const ThetaMatrix& theta);

SteeringEllipsoid ellipsoid_from_data(const SteeringData& data,
                                      double rank_tol = tol::semiaxis_rank);

/// Alice's steering ellipsoid. For |b| >= 1 - 1e-9 the state is a product
/// state and the ellipsoid degenerates to the single point a.
SteeringEllipsoid ellipsoid_A(const ThetaMatrix& theta,
                              double rank_tol = tol::semiaxis_rank);

/// Bob's steering ellipsoid; the roles of the parties are transposed.
SteeringEllipsoid ellipsoid_B(const ThetaMatrix& theta,
                              double rank_tol = tol::semiaxis_rank);

/// (4 pi / 3) s1 s2 s3.
double volume_from_ellipsoid(const SteeringEllipsoid& e);

/// Alice's ellipsoid volume straight from the density matrix:
/// (64 pi / 3) |det rho - det rho^TB| / (1 - b^2)^2. Zero on the product
/// branch.
double volume_from_rho(const DensityMatrix& rho);

/// |V_B - ((1-b^2)^2/(1-a^2)^2) V_A|.
double volume_ratio_check(const ThetaMatrix& theta);

/// Nonzero volume, i.e. dimension 3.
bool is_obese(const SteeringEllipsoid& e);

/// Support function h(n) = n.c + |diag(s) F^T n| for a unit direction.
double support(const SteeringEllipsoid& e, const Vec3& direction);

/// max_{x in E} |x|; the ellipsoid lies inside the Bloch ball iff this is
/// at most 1.
double max_radius(const SteeringEllipsoid& e);

/// Membership data for a point: the quadratic form (p-c)^T Q^+ (p-c)
/// restricted to the span, and the magnitude of the off-span component.
/// Inside the ellipsoid means quadratic <= 1 and off_span ~ 0.
struct Membership {
  double quadratic = 0.0;
  double off_span = 0.0;
};
Membership membership(const SteeringEllipsoid& e, const Vec3& point,
                      double rank_tol = tol::semiaxis_rank);

}  // namespace qse
