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

#include "qse/ellipsoid.hpp"
#include "qse/numerics.hpp"
#include "qse/qstate.hpp"

namespace qse {

/// Everything the ellipsoid representation keeps about a state: Alice's
/// ellipsoid (matrix and center) and the two local Bloch vectors.
struct GeometricData {
  Mat3Sym q;
  Vec3 c = Vec3::Zero();
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
};

/// Checks the representability invariants: Q PSD, the ellipsoid inside the
/// Bloch ball, Bloch vectors inside the ball, and a - c inside the ellipsoid
/// span. Throws NotPsd or Incompatible.
void validate(const GeometricData& g);

/// The canonical state for an ellipsoid: Bloch vectors (c, 0) and
/// correlation matrix sqrt(Q) O. Throws NotPhysical when the assembled
/// matrix is not a state.
DensityMatrix canonical_from_geometry(const Mat3Sym& q, const Vec3& c,
                                      const Mat3& o);

/// Minimal rotation taking b to target (|b| = |target| within 1e-8, else
/// LengthMismatch). Antiparallel inputs rotate half a turn about the
/// canonical perpendicular of b.
Mat3 solve_rotation_M(const Vec3& b, const Vec3& target);

/// Rebuilds a two-qubit state from its geometric data. The result is unique
/// up to Bob's residual basis freedom; the gauge is fixed to B = I in the
/// O = M B factorization, with the sign det(O) = +1 preferred and the
/// reflected candidate used when positivity requires it.
DensityMatrix reconstruct_state(const GeometricData& g);

/// (Q_A, c_A, a, b) of a state.
GeometricData extract_geometry(const DensityMatrix& rho);

/// Componentwise distance between two geometric-data records.
double geometry_distance(const GeometricData& g1, const GeometricData& g2);

/// Distance between two states modulo Bob's residual gauge: local Bloch
/// vectors compared directly, correlation matrices compared after minimizing
/// over the O(3) transformations fixing b. Zero (to rounding) iff the states
/// differ by a Bob basis change that leaves rho_B invariant.
double bob_gauge_residual(const DensityMatrix& rho1, const DensityMatrix& rho2);

}  // namespace qse
