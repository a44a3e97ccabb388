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

#include "qse/errors.hpp"
#include "qse/qstate.hpp"
#include "qse/types.hpp"

namespace qse {

/// Pauli components of a single-qubit Hermitian operator E = (1/2) X_mu
/// sigma_mu. Positive operators are exactly the forward light cone.
struct MinkowskiVector {
  double x0 = 0.0;
  Vec3 x = Vec3::Zero();

  Vec4 vec() const { return Vec4(x0, x.x(), x.y(), x.z()); }
  static MinkowskiVector from_vec(const Vec4& v) {
    return {v[0], Vec3(v[1], v[2], v[3])};
  }
  Mat2c operator_form() const {
    Mat2c m = 0.5 * x0 * pauli(0);
    for (int i = 0; i < 3; ++i) m += 0.5 * x[i] * pauli(i + 1);
    return m;
  }
};

/// 4x4 matrix preserving the Minkowski metric diag(1,-1,-1,-1), with
/// L_00 >= 1 (orthochronous). Validated at construction.
class BoostMatrix {
 public:
  explicit BoostMatrix(const Mat4& m);
  const Mat4& matrix() const { return m_; }
  double gamma() const { return m_(0, 0); }

 private:
  Mat4 m_;
};

/// Forward-light-cone test: X0 >= -1e-12 and X0^2 >= |x|^2 - 1e-12.
bool is_positive(const MinkowskiVector& x);

/// Boost by a Bloch-ball velocity, |b| < 1. Throws Superluminal at the cone.
BoostMatrix boost(const Vec3& b);

/// The a' and T' blocks of gamma Theta L_b, computed in product form to
/// avoid cancellations at small b.
struct CanonicalBlocks {
  Vec3 a_prime;
  Mat3 t_prime;
};
CanonicalBlocks canonical_blocks(const ThetaMatrix& theta);

/// The canonical state on the SLOCC orbit: Bob's marginal boosted to the
/// maximally mixed state, Theta' = gamma Theta L_b. Throws ProductState when
/// |b| >= 1 - 1e-9.
ThetaMatrix canonical_state(const ThetaMatrix& theta);

/// The proper orthochronous Lorentz transformation induced by an invertible
/// 2x2 filter: Y (S x S*) Y^dag / |det S|.
Mat4 slocc_to_lorentz(const Mat2c& s);

}  // namespace qse
