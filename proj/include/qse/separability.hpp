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

#include <cstdint>
#include <optional>
#include <vector>

#include "qse/ellipsoid.hpp"
#include "qse/numerics.hpp"
#include "qse/qstate.hpp"

namespace qse {

/// One product term of a separable decomposition; both parties are stored as
/// Bloch vectors (Bob's may be mixed).
struct ProductTerm {
  double weight = 0.0;
  Vec3 alice = Vec3::Zero();
  Vec3 bob = Vec3::Zero();
};

/// rho = sum_i p_i alpha_i (x) beta_i with at most four terms.
struct ProductDecomposition {
  std::vector<ProductTerm> terms;
};

DensityMatrix assemble(const ProductDecomposition& d);

/// Simplex circumscribing an ellipsoid: 2-4 vertices inside the closed unit
/// ball, one tangency point per facet.
struct TangentSimplex {
  std::vector<Vec3> vertices;
  std::vector<Vec3> tangency;
};

/// Peres-Horodecki test via det(rho^TB) < 0, cross-checked against the sign
/// of the minimal eigenvalue. The two must agree outside their tolerance
/// bands (InternalInconsistency otherwise).
bool is_entangled_ppt(const DensityMatrix& rho);

/// The geometric entanglement criterion evaluated on canonical ellipsoid
/// data: c^4 + c^2 (1 - tr Q + n^T Q n) + h(Q), negative iff entangled.
/// The skew term is zero by convention when c = 0.
double entanglement_criterion_value(const Vec3& c, const Mat3Sym& q);
bool is_entangled_geometric(const Vec3& c, const Mat3Sym& q);

/// Decisions for (c, Q) and the globally rotated (Rc, RQR^T).
std::pair<bool, bool> rotation_invariance_check(const Vec3& c, const Mat3Sym& q,
                                                const Mat3& rotation);

struct SimplexSearchOptions {
  int iterations = 500;
  int restarts = 8;
  std::uint64_t seed = 0;
};

/// Separable decomposition with dimension+1 product terms, built from a
/// simplex tangent to the steering ellipsoid (nested-simplex construction).
/// With no simplex supplied, one is searched for; SimplexNotFound reports an
/// exhausted budget without affecting the separability classification.
ProductDecomposition decompose_separable(
    const ThetaMatrix& theta,
    const std::optional<TangentSimplex>& simplex = std::nullopt,
    const SimplexSearchOptions& options = {});

/// Checks the facet-weight identities on a simplex circumscribing the unit
/// sphere (4 vertices) or the unit circle in the simplex plane (3 vertices):
/// the barycentric weights of the origin satisfy sum p_i t_i = 0, and equal
/// the facet area (edge length) ratios. Returns the worst residual of the
/// identity computed both ways.
double barycentric_tangency_check(const std::vector<Vec3>& vertices,
                                  const std::vector<Vec3>& tangency);

/// Minimal number of product states in any separable decomposition:
/// rank(Theta). Throws NotSeparable on entangled input.
int minimal_product_count(const ThetaMatrix& theta);

}  // namespace qse
