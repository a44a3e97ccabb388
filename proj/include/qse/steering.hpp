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
#include <string>
#include <vector>

#include "qse/ellipsoid.hpp"
#include "qse/lorentz.hpp"
#include "qse/qstate.hpp"

namespace qse {

/// One steering outcome: Bob's outcome probability and the Bloch vector
/// Alice collapses to. A zero-probability outcome carries no direction and
/// is flagged instead of dividing by zero.
struct SteeringOutcome {
  double probability = 0.0;
  Vec3 bloch = Vec3::Zero();
  bool zero_probability = false;
};

/// POVM as a list of Pauli 4-vectors. Elements must be positive and sum to
/// (2, 0, 0, 0), i.e. the identity operator.
class Povm {
 public:
  explicit Povm(std::vector<MinkowskiVector> elements);
  const std::vector<MinkowskiVector>& elements() const { return elements_; }

 private:
  std::vector<MinkowskiVector> elements_;
};

/// Applies Bob's POVM element to the state: Y = (1/2) Theta X. Probability
/// Y0, steered Bloch vector Y_{1..3}/Y0. Throws NotPositive for elements
/// outside the light cone.
SteeringOutcome steer(const ThetaMatrix& theta, const MinkowskiVector& element);

/// The three independently computable conditions of the complete-steering
/// theorem. They agree analytically; `complete` is the kernel condition.
///   cond3: a lies on the surface of E_A scaled down by b,
///   cond4: the affine span of E_B contains the maximally mixed state,
///   cond6: (1,0,0,0) is orthogonal to ker(Theta).
/// The q* fields are the raw distances the boolean decisions threshold.
struct CompleteSteeringReport {
  bool complete = false;
  bool cond3 = false;
  bool cond4 = false;
  bool cond6 = false;
  double q3 = 0.0;
  double q4 = 0.0;
  double q6 = 0.0;
};

/// Evaluates the theorem's conditions. Throws ProductState for (near-)product
/// inputs and InternalInconsistency if the conditions disagree with all
/// margins far from their thresholds.
CompleteSteeringReport complete_steering_check(const ThetaMatrix& theta);

/// A target ensemble member for steer_to_decomposition.
struct WeightedTarget {
  double weight = 0.0;
  Vec3 bloch = Vec3::Zero();
};

/// Either the POVM realizing a requested ensemble or the reason it cannot
/// be realized.
struct SteerPlan {
  std::optional<Povm> povm;
  std::string unreachable_reason;
  bool reachable() const { return povm.has_value(); }
};

/// Constructs Bob's POVM steering Alice to the requested convex decomposition
/// of a, when one exists. Targets must average to a and lie in E_A (else
/// BadDecomposition). For complete-steering states every decomposition is
/// reachable; otherwise reachability is decided exactly by the kernel
/// capacity of the targets.
SteerPlan steer_to_decomposition(const ThetaMatrix& theta,
                                 const std::vector<WeightedTarget>& targets);

/// Monte Carlo verification of the ellipsoid construction.
///   max_violation: worst ellipsoid-membership excess over all sampled
///     projective steering outcomes (quadratic form above 1, or off-span
///     leakage).
///   min_coverage_gap: Hausdorff-style gap between the convex hull of the
///     samples and the analytic surface, measured by support functions over
///     directions in the ellipsoid's span; tends to 0 as n grows.
struct HullReport {
  double max_violation = 0.0;
  double min_coverage_gap = 0.0;
};

HullReport mc_hull_oracle(const ThetaMatrix& theta, int n, std::uint64_t seed);

}  // namespace qse
