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

#include <string>

#include "qse/qstate.hpp"
#include "qse/types.hpp"

namespace qse {

/// Everything the classifier reports about a state: entanglement, the
/// ellipsoid-zoo shape, steering completeness, discord geometry, volumes.
struct ClassificationReport {
  bool entangled = false;
  bool obese = false;
  int dimension = 0;
  std::string shape;  // point | needle | pancake | obese
  bool complete_steering = false;
  bool zero_discord_A = false;
  bool zero_discord_B = false;
  double volume_A = 0.0;
  double volume_B = 0.0;
  Vec3 center = Vec3::Zero();
  Vec3 semiaxes = Vec3::Zero();
};

/// Classification of a state through all modules. Product states are
/// reported completely steerable (their only decomposition is trivially
/// reachable).
ClassificationReport classify(const DensityMatrix& rho,
                              double rank_tol = tol::semiaxis_rank);

}  // namespace qse
