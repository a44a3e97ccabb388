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

#include "qse/classify.hpp"

#include "qse/discord.hpp"
#include "qse/ellipsoid.hpp"
#include "qse/separability.hpp"
#include "qse/steering.hpp"

namespace qse {

ClassificationReport classify(const DensityMatrix& rho, double rank_tol) {
  const ThetaMatrix theta = to_theta(rho);
  const SteeringEllipsoid ea = ellipsoid_A(theta, rank_tol);

  ClassificationReport r;
  r.entangled = is_entangled_ppt(rho);
  r.dimension = ea.dimension;
  r.obese = ea.dimension == 3;
  static const char* kShape[4] = {"point", "needle", "pancake", "obese"};
  r.shape = kShape[ea.dimension];
  r.center = ea.center;
  r.semiaxes = ea.semiaxes;
  r.volume_A = volume_from_ellipsoid(ea);
  r.volume_B = volume_from_ellipsoid(ellipsoid_B(theta, rank_tol));
  try {
    r.complete_steering = complete_steering_check(theta).complete;
  } catch (const ProductState&) {
    r.complete_steering = true;  // the only decomposition is the point itself
  }
  r.zero_discord_A = zero_discord_A(theta);
  r.zero_discord_B = zero_discord_B_from_A_geometry(theta);
  return r;
}

}  // namespace qse
