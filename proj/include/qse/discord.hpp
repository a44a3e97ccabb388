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
#include "qse/qstate.hpp"

namespace qse {

/// Zero discord for Alice iff her ellipsoid is a segment of a diameter: a
/// point, or a needle whose supporting line passes through the origin.
bool zero_discord_A(const ThetaMatrix& theta);

/// Zero discord for Bob, evaluated through two routes that must agree:
/// on E_A (one-dimensional with b * s_A = |c_A - a|) and on E_B (segment of
/// a diameter). InternalInconsistency if they disagree cleanly.
bool zero_discord_B_from_A_geometry(const ThetaMatrix& theta);

/// Wootters concurrence from the spin-flip spectrum.
double concurrence(const DensityMatrix& rho);

enum class MeasuredParty { A, B };

struct DiscordOptions {
  int grid_azimuth = 64;
  int grid_polar = 32;
  bool refine = true;
  int refine_iterations = 300;
};

/// Quantum discord (base-2 entropies) minimized over projective measurements
/// on the chosen party: a full axis grid followed by simplex refinement of
/// the best cell.
double discord_numeric(const DensityMatrix& rho, MeasuredParty party,
                       const DiscordOptions& options = {});

/// One-parameter family of canonical states whose ellipsoid (center
/// (0,0,1/2), semiaxes (9/20, 3/10, 3/10)) is fixed while its orientation
/// rotates about the y axis. At angle 0 the major axis is radial; at pi/2 it
/// is orthogonal to the radial direction.
DensityMatrix theta_family(double angle);

/// Correlation matrix of theta_family at the given angle.
Mat3 theta_family_correlation(double angle);

}  // namespace qse
