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

#include "qse/qstate.hpp"
#include "qse/random.hpp"
#include "qse/separability.hpp"
#include "qse/types.hpp"

namespace qse::test {

inline Mat4c bell_phi_plus() {
  Mat4c m = Mat4c::Zero();
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return m;
}

// p |Psi-><Psi-| + (1-p) I/4, with T = -p I.
inline Mat4c werner(double p) {
  Mat4c singlet = Mat4c::Zero();
  singlet(1, 1) = singlet(2, 2) = 0.5;
  singlet(1, 2) = singlet(2, 1) = -0.5;
  return p * singlet + (1.0 - p) * 0.25 * Mat4c::Identity();
}

inline DensityMatrix product_state(const Vec3& ra, const Vec3& rb) {
  return DensityMatrix(kron(qubit_state(ra), qubit_state(rb)));
}

// (1/2)(|00><00| + |1+><1+|), the incomplete-steering example.
inline DensityMatrix incomplete_example() {
  Mat4c m = Mat4c::Zero();
  m(0, 0) = 0.5;
  m(2, 2) = m(3, 3) = m(2, 3) = m(3, 2) = 0.25;
  return DensityMatrix(m);
}

// (1/2)(|00><00| + |11><11|), classical-classical.
inline DensityMatrix cc_state() {
  Mat4c m = Mat4c::Zero();
  m(0, 0) = m(3, 3) = 0.5;
  return DensityMatrix(m);
}

// q rho(r0) x |u><u| + (1-q) rho(r1) x |-u><-u|: Alice's ellipsoid is the
// segment [r0, r1].
inline DensityMatrix needle_state(double q, const Vec3& r0, const Vec3& r1,
                                  const Vec3& bob_axis) {
  const Vec3 u = bob_axis.normalized();
  const Mat4c m = q * kron(qubit_state(r0), qubit_state(u)) +
                  (1.0 - q) * kron(qubit_state(r1), qubit_state(-u));
  return DensityMatrix(m);
}

// Mixture of three product terms: rank(Theta) = 3 generically.
inline DensityMatrix pancake_state(Rng& rng) {
  double w[3];
  double total = 0.0;
  for (double& x : w) total += (x = 0.2 + rng.uniform());
  Mat4c m = Mat4c::Zero();
  for (double x : w) {
    m += (x / total) *
         kron(qubit_state(rng.ball_vector()), qubit_state(rng.ball_vector()))
             .eval();
  }
  return DensityMatrix(m);
}

// p |e><e| x beta0 + (1-p) |-e><-e| x beta1: zero discord for Alice.
inline DensityMatrix zero_discord_A_state(Rng& rng) {
  const Vec3 e = rng.unit_vector();
  const double p = 0.2 + 0.6 * rng.uniform();
  return DensityMatrix(
      p * kron(qubit_state(e), qubit_state(rng.ball_vector())) +
      (1.0 - p) * kron(qubit_state(-e), qubit_state(rng.ball_vector())));
}

inline DensityMatrix zero_discord_B_state(Rng& rng) {
  const Vec3 e = rng.unit_vector();
  const double p = 0.2 + 0.6 * rng.uniform();
  return DensityMatrix(
      p * kron(qubit_state(rng.ball_vector()), qubit_state(e)) +
      (1.0 - p) * kron(qubit_state(rng.ball_vector()), qubit_state(-e)));
}

// Tilted counterpart of the zero-discord-A family: the second Alice
// projector is rotated away from antipodal, so the needle is not radial.
inline DensityMatrix perturbed_discord_A_state(Rng& rng,
                                               double tilt = M_PI / 4) {
  const Vec3 e = rng.unit_vector();
  const double p = 0.3 + 0.4 * rng.uniform();
  Vec3 axis = e.cross(rng.unit_vector());
  while (axis.norm() < 1e-6) axis = e.cross(rng.unit_vector());
  const Vec3 e2 = rotation_about(axis.normalized(), tilt) * (-e);
  const Vec3 u = rng.unit_vector();
  return DensityMatrix(p * kron(qubit_state(e), qubit_state(0.9 * u)) +
                       (1.0 - p) *
                           kron(qubit_state(e2), qubit_state(-0.9 * u)));
}

inline DensityMatrix perturbed_discord_B_state(Rng& rng,
                                               double tilt = M_PI / 4) {
  const Vec3 e = rng.unit_vector();
  const double p = 0.3 + 0.4 * rng.uniform();
  Vec3 axis = e.cross(rng.unit_vector());
  while (axis.norm() < 1e-6) axis = e.cross(rng.unit_vector());
  const Vec3 e2 = rotation_about(axis.normalized(), tilt) * (-e);
  const Vec3 u = rng.unit_vector();
  return DensityMatrix(p * kron(qubit_state(0.9 * u), qubit_state(e)) +
                       (1.0 - p) *
                           kron(qubit_state(-0.9 * u), qubit_state(e2)));
}

// Random state drawn from the mixed-rank ensemble (ranks 1-4 cycling).
inline DensityMatrix random_mixed_rank(Rng& rng, int index) {
  return random_density(1 + (index % 4), rng);
}

// Random states with degenerate steering ellipsoids mixed in, for exercising
// every branch of rank-dependent code.
inline DensityMatrix random_all_shapes(Rng& rng, int index) {
  switch (index % 6) {
    case 0:
      return needle_state(0.3 + 0.4 * rng.uniform(), rng.ball_vector(),
                          rng.ball_vector(), rng.unit_vector());
    case 1:
      return pancake_state(rng);
    default:
      return random_density(1 + (index % 4), rng);
  }
}

inline double max_abs_diff(const Mat4c& x, const Mat4c& y) {
  return (x - y).cwiseAbs().maxCoeff();
}

}  // namespace qse::test
