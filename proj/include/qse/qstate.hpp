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
#include "qse/numerics.hpp"
#include "qse/random.hpp"
#include "qse/types.hpp"

namespace qse {

/// Two-qubit density matrix in the product basis |00>, |01>, |10>, |11>,
/// with the first (left) factor belonging to Alice. Construction validates
/// Hermiticity, unit trace, and positivity.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Mat4c& m, double psd_tol = tol::psd_construct);

  const Mat4c& matrix() const { return m_; }

  Mat2c reduced_A() const;
  Mat2c reduced_B() const;
  Vec3 bloch_A() const { return bloch_of(reduced_A()); }
  Vec3 bloch_B() const { return bloch_of(reduced_B()); }

  double purity() const { return (m_ * m_).trace().real(); }

 private:
  Mat4c m_;
};

/// Pauli-basis representation of a two-qubit state: the 4x4 real matrix with
/// block form (1, b^T; a, T) where a and b are the local Bloch vectors and T
/// is the correlation matrix. Theta_00 must equal 1.
class ThetaMatrix {
 public:
  explicit ThetaMatrix(const Mat4& m);

  const Mat4& matrix() const { return m_; }

  Vec3 a() const { return m_.block<3, 1>(1, 0); }
  Vec3 b() const { return m_.block<1, 3>(0, 1).transpose(); }
  Mat3 correlation() const { return m_.block<3, 3>(1, 1); }

  /// Swaps the roles of the two parties (transposition of the matrix).
  ThetaMatrix transposed() const { return ThetaMatrix(m_.transpose()); }

  /// Numerical rank with singular-value cutoff.
  int rank(double cutoff = tol::theta_rank) const;

 private:
  Mat4 m_;
};

/// Theta_{mu nu} = tr(rho sigma_mu x sigma_nu).
ThetaMatrix to_theta(const DensityMatrix& rho);

/// rho = (1/4) sum Theta_{mu nu} sigma_mu x sigma_nu. Throws NotPhysical if
/// the assembled matrix has an eigenvalue below -1e-8.
DensityMatrix from_theta(const ThetaMatrix& theta);

/// Transpose of Bob's indices. Trace and Hermiticity are preserved.
Mat4Herm partial_transpose_B(const DensityMatrix& rho);
Mat4c partial_transpose_B(const Mat4c& m);

/// Index shuffle (ij;kl) -> (ik;jl); an involution.
Mat4c reshuffle(const Mat4c& m);

/// The fixed unitary relating the Pauli expansion to the reshuffled density
/// matrix: Theta = 2 Y rho^R Y^T.
const Mat4c& upsilon();

/// |det M - det M^TB + det((M^TB)^R)| — zero for every 4x4 matrix.
double det_reshuffle_identity_check(const Mat4c& m);

/// Ginibre-induced random state of the given rank (partial trace of a pure
/// state on a 4 x rank environment). Deterministic for a fixed rng state.
DensityMatrix random_density(int rank, Rng& rng);

}  // namespace qse
