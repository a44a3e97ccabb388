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
#include "qse/types.hpp"

namespace qse {

/// Real symmetric 3x3 matrix, stored as its lower triangle so symmetry is
/// exact by construction.
class Mat3Sym {
 public:
  Mat3Sym() : d_{} {}

  /// Symmetrizes m as (m + m^T)/2.
  static Mat3Sym from(const Mat3& m);
  /// The Gram product m m^T, symmetric by construction.
  static Mat3Sym gram(const Mat3& m);
  static Mat3Sym diagonal(const Vec3& d);
  /// r q r^T for symmetric q.
  static Mat3Sym congruence(const Mat3& r, const Mat3Sym& q);

  double operator()(int i, int j) const {
    return d_[i >= j ? index(i, j) : index(j, i)];
  }
  double& at(int i, int j) { return d_[i >= j ? index(i, j) : index(j, i)]; }

  Mat3 full() const;
  double trace() const { return d_[0] + d_[2] + d_[5]; }

 private:
  static int index(int i, int j) { return i * (i + 1) / 2 + j; }
  // Row-major lower triangle: (0,0) (1,0) (1,1) (2,0) (2,1) (2,2).
  double d_[6];
};

/// 4x4 complex matrix validated Hermitian at construction.
class Mat4Herm {
 public:
  explicit Mat4Herm(const Mat4c& m, double tolerance = tol::hermitian);
  const Mat4c& matrix() const { return m_; }

 private:
  Mat4c m_;
};

struct EigSym3 {
  Vec3 values;   // descending
  Mat3 vectors;  // orthonormal columns, vectors.col(i) pairs with values[i]
};

struct Svd3 {
  Mat3 u;
  Vec3 singular_values;  // non-negative, descending
  Mat3 v;
};

/// Eigendecomposition of a symmetric 3x3 matrix. Eigenvalues descend; each
/// eigenvector's first component of magnitude above 1e-12 is made positive,
/// which pins the frame for reproducible output.
EigSym3 eig_sym3(const Mat3Sym& m);

/// PSD square root. Eigenvalues in [-1e-10, 0) are clamped to zero; anything
/// lower throws NotPsd.
Mat3Sym sqrt_psd(const Mat3Sym& m);
Mat2c sqrt_psd(const Mat2c& m);

/// Full SVD of a general real 3x3 matrix, singular values descending. The
/// columns of u carry the same sign convention as eig_sym3 (v is flipped in
/// tandem so u diag(s) v^T still reconstructs m).
Svd3 svd3(const Mat3& m);

/// Eigenvalues of a 4x4 Hermitian matrix, descending.
Vec4 eig_herm4(const Mat4Herm& m);

}  // namespace qse
