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

#include <doctest.h>

#include "helpers.hpp"
#include "qse/numerics.hpp"
#include "qse/qstate.hpp"
#include "qse/random.hpp"

using namespace qse;

namespace {

Mat3Sym random_symmetric(Rng& rng) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = rng.gauss();
  return Mat3Sym::from(m);
}

Mat3Sym random_psd(Rng& rng) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = rng.gauss();
  return Mat3Sym::gram(m);
}

}  // namespace

TEST_SUITE_BEGIN("numerics");

TEST_CASE("eig_sym3 identity") {
  const EigSym3 e = eig_sym3(Mat3Sym::diagonal(Vec3(1, 1, 1)));
  for (int i = 0; i < 3; ++i) CHECK(e.values[i] == doctest::Approx(1.0));
  CHECK((e.vectors.transpose() * e.vectors - Mat3::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("eig_sym3 diagonal") {
  const EigSym3 e = eig_sym3(Mat3Sym::diagonal(Vec3(4, 1, 0)));
  CHECK(e.values[0] == doctest::Approx(4.0));
  CHECK(e.values[1] == doctest::Approx(1.0));
  CHECK(e.values[2] == doctest::Approx(0.0));
  CHECK(std::abs(e.vectors(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(e.vectors(1, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(e.vectors(2, 2)) == doctest::Approx(1.0));
}

TEST_CASE("eig_sym3 reconstruction and ordering on random input") {
  Rng rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Mat3Sym m = random_symmetric(rng);
    const EigSym3 e = eig_sym3(m);
    CHECK(e.values[0] >= e.values[1]);
    CHECK(e.values[1] >= e.values[2]);
    const Mat3 rebuilt =
        e.vectors * e.values.asDiagonal() * e.vectors.transpose();
    worst = std::max(worst, (rebuilt - m.full()).cwiseAbs().maxCoeff());
    const double frame_dev =
        (e.vectors.transpose() * e.vectors - Mat3::Identity())
            .cwiseAbs()
            .maxCoeff();
    CHECK(frame_dev < 1e-12);
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("eig_sym3 eigenvector equation") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat3Sym m = random_symmetric(rng);
    const EigSym3 e = eig_sym3(m);
    for (int i = 0; i < 3; ++i) {
      const Vec3 res = m.full() * e.vectors.col(i) - e.values[i] * e.vectors.col(i);
      CHECK(res.cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("eig_sym3 sign convention is deterministic") {
  Rng rng(3);
  const Mat3Sym m = random_symmetric(rng);
  const EigSym3 e1 = eig_sym3(m);
  const EigSym3 e2 = eig_sym3(m);
  CHECK((e1.vectors - e2.vectors).cwiseAbs().maxCoeff() == 0.0);
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < 3; ++r) {
      if (std::abs(e1.vectors(r, c)) > 1e-12) {
        CHECK(e1.vectors(r, c) > 0.0);
        break;
      }
    }
  }
}

TEST_CASE("sqrt_psd identity and diagonal") {
  const Mat3Sym r1 = sqrt_psd(Mat3Sym::diagonal(Vec3(1, 1, 1)));
  CHECK((r1.full() - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  const Mat3Sym r2 = sqrt_psd(Mat3Sym::diagonal(Vec3(4, 1, 0)));
  CHECK((r2.full() - Vec3(2, 1, 0).asDiagonal().toDenseMatrix())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("sqrt_psd squares back on random PSD input") {
  Rng rng(11);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Mat3Sym m = random_psd(rng);
    const Mat3 s = sqrt_psd(m).full();
    worst = std::max(worst, (s * s - m.full()).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("sqrt_psd clamps noise but rejects genuine negativity") {
  CHECK_NOTHROW(sqrt_psd(Mat3Sym::diagonal(Vec3(1, 1, -5e-11))));
  CHECK_THROWS_AS(sqrt_psd(Mat3Sym::diagonal(Vec3(1, 1, -1e-6))), NotPsd);
}

TEST_CASE("sqrt_psd 2x2 Hermitian") {
  Rng rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    Mat2c g;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) g(i, j) = rng.gauss_cplx();
    const Mat2c m = g * g.adjoint();
    const Mat2c s = sqrt_psd(m);
    CHECK((s * s - m).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((s - s.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("svd3 zero matrix") {
  const Svd3 s = svd3(Mat3::Zero());
  CHECK(s.singular_values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("svd3 negative diagonal") {
  Mat3 m = Vec3(-9.0 / 20, -3.0 / 10, -3.0 / 10).asDiagonal();
  const Svd3 s = svd3(m);
  CHECK(s.singular_values[0] == doctest::Approx(9.0 / 20).epsilon(1e-12));
  CHECK(s.singular_values[1] == doctest::Approx(3.0 / 10).epsilon(1e-12));
  CHECK(s.singular_values[2] == doctest::Approx(3.0 / 10).epsilon(1e-12));
}

TEST_CASE("svd3 reconstruction on random input") {
  Rng rng(17);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = rng.gauss();
    const Svd3 s = svd3(m);
    CHECK(s.singular_values[0] >= s.singular_values[1]);
    CHECK(s.singular_values[1] >= s.singular_values[2]);
    CHECK(s.singular_values[2] >= 0.0);
    const Mat3 rebuilt =
        s.u * s.singular_values.asDiagonal() * s.v.transpose();
    worst = std::max(worst, (rebuilt - m).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("eig_herm4 fixed spectra") {
  const Vec4 flat = eig_herm4(Mat4Herm(0.25 * Mat4c::Identity()));
  for (int i = 0; i < 4; ++i) CHECK(flat[i] == doctest::Approx(0.25));

  const Vec4 pure = eig_herm4(Mat4Herm(test::bell_phi_plus()));
  CHECK(pure[0] == doctest::Approx(1.0));
  CHECK(std::abs(pure[1]) < 1e-12);
  CHECK(std::abs(pure[3]) < 1e-12);

  const Vec4 pt = eig_herm4(
      Mat4Herm(partial_transpose_B(test::bell_phi_plus())));
  CHECK(pt[0] == doctest::Approx(0.5));
  CHECK(pt[1] == doctest::Approx(0.5));
  CHECK(pt[2] == doctest::Approx(0.5));
  CHECK(pt[3] == doctest::Approx(-0.5));
}

TEST_CASE("eig_herm4 characteristic polynomial and trace oracles") {
  Rng rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    Mat4c g;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) g(i, j) = rng.gauss_cplx();
    const Mat4Herm h(Mat4c(0.5 * (g + g.adjoint())));
    const Vec4 ev = eig_herm4(h);
    CHECK(std::abs(ev.sum() - h.matrix().trace().real()) < 1e-10);
    for (int i = 0; i < 4; ++i) {
      const Mat4c shifted = h.matrix() - ev[i] * Mat4c::Identity();
      CHECK(std::abs(shifted.determinant()) < 1e-9);
    }
  }
}

TEST_CASE("Mat4Herm rejects asymmetric input") {
  Mat4c m = Mat4c::Identity();
  m(0, 1) = cplx(0.0, 1e-6);
  CHECK_THROWS_AS(Mat4Herm{m}, NotHermitian);
}

TEST_SUITE_END();
