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
#include "qse/discord.hpp"
#include "qse/ellipsoid.hpp"
#include "qse/json_io.hpp"

using namespace qse;

TEST_SUITE_BEGIN("ellipsoid");

TEST_CASE("Werner states give centered spheres") {
  for (double p : {0.2, 0.5, 0.9}) {
    const SteeringEllipsoid e =
        ellipsoid_A(to_theta(DensityMatrix(test::werner(p))));
    CHECK(e.center.cwiseAbs().maxCoeff() < 1e-12);
    for (int i = 0; i < 3; ++i)
      CHECK(e.semiaxes[i] == doctest::Approx(p).epsilon(1e-10));
    CHECK(e.dimension == 3);
  }
}

TEST_CASE("skew family geometry") {
  for (double angle : {0.0, 0.7, M_PI / 2}) {
    const SteeringEllipsoid e =
        ellipsoid_A(to_theta(theta_family(angle)));
    CHECK((e.center - Vec3(0, 0, 0.5)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(e.semiaxes[0] == doctest::Approx(0.45).epsilon(1e-10));
    CHECK(e.semiaxes[1] == doctest::Approx(0.30).epsilon(1e-10));
    CHECK(e.semiaxes[2] == doctest::Approx(0.30).epsilon(1e-10));
  }
}

TEST_CASE("full-rank T can still give a degenerate ellipsoid") {
  Mat4 th = Mat4::Zero();
  th(0, 0) = 1.0;
  const Vec3 v(1.0 / 3, 1.0 / 3, 1.0 / 3);
  th.block<3, 1>(1, 0) = v;
  th.block<1, 3>(0, 1) = v.transpose();
  th.block<3, 3>(1, 1) = (1.0 / 3) * Mat3::Identity();
  const SteeringEllipsoid e = ellipsoid_A(ThetaMatrix(th));
  CHECK(e.dimension == 2);

  // replacing T33 with 0 gives an obese state
  th(3, 3) = 0.0;
  const SteeringEllipsoid e2 = ellipsoid_A(ThetaMatrix(th));
  CHECK(e2.dimension == 3);
  CHECK(is_obese(e2));
}

TEST_CASE("product states collapse to a point") {
  const Vec3 a(0.3, -0.1, 0.2);
  const SteeringEllipsoid e =
      ellipsoid_A(to_theta(test::product_state(a, Vec3(0, 0, 1))));
  CHECK(e.dimension == 0);
  CHECK((e.center - a).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(e.semiaxes.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("both parties see the same dimension") {
  Rng rng(111);
  for (int trial = 0; trial < 500; ++trial) {
    const DensityMatrix rho = test::random_all_shapes(rng, trial);
    const ThetaMatrix th = to_theta(rho);
    CHECK(ellipsoid_A(th).dimension == ellipsoid_B(th).dimension);
  }
  // symmetric states have identical ellipsoids on both sides
  const ThetaMatrix w = to_theta(DensityMatrix(test::werner(0.6)));
  const SteeringEllipsoid ea = ellipsoid_A(w), eb = ellipsoid_B(w);
  CHECK((ea.center - eb.center).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((ea.semiaxes - eb.semiaxes).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dimension equals rank(Theta) - 1 for every constructed rank") {
  Rng rng(113);
  // rank 1: product
  for (int trial = 0; trial < 50; ++trial) {
    const ThetaMatrix th = to_theta(
        test::product_state(rng.ball_vector(), rng.ball_vector()));
    CHECK(th.rank() == 1);
    CHECK(ellipsoid_A(th).dimension == 0);
  }
  // rank 2: needles
  for (int trial = 0; trial < 50; ++trial) {
    Vec3 r0 = rng.ball_vector(), r1 = rng.ball_vector();
    if ((r0 - r1).norm() < 0.2) continue;
    const ThetaMatrix th = to_theta(test::needle_state(
        0.3 + 0.4 * rng.uniform(), r0, r1, rng.unit_vector()));
    CHECK(th.rank() == 2);
    CHECK(ellipsoid_A(th).dimension == 1);
  }
  // rank 3: pancakes
  for (int trial = 0; trial < 50; ++trial) {
    const ThetaMatrix th = to_theta(test::pancake_state(rng));
    CHECK(th.rank() == 3);
    CHECK(ellipsoid_A(th).dimension == 2);
  }
  // rank 4: generic
  for (int trial = 0; trial < 50; ++trial) {
    const ThetaMatrix th = to_theta(random_density(4, rng));
    CHECK(th.rank() == 4);
    CHECK(ellipsoid_A(th).dimension == 3);
  }
}

TEST_CASE("containment in the Bloch ball") {
  Rng rng(127);
  double worst = 0.0;
  for (int trial = 0; trial < 2000; ++trial) {
    const DensityMatrix rho = test::random_all_shapes(rng, trial);
    worst = std::max(worst, max_radius(ellipsoid_A(to_theta(rho))));
  }
  CHECK(worst <= 1.0 + 1e-8);
}

TEST_CASE("volume formulas agree") {
  // unit-sphere ellipsoid of a pure entangled state
  CHECK(volume_from_ellipsoid(
            ellipsoid_A(to_theta(DensityMatrix(test::bell_phi_plus())))) ==
        doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-10));

  // Werner radius 1/3
  const DensityMatrix w13(test::werner(1.0 / 3.0));
  CHECK(volume_from_ellipsoid(ellipsoid_A(to_theta(w13))) ==
        doctest::Approx(4.0 * M_PI / 81.0).epsilon(1e-10));
  CHECK(volume_from_rho(w13) ==
        doctest::Approx(4.0 * M_PI / 81.0).epsilon(1e-10));

  // degenerate shapes have zero volume
  Rng rng(131);
  CHECK(volume_from_ellipsoid(ellipsoid_A(to_theta(test::needle_state(
            0.5, Vec3(0, 0, 0.7), Vec3(0, 0, -0.4), Vec3(1, 0, 0))))) <
        1e-20);

  // maximally mixed
  CHECK(volume_from_rho(DensityMatrix(0.25 * Mat4c::Identity())) < 1e-14);

  // Werner p via both routes
  for (double p : {0.2, 0.5, 0.8}) {
    const DensityMatrix rho(test::werner(p));
    const double v_q = volume_from_ellipsoid(ellipsoid_A(to_theta(rho)));
    const double v_rho = volume_from_rho(rho);
    CHECK(v_q == doctest::Approx((4.0 * M_PI / 3.0) * p * p * p).epsilon(1e-10));
    CHECK(std::abs(v_rho - v_q) / v_q < 1e-10);
  }
}

TEST_CASE("volume cross-check on random states") {
  Rng rng(137);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const DensityMatrix rho = test::random_mixed_rank(rng, trial);
    const double v_q = volume_from_ellipsoid(ellipsoid_A(to_theta(rho)));
    const double v_rho = volume_from_rho(rho);
    worst = std::max(worst, std::abs(v_rho - v_q) / std::max(v_q, 1e-12));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("volume ratio identity") {
  // a = b = 0: equal volumes
  CHECK(volume_ratio_check(to_theta(DensityMatrix(test::werner(0.7)))) <
        1e-10);
  Rng rng(139);
  double worst = 0.0;
  for (int trial = 0; trial < 2000; ++trial) {
    const ThetaMatrix th = to_theta(random_density(4, rng));
    worst = std::max(worst, volume_ratio_check(th));
    // one volume nonzero implies the other nonzero
    const double va = volume_from_ellipsoid(ellipsoid_A(th));
    const double vb = volume_from_ellipsoid(ellipsoid_B(th));
    if (va > 1e-9) CHECK(vb > 0.0);
    if (vb > 1e-9) CHECK(va > 0.0);
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("obesity") {
  CHECK(is_obese(ellipsoid_A(to_theta(DensityMatrix(test::werner(0.9))))));
  CHECK_FALSE(is_obese(ellipsoid_A(to_theta(test::cc_state()))));
  Rng rng(149);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho = random_density(4, rng);
    if (is_entangled_ppt(rho)) {
      CHECK(is_obese(ellipsoid_A(to_theta(rho))));
    }
  }
}

TEST_CASE("boost invariance of the ellipsoid") {
  Rng rng(151);
  for (int trial = 0; trial < 300; ++trial) {
    const ThetaMatrix th = to_theta(random_density(4, rng));
    const SteeringEllipsoid e1 = ellipsoid_A(th);
    const SteeringEllipsoid e2 = ellipsoid_A(canonical_state(th));
    CHECK((e1.center - e2.center).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((e1.semiaxes - e2.semiaxes).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("geometry export schema") {
  const SteeringEllipsoid e =
      ellipsoid_A(to_theta(DensityMatrix(test::werner(0.5))));
  const std::string j = to_json(e);
  CHECK(j.find("\"axes\":[") != std::string::npos);
  CHECK(j.find("\"center\":[") != std::string::npos);
  CHECK(j.find("\"dimension\":3") != std::string::npos);
  CHECK(j.find("\"semiaxes\":[0.5") != std::string::npos);
  // byte-identical on repeat
  CHECK(to_json(e) == j);
}

TEST_SUITE_END();
