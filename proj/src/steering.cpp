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

#include "qse/steering.hpp"

#include <algorithm>
#include <cmath>

#include "qse/random.hpp"

namespace qse {

namespace {

constexpr int kMaxPovmElements = 16;
constexpr double kCond3Threshold = 1e-6;
constexpr double kCond4Threshold = 1e-7;
constexpr double kCond6Threshold = 1e-7;

std::vector<Vec3> span_directions(const SteeringEllipsoid& e, int count) {
  std::vector<Vec3> dirs;
  switch (e.dimension) {
    case 0:
      break;
    case 1:
      dirs.push_back(e.axes.col(0));
      dirs.push_back(-e.axes.col(0));
      break;
    case 2:
      for (int i = 0; i < count; ++i) {
        const double phi = 2.0 * M_PI * i / count;
        dirs.push_back(std::cos(phi) * e.axes.col(0) +
                       std::sin(phi) * e.axes.col(1));
      }
      break;
    default:
      // Fibonacci sphere.
      for (int i = 0; i < count; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = i * M_PI * (3.0 - std::sqrt(5.0));
        dirs.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
      }
      break;
  }
  return dirs;
}

}  // namespace

Povm::Povm(std::vector<MinkowskiVector> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty() || elements_.size() > kMaxPovmElements) {
    throw Error("POVM must have between 1 and 16 elements");
  }
  Vec4 sum = Vec4::Zero();
  for (const auto& e : elements_) {
    if (!is_positive(e)) {
      throw NotPositive("POVM element outside the forward light cone");
    }
    sum += e.vec();
  }
  const double dev = (sum - Vec4(2, 0, 0, 0)).cwiseAbs().maxCoeff();
  if (dev > 1e-10) {
    throw Error("POVM elements sum deviates from identity by " +
                std::to_string(dev));
  }
}

SteeringOutcome steer(const ThetaMatrix& theta,
                      const MinkowskiVector& element) {
  if (!is_positive(element)) {
    throw NotPositive("steering element outside the forward light cone");
  }
  const Vec4 y = 0.5 * theta.matrix() * element.vec();
  SteeringOutcome out;
  out.probability = y[0];
  if (y[0] > 1e-12) {
    out.bloch = Vec3(y[1], y[2], y[3]) / y[0];
  } else {
    out.zero_probability = true;
  }
  return out;
}

CompleteSteeringReport complete_steering_check(const ThetaMatrix& theta) {
  const Vec3 b = theta.b();
  if (b.norm() >= 1.0 - tol::product_branch || theta.rank() <= 1) {
    throw ProductState("complete steering is undefined for product states");
  }

  CompleteSteeringReport r;

  // Kernel condition: (1,0,0,0) orthogonal to ker(Theta).
  Eigen::JacobiSVD<Mat4> svd(theta.matrix(), Eigen::ComputeFullV);
  double overlap2 = 0.0;
  for (int j = 0; j < 4; ++j) {
    if (svd.singularValues()[j] <= tol::theta_rank) {
      const double c = svd.matrixV()(0, j);
      overlap2 += c * c;
    }
  }
  r.q6 = std::sqrt(overlap2);
  r.cond6 = r.q6 < kCond6Threshold;

  // Bloch condition: a on the surface of E_A scaled down by b. The
  // quadratic-form defect is square-rooted so the margin is linear in the
  // kernel component of b, on the same scale as the other conditions.
  const SteeringEllipsoid ea = ellipsoid_A(theta);
  const Membership m = membership(ea, theta.a());
  r.q3 = std::max(std::sqrt(std::abs(m.quadratic - b.squaredNorm())),
                  m.off_span);
  r.cond3 = r.q3 < kCond3Threshold;

  // Span condition: affine span of E_B contains the origin.
  const SteeringEllipsoid eb = ellipsoid_B(theta);
  Vec3 off = eb.center;
  for (int i = 0; i < 3; ++i) {
    if (eb.semiaxes[i] > tol::semiaxis_rank) {
      off -= eb.axes.col(i).dot(eb.center) * eb.axes.col(i);
    }
  }
  r.q4 = off.norm();
  r.cond4 = r.q4 < kCond4Threshold;

  r.complete = r.cond6;

  if (r.cond3 != r.cond6 || r.cond4 != r.cond6) {
    // Tolerate disagreement only when some margin sits near its threshold.
    auto ambiguous = [](double q, double t) { return q > t / 50 && q < t * 50; };
    if (!ambiguous(r.q3, kCond3Threshold) && !ambiguous(r.q4, kCond4Threshold) &&
        !ambiguous(r.q6, kCond6Threshold)) {
      throw InternalInconsistency(
          "complete-steering conditions disagree: q3=" + std::to_string(r.q3) +
          " q4=" + std::to_string(r.q4) + " q6=" + std::to_string(r.q6));
    }
  }
  return r;
}

SteerPlan steer_to_decomposition(const ThetaMatrix& theta,
                                 const std::vector<WeightedTarget>& targets) {
  if (targets.empty() || targets.size() > kMaxPovmElements) {
    throw BadDecomposition("between 1 and 16 targets required");
  }
  double wsum = 0.0;
  Vec3 mean = Vec3::Zero();
  for (const auto& t : targets) {
    if (t.weight < -1e-12) throw BadDecomposition("negative weight");
    wsum += t.weight;
    mean += t.weight * t.bloch;
  }
  if (std::abs(wsum - 1.0) > 1e-9) {
    throw BadDecomposition("weights sum to " + std::to_string(wsum));
  }
  const Vec3 a = theta.a();
  const Vec3 b = theta.b();
  if ((mean - a).norm() > 1e-9) {
    throw BadDecomposition("targets do not average to a");
  }

  SteerPlan plan;

  if (b.norm() >= 1.0 - tol::product_branch) {
    // Product state: the ellipsoid is the single point a.
    for (const auto& t : targets) {
      if (t.weight > 1e-12 && (t.bloch - a).norm() > 1e-8) {
        throw BadDecomposition("target leaves the point ellipsoid");
      }
    }
    plan.povm = Povm({MinkowskiVector{2.0, Vec3::Zero()}});
    return plan;
  }

  const CanonicalBlocks blocks = canonical_blocks(theta);
  const Svd3 svd = svd3(blocks.t_prime);

  // Minimal-norm preimages of the targets under T' (components in the row
  // space of T' only).
  std::vector<double> weights;
  std::vector<Vec3> preimages;
  for (const auto& t : targets) {
    if (t.weight <= 1e-12) continue;
    const Vec3 d = t.bloch - blocks.a_prime;
    Vec3 c = Vec3::Zero();
    for (int i = 0; i < 3; ++i) {
      if (svd.singular_values[i] > tol::theta_rank) {
        c += (svd.u.col(i).dot(d) / svd.singular_values[i]) * svd.v.col(i);
      }
    }
    if ((blocks.t_prime * c - d).norm() > 1e-7) {
      throw BadDecomposition("target lies outside the ellipsoid span");
    }
    const double cn = c.norm();
    if (cn > 1.0 + 1e-7) {
      throw BadDecomposition("target lies outside the ellipsoid");
    }
    if (cn > 1.0) c /= cn;
    weights.push_back(t.weight);
    preimages.push_back(c);
  }

  // Kernel component of b and the capacity available to match it.
  Vec3 b_row = Vec3::Zero();
  for (int i = 0; i < 3; ++i) {
    if (svd.singular_values[i] > tol::theta_rank) {
      b_row += svd.v.col(i).dot(b) * svd.v.col(i);
    }
  }
  const Vec3 b_ker = b - b_row;
  const double need = b_ker.norm();
  double capacity = 0.0;
  for (size_t i = 0; i < weights.size(); ++i) {
    capacity +=
        weights[i] * std::sqrt(std::max(0.0, 1.0 - preimages[i].squaredNorm()));
  }
  if (capacity + 1e-12 < need) {
    plan.unreachable_reason =
        "kernel condition fails: the ensemble needs kernel weight " +
        std::to_string(need) + " but the targets admit only " +
        std::to_string(capacity);
    return plan;
  }

  // Distribute the exact row-space mismatch so the POVM sums to identity to
  // machine precision.
  Vec3 csum = Vec3::Zero();
  for (size_t i = 0; i < weights.size(); ++i) csum += weights[i] * preimages[i];
  const Vec3 correction = b_row - csum;
  const double b2 = b.squaredNorm();
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  const Mat4 lb = boost(b).matrix();
  std::vector<MinkowskiVector> elements;
  for (size_t i = 0; i < weights.size(); ++i) {
    Vec3 x = preimages[i] + correction;
    if (need > 1e-15) {
      const double mi =
          std::sqrt(std::max(0.0, 1.0 - preimages[i].squaredNorm()));
      x += (mi * need / capacity) * (b_ker / need);
    }
    const double xn = x.norm();
    if (xn > 1.0) x /= xn;  // guard against rounding outside the cone
    const Vec4 el = gamma * lb * (2.0 * weights[i] * Vec4(1, x[0], x[1], x[2]));
    elements.push_back(MinkowskiVector::from_vec(el));
  }
  plan.povm = Povm(std::move(elements));
  return plan;
}

HullReport mc_hull_oracle(const ThetaMatrix& theta, int n,
                          std::uint64_t seed) {
  if (n < 10) throw Error("at least 10 samples required");
  const SteeringEllipsoid e = ellipsoid_A(theta);

  Rng rng(seed);
  std::vector<Vec3> points;
  points.reserve(n);
  HullReport report;
  for (int i = 0; i < n; ++i) {
    const MinkowskiVector el{1.0, rng.unit_vector()};
    const SteeringOutcome out = steer(theta, el);
    if (out.zero_probability) continue;
    const Membership m = membership(e, out.bloch);
    report.max_violation = std::max(
        report.max_violation, std::max(m.quadratic - 1.0, m.off_span));
    points.push_back(out.bloch);
  }

  double gap = 0.0;
  for (const Vec3& dir : span_directions(e, 256)) {
    double reach = -1e300;
    for (const Vec3& p : points) reach = std::max(reach, dir.dot(p));
    gap = std::max(gap, support(e, dir) - reach);
  }
  report.min_coverage_gap = std::max(gap, 0.0);
  return report;
}

}  // namespace qse
