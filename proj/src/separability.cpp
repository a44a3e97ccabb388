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

#include "qse/separability.hpp"

#include <algorithm>
#include <cmath>

#include "qse/optimize.hpp"
#include "qse/random.hpp"

namespace qse {

namespace {

// Direction in which the ellipsoid surface comes closest to the Bloch-sphere
// boundary; the natural place to anchor the first tangent facet.
Vec3 binding_direction(const SteeringEllipsoid& e) {
  Vec3 best_dir = Vec3::UnitZ();
  double best = -1e300;
  for (int i = 0; i < 64; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / 64;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = i * M_PI * (3.0 - std::sqrt(5.0));
    Vec3 n(r * std::cos(phi), r * std::sin(phi), z);
    const Mat3 m =
        e.axes * e.semiaxes.cwiseAbs2().asDiagonal() * e.axes.transpose();
    for (int it = 0; it < 20; ++it) {
      const double dn =
          (e.semiaxes.asDiagonal() * (e.axes.transpose() * n)).norm();
      Vec3 g = e.center;
      if (dn > 1e-15) g += m * n / dn;
      if (g.norm() < 1e-15) break;
      n = g.normalized();
    }
    const double s = support(e, n);
    if (s > best) {
      best = s;
      best_dir = n;
    }
  }
  return best_dir;
}

Mat3 rotation_taking(const Vec3& from, const Vec3& to) {
  const Vec3 axis = from.cross(to);
  const double s = axis.norm();
  const double c = from.dot(to);
  if (s < 1e-12) {
    if (c > 0) return Mat3::Identity();
    // antiparallel: rotate half-turn about any perpendicular
    Vec3 p = from.cross(Vec3::UnitX());
    if (p.norm() < 1e-6) p = from.cross(Vec3::UnitY());
    return rotation_about(p.normalized(), M_PI);
  }
  return rotation_about(axis / s, std::atan2(s, c));
}

const Vec3 kRegularTetra[4] = {
    Vec3(1, 1, 1).normalized(), Vec3(1, -1, -1).normalized(),
    Vec3(-1, 1, -1).normalized(), Vec3(-1, -1, 1).normalized()};

// Vertices of the tetrahedron whose facet planes are tangent to the unit
// sphere with outward unit normals u_i; vertex i is opposite facet i.
bool tetra_vertices(const std::array<Vec3, 4>& u, std::array<Vec3, 4>* out) {
  // reject configurations that do not surround the origin
  Mat4 span;
  for (int i = 0; i < 4; ++i) {
    span.block<3, 1>(0, i) = u[i];
    span(3, i) = 1.0;
  }
  const Vec4 lambda = span.fullPivLu().solve(Vec4(0, 0, 0, 1));
  for (int i = 0; i < 4; ++i)
    if (lambda[i] < 1e-9) return false;
  for (int i = 0; i < 4; ++i) {
    Mat3 a;
    int r = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      a.row(r++) = u[j].transpose();
    }
    if (std::abs(a.determinant()) < 1e-9) return false;
    (*out)[i] = a.fullPivLu().solve(Vec3::Ones());
  }
  return true;
}

// Triangle circumscribing the unit circle with tangency angles phi (sorted):
// vertex i sits between tangency i and i+1.
bool triangle_vertices(const std::array<double, 3>& phi,
                       std::array<Eigen::Vector2d, 3>* out) {
  for (int i = 0; i < 3; ++i) {
    const double pj = phi[(i + 1) % 3] + (i == 2 ? 2.0 * M_PI : 0.0);
    const double half = 0.5 * (pj - phi[i]);
    if (half <= 1e-9 || half >= M_PI / 2 - 1e-9) return false;
    const double mid = 0.5 * (pj + phi[i]);
    (*out)[i] =
        Eigen::Vector2d(std::cos(mid), std::sin(mid)) / std::cos(half);
  }
  return true;
}

struct CanonicalFrame {
  Vec3 center;
  Mat3 t;       // canonical correlation matrix
  Svd3 svd;     // of t
  int dimension = 0;
};

CanonicalFrame canonical_frame(const ThetaMatrix& theta) {
  CanonicalFrame f;
  const CanonicalBlocks blocks = canonical_blocks(theta);
  f.center = blocks.a_prime;
  f.t = blocks.t_prime;
  f.svd = svd3(blocks.t_prime);
  for (int i = 0; i < 3; ++i)
    if (f.svd.singular_values[i] > tol::semiaxis_rank) ++f.dimension;
  return f;
}

// Product terms of the canonical state from a tangent simplex given as unit
// outward normals in normalized coordinates, with pure Bob states solved by
// orthogonal Procrustes.
struct CanonicalTerms {
  std::vector<double> weights;
  std::vector<Vec3> alice;
  std::vector<Vec3> bob;
};

CanonicalTerms terms_from_normals(const CanonicalFrame& f,
                                  const std::vector<Vec3>& normals,
                                  const std::vector<Vec3>& vertices_bloch) {
  const int n = static_cast<int>(normals.size());
  // weights: barycentric coordinates of the center
  Eigen::MatrixXd lhs(4, n);
  for (int i = 0; i < n; ++i) {
    lhs.block<3, 1>(0, i) = vertices_bloch[i];
    lhs(3, i) = 1.0;
  }
  Vec4 rhs;
  rhs << f.center, 1.0;
  const Eigen::VectorXd p = lhs.colPivHouseholderQr().solve(rhs);
  if ((lhs * p - rhs).norm() > 1e-8) {
    throw InternalInconsistency("center has no barycentric representation");
  }
  for (int i = 0; i < n; ++i) {
    if (p[i] < -1e-9) {
      throw InternalInconsistency("negative barycentric weight");
    }
  }
  // Bob directions: solve sum_i p_i r_i v_i^T = t with v_i = -W^T u_i.
  Mat3 g = Mat3::Zero();
  for (int i = 0; i < n; ++i) {
    g -= p[i] * vertices_bloch[i] * normals[i].transpose();
  }
  const Eigen::JacobiSVD<Mat3> svd(g.transpose() * f.t,
                                   Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Mat3 w = svd.matrixU() * svd.matrixV().transpose();
  const double resid = (g * w - f.t).cwiseAbs().maxCoeff();
  if (resid > 1e-8) {
    throw InternalInconsistency("simplex does not reproduce the correlation "
                                "matrix: residual " + std::to_string(resid));
  }
  CanonicalTerms out;
  for (int i = 0; i < n; ++i) {
    out.weights.push_back(std::max(p[i], 0.0));
    out.alice.push_back(vertices_bloch[i]);
    Vec3 v = -(w.transpose() * normals[i]);
    if (v.norm() > 1.0) v /= v.norm();
    out.bob.push_back(v);
  }
  return out;
}

// Conjugate the canonical Bob states back through the local filter
// sqrt(2 rho_B) and renormalize the weights.
ProductDecomposition undo_filter(const CanonicalTerms& terms,
                                 const Mat2c& rho_b) {
  const Mat2c s = sqrt_psd(Mat2c(2.0 * rho_b));
  ProductDecomposition d;
  double total = 0.0;
  for (size_t i = 0; i < terms.weights.size(); ++i) {
    const Mat2c m = s * qubit_state(terms.bob[i]) * s;
    const double tau = m.trace().real();
    ProductTerm term;
    term.weight = terms.weights[i] * tau;
    term.alice = terms.alice[i];
    term.bob = bloch_of(m / tau);
    total += term.weight;
    d.terms.push_back(term);
  }
  for (auto& t : d.terms) t.weight /= total;
  return d;
}

ProductDecomposition decompose_product(const DensityMatrix& rho) {
  ProductDecomposition d;
  d.terms.push_back({1.0, rho.bloch_A(), rho.bloch_B()});
  return d;
}

ProductDecomposition decompose_needle(const CanonicalFrame& f,
                                      const Mat2c& rho_b) {
  const double s1 = f.svd.singular_values[0];
  const Vec3 axis = f.svd.u.col(0);
  CanonicalTerms terms;
  const Vec3 g = f.t.transpose() * axis / s1;
  terms.weights = {0.5, 0.5};
  terms.alice = {f.center + s1 * axis, f.center - s1 * axis};
  terms.bob = {g.normalized(), -g.normalized()};
  return undo_filter(terms, rho_b);
}

}  // namespace

DensityMatrix assemble(const ProductDecomposition& d) {
  Mat4c rho = Mat4c::Zero();
  for (const auto& t : d.terms) {
    rho += t.weight * kron(qubit_state(t.alice), qubit_state(t.bob));
  }
  return DensityMatrix(rho);
}

bool is_entangled_ppt(const DensityMatrix& rho) {
  const Mat4Herm pt = partial_transpose_B(rho);
  const double det = pt.matrix().determinant().real();
  const double min_eig = eig_herm4(pt)[3];
  const bool by_det = det < -tol::det_band;
  const bool by_eig = min_eig < -tol::eig_band;
  if (by_det != by_eig) {
    const bool det_ambiguous = std::abs(det) < 1e-10;
    const bool eig_ambiguous = std::abs(min_eig) < 1e-8;
    if (!det_ambiguous && !eig_ambiguous) {
      throw InternalInconsistency(
          "PPT determinant and eigenvalue disagree: det=" +
          std::to_string(det) + " min_eig=" + std::to_string(min_eig));
    }
  }
  return by_det;
}

double entanglement_criterion_value(const Vec3& c, const Mat3Sym& q) {
  const double c2 = c.squaredNorm();
  const EigSym3 eig = eig_sym3(q);
  double det_sqrt = 1.0;
  for (int i = 0; i < 3; ++i)
    det_sqrt *= std::sqrt(std::max(eig.values[i], 0.0));
  const Mat3 qf = q.full();
  const double tr_q = q.trace();
  const double tr_q2 = qf.cwiseAbs2().sum();
  const double h = 1.0 - 8.0 * det_sqrt + 2.0 * tr_q2 - tr_q * tr_q - 2.0 * tr_q;
  double skew = 0.0;
  if (c2 > 0.0) {
    const Vec3 n = c / std::sqrt(c2);
    skew = n.dot(qf * n);
  }
  return c2 * c2 + c2 * (1.0 - tr_q + skew) + h;
}

bool is_entangled_geometric(const Vec3& c, const Mat3Sym& q) {
  return entanglement_criterion_value(c, q) < 0.0;
}

std::pair<bool, bool> rotation_invariance_check(const Vec3& c,
                                                const Mat3Sym& q,
                                                const Mat3& rotation) {
  const bool original = is_entangled_geometric(c, q);
  const bool rotated = is_entangled_geometric(
      rotation * c, Mat3Sym::congruence(rotation, q));
  return {original, rotated};
}

ProductDecomposition decompose_separable(
    const ThetaMatrix& theta, const std::optional<TangentSimplex>& simplex,
    const SimplexSearchOptions& options) {
  const DensityMatrix rho = from_theta(theta);
  if (is_entangled_ppt(rho)) {
    throw NotSeparable("PPT criterion reports entanglement");
  }
  if (theta.b().norm() >= 1.0 - tol::product_branch || theta.rank() == 1) {
    return decompose_product(rho);
  }

  const CanonicalFrame frame = canonical_frame(theta);
  const Mat2c rho_b = rho.reduced_B();

  if (frame.dimension == 0) return decompose_product(rho);
  if (frame.dimension == 1) return decompose_needle(frame, rho_b);

  const Mat3& f_axes = frame.svd.u;
  const Vec3& s = frame.svd.singular_values;
  const SteeringEllipsoid ell = ellipsoid_from_data(steering_data_A(theta));

  auto vertex_to_bloch = [&](const Vec3& xi) -> Vec3 {
    return frame.center + f_axes * (s.asDiagonal() * xi);
  };

  if (simplex.has_value()) {
    // Outward unit normals recovered from the stated tangency points.
    const auto& sx = *simplex;
    const size_t n = sx.vertices.size();
    if (n != sx.tangency.size() ||
        n != static_cast<size_t>(frame.dimension + 1)) {
      throw NotTangent("simplex size does not match the ellipsoid dimension");
    }
    std::vector<Vec3> normals;
    for (const Vec3& t : sx.tangency) {
      Vec3 u = Vec3::Zero();
      const Vec3 d = f_axes.transpose() * (t - frame.center);
      for (int i = 0; i < 3; ++i) {
        if (s[i] > tol::semiaxis_rank) {
          u[i] = d[i] / s[i];
        } else if (std::abs(d[i]) > 1e-7) {
          throw NotTangent("tangency point off the ellipsoid span");
        }
      }
      if (std::abs(u.norm() - 1.0) > 1e-6) {
        throw NotTangent("stated point is not on the ellipsoid surface");
      }
      normals.push_back(u / u.norm());
    }
    std::vector<Vec3> verts;
    if (frame.dimension == 3) {
      std::array<Vec3, 4> u{normals[0], normals[1], normals[2], normals[3]};
      std::array<Vec3, 4> xi;
      if (!tetra_vertices(u, &xi)) {
        throw NotTangent("tangent planes do not enclose the ellipsoid");
      }
      for (const auto& x : xi) verts.push_back(vertex_to_bloch(x));
    } else {
      // tangent lines within the span plane
      for (size_t i = 0; i < 3; ++i) {
        Mat3 a = Mat3::Zero();
        a.row(0) = normals[(i + 1) % 3].transpose();
        a.row(1) = normals[(i + 2) % 3].transpose();
        a.row(2) = Vec3::UnitZ().transpose();  // off-span coordinate
        const Vec3 xi = a.colPivHouseholderQr().solve(Vec3(1, 1, 0));
        verts.push_back(vertex_to_bloch(xi));
      }
    }
    for (size_t i = 0; i < n; ++i) {
      if (verts[i].norm() > 1.0 + 1e-6 ||
          (verts[i] - sx.vertices[i]).norm() > 1e-6) {
        throw NotTangent("stated vertices do not match the tangent planes");
      }
    }
    return undo_filter(terms_from_normals(frame, normals, verts), rho_b);
  }

  // Shrink-wrap search: move tangent facets so every vertex returns to the
  // closed unit ball.
  Rng rng(options.seed);
  const Vec3 anchor = binding_direction(ell);

  if (frame.dimension == 3) {
    auto angles_to_normals = [](const Eigen::VectorXd& ang,
                                std::array<Vec3, 4>* u) {
      for (int k = 0; k < 4; ++k) {
        const double t = ang[2 * k], p = ang[2 * k + 1];
        (*u)[k] = Vec3(std::sin(t) * std::cos(p), std::sin(t) * std::sin(p),
                       std::cos(t));
      }
    };
    auto cost = [&](const Eigen::VectorXd& ang) -> double {
      std::array<Vec3, 4> u, xi;
      angles_to_normals(ang, &u);
      if (!tetra_vertices(u, &xi)) return 1e3;
      double worst = 0.0;
      for (const auto& x : xi)
        worst = std::max(worst, vertex_to_bloch(x).norm());
      return worst;
    };

    NelderMeadResult best;
    best.value = 1e300;
    for (int attempt = 0; attempt < std::max(1, options.restarts); ++attempt) {
      Mat3 rot;
      if (attempt == 0) {
        // anchor one facet normal at the binding direction; in normalized
        // coordinates that normal is the pre-image of the bound
        Vec3 u0 = Vec3::Zero();
        const Vec3 d = f_axes.transpose() * anchor;
        for (int i = 0; i < 3; ++i) u0[i] = s[i] * d[i];
        if (u0.norm() < 1e-12) u0 = Vec3::UnitZ();
        rot = rotation_taking(kRegularTetra[0], u0.normalized());
      } else {
        rot = rng.rotation();
      }
      Eigen::VectorXd ang(8);
      for (int k = 0; k < 4; ++k) {
        const Vec3 u = rot * kRegularTetra[k];
        ang[2 * k] = std::acos(std::clamp(u.z(), -1.0, 1.0));
        ang[2 * k + 1] = std::atan2(u.y(), u.x());
      }
      const NelderMeadResult r =
          nelder_mead(cost, ang, 0.25, options.iterations);
      if (r.value < best.value) best = r;
      if (best.value <= 1.0 - 1e-9) break;
    }
    if (best.value > 1.0 + 1e-9) {
      throw SimplexNotFound("tetrahedron search exhausted its budget "
                            "(worst vertex norm " +
                            std::to_string(best.value) + ")");
    }
    std::array<Vec3, 4> u, xi;
    angles_to_normals(best.x, &u);
    tetra_vertices(u, &xi);
    std::vector<Vec3> normals(u.begin(), u.end());
    std::vector<Vec3> verts;
    for (const auto& x : xi) verts.push_back(vertex_to_bloch(x));
    return undo_filter(terms_from_normals(frame, normals, verts), rho_b);
  }

  // dimension 2: triangle in the span plane
  auto wrap_sort = [](const Eigen::VectorXd& ang) -> std::array<double, 3> {
    std::array<double, 3> phi{std::fmod(ang[0], 2 * M_PI),
                              std::fmod(ang[1], 2 * M_PI),
                              std::fmod(ang[2], 2 * M_PI)};
    for (double& p : phi)
      if (p < 0) p += 2 * M_PI;
    std::sort(phi.begin(), phi.end());
    return phi;
  };
  auto cost = [&](const Eigen::VectorXd& ang) -> double {
    std::array<Eigen::Vector2d, 3> v2;
    if (!triangle_vertices(wrap_sort(ang), &v2)) return 1e3;
    double worst = 0.0;
    for (const auto& v : v2)
      worst = std::max(
          worst, vertex_to_bloch(Vec3(v.x(), v.y(), 0.0)).norm());
    return worst;
  };

  // in-plane angle of the binding direction
  const Vec3 d0 = f_axes.transpose() * anchor;
  const double phi0 = std::atan2(s[1] * d0[1], s[0] * d0[0]);
  NelderMeadResult best;
  best.value = 1e300;
  for (int attempt = 0; attempt < std::max(1, options.restarts); ++attempt) {
    const double off =
        attempt == 0 ? phi0 : rng.uniform(0.0, 2.0 * M_PI);
    Eigen::VectorXd ang(3);
    ang << off, off + 2.0 * M_PI / 3.0, off + 4.0 * M_PI / 3.0;
    const NelderMeadResult r = nelder_mead(cost, ang, 0.3, options.iterations);
    if (r.value < best.value) best = r;
    if (best.value <= 1.0 - 1e-9) break;
  }
  if (best.value > 1.0 + 1e-9) {
    throw SimplexNotFound("triangle search exhausted its budget "
                          "(worst vertex norm " +
                          std::to_string(best.value) + ")");
  }
  const std::array<double, 3> phi = wrap_sort(best.x);
  std::array<Eigen::Vector2d, 3> v2;
  triangle_vertices(phi, &v2);
  // tangency k lies between vertices k-1 and k, i.e. opposite vertex k+1
  std::vector<Vec3> normals, verts;
  for (int k = 0; k < 3; ++k) {
    normals.push_back(Vec3(std::cos(phi[k]), std::sin(phi[k]), 0.0));
    const auto& v = v2[(k + 1) % 3];
    verts.push_back(vertex_to_bloch(Vec3(v.x(), v.y(), 0.0)));
  }
  return undo_filter(terms_from_normals(frame, normals, verts), rho_b);
}

double barycentric_tangency_check(const std::vector<Vec3>& vertices,
                                  const std::vector<Vec3>& tangency) {
  const size_t n = vertices.size();
  if ((n != 3 && n != 4) || tangency.size() != n) {
    throw NotTangent("need 3 or 4 vertices with matching tangency points");
  }
  Eigen::VectorXd ratio(n);
  if (n == 4) {
    for (size_t i = 0; i < n; ++i) {
      if (std::abs(tangency[i].norm() - 1.0) > 1e-8) {
        throw NotTangent("tangency point off the unit sphere");
      }
      std::array<Vec3, 3> f;
      int r = 0;
      for (size_t j = 0; j < 4; ++j)
        if (j != i) f[r++] = vertices[j];
      const Vec3 nrm = (f[1] - f[0]).cross(f[2] - f[0]).normalized();
      const double dist = std::abs(nrm.dot(f[0]));
      if (std::abs(dist - 1.0) > 1e-6 ||
          std::abs(nrm.dot(tangency[i] - f[0])) > 1e-8) {
        throw NotTangent("facet is not tangent to the unit sphere at the "
                         "stated point");
      }
      ratio[i] = 0.5 * (f[1] - f[0]).cross(f[2] - f[0]).norm();
    }
  } else {
    // triangle tangent to the unit circle in its own plane through the origin
    const Vec3 nrm =
        (vertices[1] - vertices[0]).cross(vertices[2] - vertices[0]);
    if (nrm.norm() < 1e-12) throw NotTangent("degenerate triangle");
    const Vec3 plane = nrm.normalized();
    if (std::abs(plane.dot(vertices[0])) > 1e-8) {
      throw NotTangent("triangle plane misses the origin");
    }
    for (size_t i = 0; i < 3; ++i) {
      if (std::abs(tangency[i].norm() - 1.0) > 1e-8) {
        throw NotTangent("tangency point off the unit circle");
      }
      const Vec3& va = vertices[(i + 1) % 3];
      const Vec3& vb = vertices[(i + 2) % 3];
      const Vec3 dir = (vb - va).normalized();
      const Vec3 foot = va - va.dot(dir) * dir;
      if (std::abs(foot.norm() - 1.0) > 1e-6 ||
          (foot - tangency[i]).norm() > 1e-7) {
        throw NotTangent("edge is not tangent to the unit circle at the "
                         "stated point");
      }
      ratio[i] = (vb - va).norm();
    }
  }
  ratio /= ratio.sum();

  // direct barycentric solve of the origin
  Eigen::MatrixXd lhs(4, n);
  for (size_t i = 0; i < n; ++i) {
    lhs.block<3, 1>(0, i) = vertices[i];
    lhs(3, i) = 1.0;
  }
  const Eigen::VectorXd p =
      lhs.colPivHouseholderQr().solve(Vec4(0, 0, 0, 1));

  Vec3 sum_ratio = Vec3::Zero(), sum_solve = Vec3::Zero();
  for (size_t i = 0; i < n; ++i) {
    sum_ratio += ratio[i] * tangency[i];
    sum_solve += p[i] * tangency[i];
  }
  const double mutual = (p - ratio).cwiseAbs().maxCoeff();
  return std::max({sum_ratio.norm(), sum_solve.norm(), mutual});
}

int minimal_product_count(const ThetaMatrix& theta) {
  if (is_entangled_ppt(from_theta(theta))) {
    throw NotSeparable("minimal product count undefined for entangled states");
  }
  return theta.rank();
}

}  // namespace qse
