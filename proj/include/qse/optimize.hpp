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

#include <algorithm>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace qse {

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
};

/// Derivative-free simplex minimizer. Deterministic for a given start.
inline NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& start, double step, int max_iter,
    double f_tol = 1e-14) {
  const int n = static_cast<int>(start.size());
  std::vector<Eigen::VectorXd> xs(n + 1, start);
  std::vector<double> fs(n + 1);
  for (int i = 1; i <= n; ++i) xs[i][i - 1] += step;
  int evals = 0;
  for (int i = 0; i <= n; ++i) fs[i] = (++evals, f(xs[i]));

  std::vector<int> order(n + 1);
  for (int it = 0; it < max_iter; ++it) {
    for (int i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fs[a] < fs[b]; });
    const int best = order[0], worst = order[n], second = order[n - 1];
    if (fs[worst] - fs[best] < f_tol) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += xs[i];
    centroid /= n;

    const Eigen::VectorXd refl = centroid + (centroid - xs[worst]);
    const double f_refl = (++evals, f(refl));
    if (f_refl < fs[best]) {
      const Eigen::VectorXd exp_pt = centroid + 2.0 * (centroid - xs[worst]);
      const double f_exp = (++evals, f(exp_pt));
      if (f_exp < f_refl) {
        xs[worst] = exp_pt;
        fs[worst] = f_exp;
      } else {
        xs[worst] = refl;
        fs[worst] = f_refl;
      }
    } else if (f_refl < fs[second]) {
      xs[worst] = refl;
      fs[worst] = f_refl;
    } else {
      const Eigen::VectorXd contr = centroid + 0.5 * (xs[worst] - centroid);
      const double f_contr = (++evals, f(contr));
      if (f_contr < fs[worst]) {
        xs[worst] = contr;
        fs[worst] = f_contr;
      } else {
        for (int i = 0; i <= n; ++i) {
          if (i == best) continue;
          xs[i] = xs[best] + 0.5 * (xs[i] - xs[best]);
          fs[i] = (++evals, f(xs[i]));
        }
      }
    }
  }
  NelderMeadResult out;
  int best = 0;
  for (int i = 1; i <= n; ++i)
    if (fs[i] < fs[best]) best = i;
  out.x = xs[best];
  out.value = fs[best];
  out.evaluations = evals;
  return out;
}

}  // namespace qse
