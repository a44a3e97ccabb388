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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qse/classify.hpp"
#include "qse/discord.hpp"
#include "qse/ellipsoid.hpp"
#include "qse/json_io.hpp"
#include "qse/lorentz.hpp"
#include "qse/qstate.hpp"
#include "qse/reconstruct.hpp"
#include "qse/separability.hpp"
#include "qse/steering.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAnalysis = 1;
constexpr int kExitInput = 2;
constexpr int kExitSearchBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qse::InvalidState("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  out << text << "\n";
}

qse::DensityMatrix load_state(const std::string& path) {
  return qse::parse_state_json(read_file(path));
}

struct VerifyStats {
  int failures = 0;
  void report(const std::string& name, bool pass, double residual) {
    std::cout << (pass ? "PASS" : "FAIL") << " " << name
              << " residual=" << qse::format_double(residual) << "\n";
    if (!pass) ++failures;
  }
};

int run_verify(const std::vector<qse::DensityMatrix>& states,
               std::uint64_t seed) {
  using namespace qse;
  VerifyStats stats;
  double hull_violation = 0.0;
  double criterion_disagreements = 0.0;
  double volume_rel = 0.0, volume_ratio = 0.0;
  double det_residual = 0.0;
  double theorem_disagreements = 0.0;
  double roundtrip_geo = 0.0, roundtrip_gauge = 0.0;

  int idx = 0;
  for (const auto& rho : states) {
    const ThetaMatrix theta = to_theta(rho);
    const bool product = theta.b().norm() >= 1.0 - tol::product_branch ||
                         theta.rank() <= 1;

    const HullReport hull = mc_hull_oracle(theta, 2000, seed + 17 * idx);
    hull_violation = std::max(hull_violation, hull.max_violation);

    const bool ppt = is_entangled_ppt(rho);
    const SteeringData data = steering_data_A(theta);
    const double value = entanglement_criterion_value(data.center, data.q);
    if (std::abs(value) >= 1e-9 && (value < 0.0) != ppt) {
      criterion_disagreements += 1.0;
    }

    const double va = volume_from_ellipsoid(ellipsoid_A(theta));
    const double va_rho = volume_from_rho(rho);
    volume_rel = std::max(
        volume_rel, std::abs(va_rho - va) / std::max(va, 1e-12));
    volume_ratio = std::max(volume_ratio, volume_ratio_check(theta));

    det_residual =
        std::max(det_residual, det_reshuffle_identity_check(rho.matrix()));

    if (!product) {
      const CompleteSteeringReport cs = complete_steering_check(theta);
      if (cs.cond3 != cs.cond6 || cs.cond4 != cs.cond6) {
        theorem_disagreements += 1.0;
      }
    }

    const GeometricData g = extract_geometry(rho);
    const DensityMatrix rebuilt = reconstruct_state(g);
    roundtrip_geo =
        std::max(roundtrip_geo, geometry_distance(g, extract_geometry(rebuilt)));
    roundtrip_gauge =
        std::max(roundtrip_gauge, bob_gauge_residual(rho, rebuilt));
    ++idx;
  }

  stats.report("mc_hull", hull_violation < 1e-6, hull_violation);
  stats.report("criterion_vs_ppt", criterion_disagreements == 0.0,
               criterion_disagreements);
  stats.report("volume_cross_check", volume_rel < 1e-6, volume_rel);
  stats.report("volume_ratio_identity", volume_ratio < 1e-8, volume_ratio);
  stats.report("det_reshuffle_identity", det_residual < 1e-9, det_residual);
  stats.report("steering_theorem", theorem_disagreements == 0.0,
               theorem_disagreements);
  stats.report("reconstruction_roundtrip",
               roundtrip_geo < 1e-8 && roundtrip_gauge < 1e-8,
               std::max(roundtrip_geo, roundtrip_gauge));
  return stats.failures == 0 ? kExitOk : kExitAnalysis;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum steering ellipsoids for two-qubit states"};
  app.require_subcommand(1);

  std::string input, out;
  std::uint64_t seed = 0;
  double tol_override = 0.0;
  app.add_option("--input", input, "input file")->configurable(false);
  app.add_option("--seed", seed, "random seed");
  app.add_option("--out", out, "output file (default: stdout)");
  app.add_option("--tol", tol_override,
                 "override the rank/decision tolerance");

  auto* cmd_classify = app.add_subcommand("classify", "full state report");
  auto* cmd_ellipsoid =
      app.add_subcommand("ellipsoid", "steering ellipsoid geometry");
  std::string party = "A";
  cmd_ellipsoid->add_option("--party", party, "A, B, or both");
  auto* cmd_verify = app.add_subcommand("verify", "run the oracle suite");
  int random_count = 0;
  int random_rank = 4;
  cmd_verify->add_option("--random", random_count,
                         "verify this many random states");
  cmd_verify->add_option("--rank", random_rank, "rank of random states");
  auto* cmd_decompose =
      app.add_subcommand("decompose", "separable product decomposition");
  auto* cmd_reconstruct =
      app.add_subcommand("reconstruct", "state from geometric data");
  auto* cmd_scan =
      app.add_subcommand("scan-theta", "concurrence/discord/volume scan");
  int steps = 32;
  cmd_scan->add_option("--steps", steps, "grid points")->check(CLI::Range(2, 100000));
  auto* cmd_steer = app.add_subcommand("steer", "apply a measurement element");
  std::vector<double> axis, element;
  cmd_steer->add_option("--axis", axis, "projector axis x,y,z")->delimiter(',');
  cmd_steer->add_option("--element", element, "element x0,x1,x2,x3")
      ->delimiter(',');

  // Move the common options onto every subcommand so they can follow it.
  for (auto* sub : {cmd_classify, cmd_ellipsoid, cmd_verify, cmd_decompose,
                    cmd_reconstruct, cmd_scan, cmd_steer}) {
    sub->add_option("--input", input, "input file");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--out", out, "output file (default: stdout)");
    sub->add_option("--tol", tol_override, "override the rank tolerance");
  }

  CLI11_PARSE(app, argc, argv);

  const double rank_tol =
      tol_override > 0.0 ? tol_override : qse::tol::semiaxis_rank;

  try {
    if (cmd_classify->parsed()) {
      qse::DensityMatrix rho = load_state(input);
      try {
        write_output(out, qse::to_json(qse::classify(rho, rank_tol)));
      } catch (const qse::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
      }
      return kExitOk;
    }

    if (cmd_ellipsoid->parsed()) {
      qse::DensityMatrix rho = load_state(input);
      const qse::ThetaMatrix theta = qse::to_theta(rho);
      std::string text;
      if (party == "both") {
        text = "{\"A\":" + qse::to_json(qse::ellipsoid_A(theta, rank_tol)) +
               ",\"B\":" + qse::to_json(qse::ellipsoid_B(theta, rank_tol)) +
               "}";
      } else if (party == "B") {
        text = qse::to_json(qse::ellipsoid_B(theta, rank_tol));
      } else {
        text = qse::to_json(qse::ellipsoid_A(theta, rank_tol));
      }
      write_output(out, text);
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      std::vector<qse::DensityMatrix> states;
      if (random_count > 0) {
        qse::Rng rng(seed);
        for (int i = 0; i < random_count; ++i) {
          states.push_back(qse::random_density(random_rank, rng));
        }
      } else {
        states.push_back(load_state(input));
      }
      return run_verify(states, seed);
    }

    if (cmd_decompose->parsed()) {
      qse::DensityMatrix rho = load_state(input);
      try {
        qse::SimplexSearchOptions options;
        options.seed = seed;
        const qse::ProductDecomposition d =
            qse::decompose_separable(qse::to_theta(rho), std::nullopt, options);
        const double residual =
            (qse::assemble(d).matrix() - rho.matrix()).cwiseAbs().maxCoeff();
        write_output(out, qse::to_json(d, residual));
        return kExitOk;
      } catch (const qse::SimplexNotFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSearchBudget;
      } catch (const qse::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
      }
    }

    if (cmd_reconstruct->parsed()) {
      const qse::GeometricData g = qse::parse_geometry_json(read_file(input));
      try {
        write_output(out, qse::state_to_json(qse::reconstruct_state(g)));
        return kExitOk;
      } catch (const qse::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
      }
    }

    if (cmd_scan->parsed()) {
      std::string csv = "theta,concurrence,discord,volume\n";
      for (int i = 0; i < steps; ++i) {
        const double angle = 0.5 * M_PI * i / (steps - 1);
        const qse::DensityMatrix rho = qse::theta_family(angle);
        const double c = qse::concurrence(rho);
        const double d = qse::discord_numeric(rho, qse::MeasuredParty::B);
        const double v = qse::volume_from_ellipsoid(
            qse::ellipsoid_A(qse::to_theta(rho)));
        csv += qse::format_double(angle) + "," + qse::format_double(c) + "," +
               qse::format_double(d) + "," + qse::format_double(v) + "\n";
      }
      if (out.empty()) {
        std::cout << csv;
      } else {
        std::ofstream f(out);
        f << csv;
      }
      return kExitOk;
    }

    if (cmd_steer->parsed()) {
      qse::DensityMatrix rho = load_state(input);
      qse::MinkowskiVector el;
      if (!element.empty()) {
        if (element.size() != 4) {
          std::cerr << "error: --element needs 4 components\n";
          return kExitInput;
        }
        el = qse::MinkowskiVector::from_vec(
            qse::Vec4(element[0], element[1], element[2], element[3]));
      } else if (!axis.empty()) {
        if (axis.size() != 3) {
          std::cerr << "error: --axis needs 3 components\n";
          return kExitInput;
        }
        qse::Vec3 v(axis[0], axis[1], axis[2]);
        if (v.norm() < 1e-12) {
          std::cerr << "error: --axis must be nonzero\n";
          return kExitInput;
        }
        el = qse::MinkowskiVector{1.0, v.normalized()};
      } else {
        std::cerr << "error: steer needs --axis or --element\n";
        return kExitInput;
      }
      if (!qse::is_positive(el)) {
        std::cerr << "error: element outside the forward light cone\n";
        return kExitInput;
      }
      write_output(out, qse::to_json(qse::steer(qse::to_theta(rho), el)));
      return kExitOk;
    }
  } catch (const qse::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
