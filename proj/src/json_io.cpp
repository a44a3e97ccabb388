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

#include "qse/json_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace qse {

namespace {

using nlohmann::json;

Vec3 parse_vec3(const json& j, const char* name) {
  if (!j.is_array() || j.size() != 3) {
    throw InvalidState(std::string(name) + " must be a 3-vector");
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Mat3 parse_mat3(const json& j, const char* name) {
  if (!j.is_array() || j.size() != 3) {
    throw InvalidState(std::string(name) + " must be a 3x3 array");
  }
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3) {
      throw InvalidState(std::string(name) + " must be a 3x3 array");
    }
    for (int k = 0; k < 3; ++k) m(i, k) = j[i][k].get<double>();
  }
  return m;
}

std::string vec3_json(const Vec3& v) {
  return "[" + format_double(v[0]) + "," + format_double(v[1]) + "," +
         format_double(v[2]) + "]";
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

DensityMatrix parse_state_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidState(std::string("malformed JSON: ") + e.what());
  }
  if (j.contains("rho")) {
    const json& r = j["rho"];
    if (!r.is_array() || r.size() != 4) {
      throw InvalidState("rho must be a 4x4 array of [re, im] pairs");
    }
    Mat4c m;
    for (int i = 0; i < 4; ++i) {
      if (!r[i].is_array() || r[i].size() != 4) {
        throw InvalidState("rho must be a 4x4 array of [re, im] pairs");
      }
      for (int k = 0; k < 4; ++k) {
        const json& cell = r[i][k];
        if (!cell.is_array() || cell.size() != 2) {
          throw InvalidState("rho entries must be [re, im] pairs");
        }
        m(i, k) = cplx(cell[0].get<double>(), cell[1].get<double>());
      }
    }
    return DensityMatrix(m);
  }
  if (j.contains("a") && j.contains("b") && j.contains("T")) {
    Mat4 theta = Mat4::Zero();
    theta(0, 0) = 1.0;
    theta.block<3, 1>(1, 0) = parse_vec3(j["a"], "a");
    theta.block<1, 3>(0, 1) = parse_vec3(j["b"], "b").transpose();
    theta.block<3, 3>(1, 1) = parse_mat3(j["T"], "T");
    return from_theta(ThetaMatrix(theta));
  }
  throw InvalidState("state file needs either \"rho\" or \"a\"/\"b\"/\"T\"");
}

GeometricData parse_geometry_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidState(std::string("malformed JSON: ") + e.what());
  }
  if (!j.contains("Q") || !j.contains("c") || !j.contains("a") ||
      !j.contains("b")) {
    throw InvalidState("geometry file needs \"Q\", \"c\", \"a\", \"b\"");
  }
  GeometricData g;
  g.q = Mat3Sym::from(parse_mat3(j["Q"], "Q"));
  g.c = parse_vec3(j["c"], "c");
  g.a = parse_vec3(j["a"], "a");
  g.b = parse_vec3(j["b"], "b");
  validate(g);
  return g;
}

std::string to_json(const SteeringEllipsoid& e) {
  std::string axes = "[";
  for (int c = 0; c < 3; ++c) {  // column-major
    for (int r = 0; r < 3; ++r) {
      axes += format_double(e.axes(r, c));
      if (c != 2 || r != 2) axes += ",";
    }
  }
  axes += "]";
  return "{\"axes\":" + axes + ",\"center\":" + vec3_json(e.center) +
         ",\"dimension\":" + std::to_string(e.dimension) +
         ",\"semiaxes\":" + vec3_json(e.semiaxes) + "}";
}

std::string to_json(const ProductDecomposition& d, double residual) {
  std::string out = "{\"residual\":" + format_double(residual) +
                    ",\"terms\":[";
  for (size_t i = 0; i < d.terms.size(); ++i) {
    const auto& t = d.terms[i];
    out += "{\"alice_bloch\":" + vec3_json(t.alice) +
           ",\"bob_bloch\":" + vec3_json(t.bob) +
           ",\"p\":" + format_double(t.weight) + "}";
    if (i + 1 != d.terms.size()) out += ",";
  }
  return out + "]}";
}

std::string to_json(const ClassificationReport& r) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::string out = "{";
  out += "\"center\":" + vec3_json(r.center);
  out += ",\"complete_steering\":" + std::string(flag(r.complete_steering));
  out += ",\"dimension\":" + std::to_string(r.dimension);
  out += ",\"entangled\":" + std::string(flag(r.entangled));
  out += ",\"obese\":" + std::string(flag(r.obese));
  out += ",\"semiaxes\":" + vec3_json(r.semiaxes);
  out += ",\"shape\":\"" + r.shape + "\"";
  out += ",\"volume_A\":" + format_double(r.volume_A);
  out += ",\"volume_B\":" + format_double(r.volume_B);
  out += ",\"zero_discord_A\":" + std::string(flag(r.zero_discord_A));
  out += ",\"zero_discord_B\":" + std::string(flag(r.zero_discord_B));
  return out + "}";
}

std::string to_json(const SteeringOutcome& o) {
  return "{\"bloch\":" + vec3_json(o.bloch) +
         ",\"probability\":" + format_double(o.probability) +
         ",\"zero_probability\":" +
         (o.zero_probability ? "true" : "false") + "}";
}

std::string state_to_json(const DensityMatrix& rho) {
  std::string out = "{\"rho\":[";
  for (int i = 0; i < 4; ++i) {
    out += "[";
    for (int k = 0; k < 4; ++k) {
      out += "[" + format_double(rho.matrix()(i, k).real()) + "," +
             format_double(rho.matrix()(i, k).imag()) + "]";
      if (k != 3) out += ",";
    }
    out += "]";
    if (i != 3) out += ",";
  }
  return out + "]}";
}

}  // namespace qse
