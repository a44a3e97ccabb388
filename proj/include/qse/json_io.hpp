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

#include <string>

#include "qse/classify.hpp"
#include "qse/ellipsoid.hpp"
#include "qse/qstate.hpp"
#include "qse/reconstruct.hpp"
#include "qse/separability.hpp"
#include "qse/steering.hpp"

namespace qse {

/// Parses a state from either {"rho": 4x4 of [re, im]} or
/// {"a": [3], "b": [3], "T": 3x3}. Throws InvalidState or NotPhysical with a
/// message naming the violated invariant.
DensityMatrix parse_state_json(const std::string& text);

/// Parses {"Q": 3x3, "c": [3], "a": [3], "b": [3]}.
GeometricData parse_geometry_json(const std::string& text);

// Serialization with sorted keys and floats printed at 17 significant
// digits; identical values produce byte-identical text.
std::string to_json(const SteeringEllipsoid& e);
std::string to_json(const ProductDecomposition& d, double residual);
std::string to_json(const ClassificationReport& r);
std::string to_json(const SteeringOutcome& o);
std::string state_to_json(const DensityMatrix& rho);

std::string format_double(double x);

}  // namespace qse
