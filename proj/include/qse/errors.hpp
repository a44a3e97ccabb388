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

#include <stdexcept>
#include <string>

namespace qse {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matrix expected to be Hermitian is not, beyond tolerance.
struct NotHermitian : Error { using Error::Error; };
// A matrix expected PSD has an eigenvalue below the clamp threshold.
struct NotPsd : Error { using Error::Error; };
// Input violates a density-matrix invariant (trace, hermiticity, positivity).
struct InvalidState : Error { using Error::Error; };
// A Pauli expansion does not correspond to any quantum state.
struct NotPhysical : Error { using Error::Error; };
// Boost velocity at or beyond the speed of light.
struct Superluminal : Error { using Error::Error; };
// Operation undefined for (near-)product states.
struct ProductState : Error { using Error::Error; };
// A filter matrix is singular.
struct SingularMatrix : Error { using Error::Error; };
// A measurement element lies outside the forward light cone.
struct NotPositive : Error { using Error::Error; };
// Two routes that must agree analytically disagree beyond tolerance.
struct InternalInconsistency : Error { using Error::Error; };
// Separability-only operation applied to an entangled state.
struct NotSeparable : Error { using Error::Error; };
// The tangent-simplex search exhausted its budget.
struct SimplexNotFound : Error { using Error::Error; };
// A requested ensemble does not average to a or leaves the ellipsoid.
struct BadDecomposition : Error { using Error::Error; };
// A simplex fails the tangency preconditions.
struct NotTangent : Error { using Error::Error; };
// A rotation between vectors of different lengths was requested.
struct LengthMismatch : Error { using Error::Error; };
// Geometric data admits no compatible state.
struct Incompatible : Error { using Error::Error; };

}  // namespace qse
