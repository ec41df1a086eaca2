/* Copyright 2026 The Relax Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef RELAX_ERRORS_HPP
#define RELAX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relax {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix/vector size mismatches and out-of-range dimensions.
struct DimensionError : Error {
  using Error::Error;
};

// Input fails to be a valid quantum state (hermiticity, trace, norm).
struct InvalidStateError : Error {
  using Error::Error;
};

// Lindblad model violates its invariants (e.g. non-Hermitian H).
struct InvalidModelError : Error {
  using Error::Error;
};

// Scalar argument outside its admissible domain (t < 0, dt <= 0, J <= 0).
struct DomainError : Error {
  using Error::Error;
};

// A + B is singular or ill-conditioned beyond the relaxing threshold.
struct NotRelaxingError : Error {
  using Error::Error;
};

// One-spin closed-form controller: target with |z| below threshold.
struct SingularTargetError : Error {
  using Error::Error;
};

// Target lies off the stabilizable manifold.
struct NotStabilizableError : Error {
  using Error::Error;
};

// Fixed-point density matrix has (near-)degenerate eigenvalues.
struct DegenerateSpectrumError : Error {
  using Error::Error;
};

// I - R*M of the stroboscopic period map is singular.
struct NoStroboscopicFixedPointError : Error {
  using Error::Error;
};

}  // namespace relax

#endif  // RELAX_ERRORS_HPP
