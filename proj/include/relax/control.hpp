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
#ifndef RELAX_CONTROL_HPP
#define RELAX_CONTROL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "relax/lindblad.hpp"

namespace relax {

// Control directions and amplitudes.  H_c = sum_a u_a G_a.
//
// Amplitude convention: named generators ("X1", "Z2", ...) are spin
// operators sigma/2, so u_a is the precession angular frequency about
// that axis.  This matches the Bloch-equation form of the adjoint
// matrix A (unit coefficients in u).
struct ControlSpec {
  std::vector<ComplexMatrix> generators;
  Eigen::VectorXd u;
};

// Spin operator sigma_axis/2 acting on `site` (1-based) of n_qubits.
ComplexMatrix local_spin_generator(char axis, int site, int n_qubits);

// Parses "X1", "Y2", "Z1"...  axis in {X, Y, Z}, site 1..n_qubits.
ComplexMatrix named_generator(const std::string& name, int n_qubits);

// All 3n local spin generators, in order X1 Y1 Z1 X2 Y2 Z2 ...
std::vector<ComplexMatrix> local_generators(int n_qubits);

// Full su(N) control set: each Pauli-string basis element divided by 2.
std::vector<ComplexMatrix> full_generators(int n_qubits);

ComplexMatrix control_hamiltonian(const ControlSpec& ctrl);

struct SynthesisResult {
  Eigen::VectorXd u;
  double residual = 0.0;  // ||(A(u)+B) r* + c||
  FixedPointResult achieved_fixed_point;
  bool stabilizable = false;  // residual < kSynthesisResidualTol
};

inline constexpr double kSynthesisResidualTol = 1e-8;

// Fixed point of the semigroup with H = H_drift + sum u_a G_a.
FixedPointResult stabilized_fixed_point(const LindbladModel& model,
                                        const ControlSpec& ctrl,
                                        BasisPtr basis);

// Minimum-norm least-squares amplitudes making `target` the fixed point.
// Exact because A(u) is linear in u.
SynthesisResult synthesize_controller(const LindbladModel& model,
                                      const std::vector<ComplexMatrix>& gens,
                                      const CoherenceVector& target,
                                      BasisPtr basis);

// Closed-form one-spin amplitudes (u_x, u_y) steering the damped spin to
// Bloch target (x, y, z) on the stabilizable ellipsoid:
//   u_x = -gamma2 y / z,  u_y = gamma2 x / z.
std::pair<double, double> one_spin_controller(double x, double y, double z,
                                              double gamma1, double gamma2);

// Numerical rank of the Jacobian of u -> r_f(u) at u0 (central
// differences, step 1e-5; singular values above 1e-6 * sigma_max count).
int manifold_dimension(const LindbladModel& model,
                       const std::vector<ComplexMatrix>& gens,
                       const Eigen::VectorXd& u0, BasisPtr basis);

struct ManifoldSample {
  std::vector<FixedPointResult> points;
  std::vector<Eigen::VectorXd> amplitudes;
  int skipped = 0;  // non-relaxing draws
};

// Deterministic uniform draws of u in [-scale, scale]^|gens|.
ManifoldSample sample_manifold(const LindbladModel& model,
                               const std::vector<ComplexMatrix>& gens,
                               int n_samples, double amplitude_scale,
                               std::uint64_t seed, BasisPtr basis);

}  // namespace relax

#endif  // RELAX_CONTROL_HPP
