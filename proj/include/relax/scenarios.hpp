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
#ifndef RELAX_SCENARIOS_HPP
#define RELAX_SCENARIOS_HPP

#include <string>
#include <vector>

#include "relax/control.hpp"
#include "relax/entanglement.hpp"
#include "relax/lindblad.hpp"

namespace relax {

// One spin damping to |up> with longitudinal rate gamma1 = 1/T1 and
// transverse rate gamma2 = 1/T2.
struct OneSpinParams {
  double gamma1 = 1.0;
  double gamma2 = 1.0;
};

// Two identically damped spins coupled by H = J Z1 Z2.
struct TwoSpinParams {
  double gamma = 1.0;
  double coupling = 0.0;  // J
};

// Periodic pulse exp(-i H_c dt) alternating with free relaxation over dt.
struct PulseTrain {
  std::vector<ComplexMatrix> generators;
  Eigen::VectorXd u;
  double dt = 0.0;
};

// Bloch relaxation model: B = diag(-g2, -g2, -g1), c = (0, 0, g1).
// Requires gamma2 >= gamma1/2 so the dephasing amplitude is real.
LindbladModel one_spin_model(const OneSpinParams& p);

// 4-level model; uncontrolled fixed point is |up up>.
LindbladModel two_spin_model(const TwoSpinParams& p);

// Local control (4 sqrt(J)/5) X_i - J Z_i on both spins; its fixed point
// approaches the half-Bell mixture as J grows.
ControlSpec magic_control(double coupling);

// rho_e = (|up up><up up| + |psi+><psi+|) / 2, the large-J limit state.
ComplexMatrix bell_fixed_state();

// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2.
double uhlmann_fidelity(const ComplexMatrix& a, const ComplexMatrix& b);

struct EntanglementSweepRow {
  double coupling = 0.0;  // J
  double eof = 0.0;
  double fidelity = 0.0;  // to bell_fixed_state()
  bool ok = false;
  std::string error;
};

// Fixed-point entanglement of the magic-controlled two-spin model per J.
// Solver failures flag the row; the sweep continues.
std::vector<EntanglementSweepRow> entanglement_vs_J(
    double gamma, const std::vector<double>& j_values);

// Exact fixed point of the period map r -> R (M r + v): pulse rotation R
// after one free-relaxation step (M, v).  Solves (I - R M) r = R v.
CoherenceVector pulsed_steady_state(const LindbladModel& model,
                                    const PulseTrain& train);

}  // namespace relax

#endif  // RELAX_SCENARIOS_HPP
