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
#ifndef RELAX_LINDBLAD_HPP
#define RELAX_LINDBLAD_HPP

#include <utility>
#include <vector>

#include "relax/operators.hpp"

namespace relax {

// Spectral-abscissa tolerance separating relaxing from non-relaxing.
inline constexpr double kRelaxingAbscissaTol = 1e-10;
// Condition number beyond which the fixed-point solve is rejected.
inline constexpr double kConditionLimit = 1e12;

// Drift Hamiltonian plus dissipator list; defines the semigroup.
// H is in angular-frequency units, L_k in sqrt-of-rate units.
struct LindbladModel {
  int dim = 0;
  ComplexMatrix hamiltonian;
  std::vector<ComplexMatrix> dissipators;
};

// rho' = -i[H, rho] applied to m.
ComplexMatrix hamiltonian_action(const ComplexMatrix& h,
                                 const ComplexMatrix& m);

// Dissipative part: sum_k L_k m L_k^dag - (1/2){L_k^dag L_k, m}.
ComplexMatrix dissipative_action(const std::vector<ComplexMatrix>& ls,
                                 const ComplexMatrix& m);

// Affine coherence-vector ODE dr/dt = (A + B) r + c over a fixed basis.
// A is the skew-symmetric Hamiltonian part; B, c the dissipative part.
struct CoherenceRep {
  BasisPtr basis;
  Eigen::MatrixXd hamiltonian_part;  // A
  Eigen::MatrixXd dissipative_part;  // B
  Eigen::VectorXd affine_part;       // c

  Eigen::MatrixXd generator() const {
    return hamiltonian_part + dissipative_part;
  }
};

struct RelaxingDiagnostics {
  bool relaxing = false;
  double spectral_abscissa = 0.0;  // max Re eigenvalue of A + B
  double condition_number = 0.0;
  Eigen::VectorXcd spectrum;
};

struct FixedPointResult {
  CoherenceVector r_f;
  ComplexMatrix rho_f;
  Eigen::VectorXcd spectrum;
  double condition_number = 0.0;
  bool relaxing = false;
};

// Projects the Lindblad generator onto the basis:
//   A_ab = Re Tr(P_a (-i[H, P_b])) / N
//   B_ab = Re Tr(P_a D(P_b)) / N,   c_a = Re Tr(P_a D(1)) / N
CoherenceRep build_affine(const LindbladModel& model, BasisPtr basis);

// True iff every eigenvalue of A + B has real part < -tolerance.
RelaxingDiagnostics is_relaxing(const CoherenceRep& rep);

// Solves (A + B) r_f = -c.  Throws NotRelaxingError when the system is
// ill-conditioned beyond kConditionLimit.
FixedPointResult fixed_point(const CoherenceRep& rep);

// Closed-form propagation r(t) = e^{(A+B)t}(r0 - r_f) + r_f.  Falls back
// to exponentiating the augmented affine block matrix when not relaxing.
CoherenceVector propagate(const CoherenceRep& rep, const CoherenceVector& r0,
                          double t);

// Affine map (M, v) with r(dt) = M r(0) + v; one free-evolution step.
struct AffineMap {
  Eigen::MatrixXd linear;
  Eigen::VectorXd offset;
};
AffineMap affine_propagator(const CoherenceRep& rep, double dt);

// Fixed-step classical RK4 on dr/dt = (A+B)r + c; oracle for propagate.
std::vector<std::pair<double, CoherenceVector>> integrate_rk4(
    const CoherenceRep& rep, const CoherenceVector& r0, double t, double dt);

}  // namespace relax

#endif  // RELAX_LINDBLAD_HPP
