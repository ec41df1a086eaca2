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
#include "relax/scenarios.hpp"

#include <cmath>

#include "relax/expm.hpp"

namespace relax {

namespace {
const std::complex<double> kI(0.0, 1.0);
}

LindbladModel one_spin_model(const OneSpinParams& p) {
  if (p.gamma2 < p.gamma1 / 2.0)
    throw InvalidModelError("one_spin_model: gamma2 must be >= gamma1/2");

  LindbladModel model;
  model.dim = 2;
  model.hamiltonian = ComplexMatrix::Zero(2, 2);
  model.dissipators.push_back(std::sqrt(p.gamma1) * raising_operator());
  const double dephasing = p.gamma2 / 2.0 - p.gamma1 / 4.0;
  if (dephasing > 0.0)
    model.dissipators.push_back(std::sqrt(dephasing) * pauli_z());
  return model;
}

LindbladModel two_spin_model(const TwoSpinParams& p) {
  if (p.gamma <= 0.0)
    throw InvalidModelError("two_spin_model: gamma must be > 0");
  if (p.coupling < 0.0)
    throw InvalidModelError("two_spin_model: J must be >= 0");

  LindbladModel model;
  model.dim = 4;
  // (J/2) Z x Z so J enters the coherence-vector equations with unit
  // coefficient, same amplitude convention as the local spin generators.
  model.hamiltonian = 0.5 * p.coupling * kron(pauli_z(), pauli_z());
  const ComplexMatrix sp = raising_operator();
  model.dissipators.push_back(std::sqrt(p.gamma) *
                              kron(sp, pauli_identity()));
  model.dissipators.push_back(std::sqrt(p.gamma) *
                              kron(pauli_identity(), sp));
  return model;
}

ControlSpec magic_control(double coupling) {
  if (coupling <= 0.0) throw DomainError("magic_control: J must be > 0");
  ControlSpec ctrl;
  ctrl.generators = {local_spin_generator('X', 1, 2),
                     local_spin_generator('Z', 1, 2),
                     local_spin_generator('X', 2, 2),
                     local_spin_generator('Z', 2, 2)};
  const double transverse = 4.0 * std::sqrt(coupling) / 5.0;
  ctrl.u.resize(4);
  ctrl.u << transverse, -coupling, transverse, -coupling;
  return ctrl;
}

ComplexMatrix bell_fixed_state() {
  Eigen::VectorXcd up_up = Eigen::VectorXcd::Zero(4);
  up_up(0) = 1.0;
  Eigen::VectorXcd psi_plus = Eigen::VectorXcd::Zero(4);
  psi_plus(1) = 1.0 / std::sqrt(2.0);
  psi_plus(2) = 1.0 / std::sqrt(2.0);
  return 0.5 * up_up * up_up.adjoint() + 0.5 * psi_plus * psi_plus.adjoint();
}

double uhlmann_fidelity(const ComplexMatrix& a, const ComplexMatrix& b) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a);
  const Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  const ComplexMatrix sqrt_a = es.eigenvectors() *
                               ev.cwiseSqrt().asDiagonal() *
                               es.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> inner(sqrt_a * b * sqrt_a);
  const double trace_sqrt =
      inner.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return trace_sqrt * trace_sqrt;
}

std::vector<EntanglementSweepRow> entanglement_vs_J(
    double gamma, const std::vector<double>& j_values) {
  if (gamma <= 0.0) throw DomainError("entanglement_vs_J: gamma must be > 0");

  const BasisPtr basis = pauli_string_basis(2);
  const ComplexMatrix rho_e = bell_fixed_state();
  std::vector<EntanglementSweepRow> rows;
  rows.reserve(j_values.size());

  for (double j : j_values) {
    EntanglementSweepRow row;
    row.coupling = j;
    try {
      if (j <= 0.0) throw DomainError("J must be > 0");
      const LindbladModel model = two_spin_model({gamma, j});
      const FixedPointResult fp =
          stabilized_fixed_point(model, magic_control(j), basis);
      row.eof = entanglement_of_formation(fp.rho_f).eof;
      row.fidelity = uhlmann_fidelity(fp.rho_f, rho_e);
      row.ok = true;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

CoherenceVector pulsed_steady_state(const LindbladModel& model,
                                    const PulseTrain& train) {
  if (train.dt <= 0.0)
    throw DomainError("pulsed_steady_state: dt must be > 0");

  int n_qubits = 0;
  while ((1 << n_qubits) < model.dim) ++n_qubits;
  if ((1 << n_qubits) != model.dim)
    throw DimensionError("pulsed_steady_state: dim must be a power of two");
  const BasisPtr basis = pauli_string_basis(n_qubits);
  const CoherenceRep rep = build_affine(model, basis);
  if (!is_relaxing(rep).relaxing)
    throw NotRelaxingError("pulsed_steady_state: free evolution not relaxing");

  const AffineMap free_step = affine_propagator(rep, train.dt);

  // Adjoint rotation of the pulse unitary on the coherence vector.
  const ComplexMatrix hc = control_hamiltonian({train.generators, train.u});
  const ComplexMatrix u = expm(ComplexMatrix(-kI * hc * train.dt));
  const int m = basis->size();
  const int n = basis->dim;
  Eigen::MatrixXd rot(m, m);
  for (int b = 0; b < m; ++b) {
    const ComplexMatrix w = u * basis->elements[b] * u.adjoint();
    for (int a = 0; a < m; ++a)
      rot(a, b) = (basis->elements[a] * w).trace().real() / n;
  }

  const Eigen::MatrixXd period = Eigen::MatrixXd::Identity(m, m) -
                                 rot * free_step.linear;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(period);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > kConditionLimit)
    throw NoStroboscopicFixedPointError(
        "pulsed_steady_state: I - R M is singular");

  return period.partialPivLu().solve(rot * free_step.offset);
}

}  // namespace relax
