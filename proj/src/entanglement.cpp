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
#include "relax/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace relax {

namespace {

void check_two_qubit_state(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw InvalidStateError("expected a 4x4 two-qubit density matrix");
  if (!is_hermitian(rho, 1e-10))
    throw InvalidStateError("density matrix not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-10)
    throw InvalidStateError("density matrix trace != 1");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw InvalidStateError("density matrix not positive semidefinite");
}

}  // namespace

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double pure_state_entanglement(const Eigen::VectorXcd& psi) {
  if (psi.size() != 4)
    throw InvalidStateError("pure_state_entanglement: expected length 4");
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw InvalidStateError("pure_state_entanglement: state not normalized");

  const ComplexMatrix rho = psi * psi.adjoint();
  const ComplexMatrix rho1 = partial_trace(rho, 0, 2, 2);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho1);
  double e = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double p = std::clamp(es.eigenvalues()[i], 0.0, 1.0);
    if (p > 0.0) e -= p * std::log2(p);
  }
  return e;
}

double concurrence(const ComplexMatrix& rho) {
  check_two_qubit_state(rho);

  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  const ComplexMatrix rho_tilde = yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(rho * rho_tilde);

  std::array<double, 4> lambdas{};
  for (int i = 0; i < 4; ++i) {
    double ev = es.eigenvalues()[i].real();
    if (ev < 1e-12) ev = 0.0;  // rho*rho_tilde may dip slightly negative
    lambdas[static_cast<size_t>(i)] = std::sqrt(ev);
  }
  std::sort(lambdas.rbegin(), lambdas.rend());
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

EntanglementReport entanglement_of_formation(const ComplexMatrix& rho) {
  check_two_qubit_state(rho);

  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  const ComplexMatrix rho_tilde = yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(rho * rho_tilde);

  EntanglementReport report;
  for (int i = 0; i < 4; ++i) {
    double ev = es.eigenvalues()[i].real();
    if (ev < 1e-12) ev = 0.0;
    report.spin_flip_eigenvalues[static_cast<size_t>(i)] = std::sqrt(ev);
  }
  std::sort(report.spin_flip_eigenvalues.rbegin(),
            report.spin_flip_eigenvalues.rend());
  const auto& l = report.spin_flip_eigenvalues;
  report.concurrence = std::max(0.0, l[0] - l[1] - l[2] - l[3]);

  const double c = report.concurrence;
  report.eof = binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
  return report;
}

}  // namespace relax
