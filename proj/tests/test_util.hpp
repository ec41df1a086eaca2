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
#ifndef RELAX_TESTS_TEST_UTIL_HPP
#define RELAX_TESTS_TEST_UTIL_HPP

#include <random>

#include "relax/lindblad.hpp"
#include "relax/operators.hpp"

namespace relax::testutil {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * x;
}

inline ComplexMatrix random_hermitian(int n, std::mt19937_64& rng,
                                      double scale = 1.0) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = std::complex<double>(uniform(rng, -scale, scale),
                                     uniform(rng, -scale, scale));
  return (m + m.adjoint()) / 2.0;
}

// Random density matrix via a Wishart-like construction G G^dag / Tr.
inline ComplexMatrix random_density(int n, std::mt19937_64& rng) {
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = std::complex<double>(uniform(rng, -1, 1),
                                     uniform(rng, -1, 1));
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

// Haar-ish random unitary from QR of a random complex matrix.
inline ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = std::complex<double>(uniform(rng, -1, 1),
                                     uniform(rng, -1, 1));
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  return qr.householderQ();
}

// Random normalized two-qubit pure state.
inline Eigen::VectorXcd random_pure_state(std::mt19937_64& rng) {
  Eigen::VectorXcd psi(4);
  for (int i = 0; i < 4; ++i)
    psi(i) = std::complex<double>(uniform(rng, -1, 1), uniform(rng, -1, 1));
  return psi / psi.norm();
}

// Damping model with every qubit relaxing toward |up| at a random rate,
// plus random dephasing.  Relaxing by construction.
inline LindbladModel random_damping_model(int n_qubits,
                                          std::mt19937_64& rng) {
  const int dim = 1 << n_qubits;
  LindbladModel model;
  model.dim = dim;
  model.hamiltonian = ComplexMatrix::Zero(dim, dim);
  const ComplexMatrix sp = raising_operator();
  for (int s = 0; s < n_qubits; ++s) {
    ComplexMatrix l = ComplexMatrix::Identity(1, 1);
    ComplexMatrix d = ComplexMatrix::Identity(1, 1);
    for (int q = 0; q < n_qubits; ++q) {
      l = kron(l, q == s ? sp : pauli_identity());
      d = kron(d, q == s ? pauli_z() : pauli_identity());
    }
    model.dissipators.push_back(std::sqrt(uniform(rng, 0.2, 2.0)) * l);
    model.dissipators.push_back(std::sqrt(uniform(rng, 0.05, 0.5)) * d);
  }
  return model;
}

}  // namespace relax::testutil

#endif  // RELAX_TESTS_TEST_UTIL_HPP
