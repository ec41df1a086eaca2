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
#include "relax/operators.hpp"

#include <array>
#include <cmath>

namespace relax {

namespace {
const std::complex<double> kI(0.0, 1.0);
}

ComplexMatrix pauli_identity() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix raising_operator() { return (pauli_x() + kI * pauli_y()) / 2.0; }

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int keep, int d1,
                            int d2) {
  if (rho.rows() != rho.cols() || rho.rows() != d1 * d2)
    throw DimensionError("partial_trace: rho must be (d1*d2) x (d1*d2)");
  if (keep != 0 && keep != 1)
    throw DimensionError("partial_trace: keep must be 0 or 1");

  if (keep == 0) {
    ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d1; ++j)
        for (int k = 0; k < d2; ++k) out(i, j) += rho(i * d2 + k, j * d2 + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (int i = 0; i < d2; ++i)
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d1; ++k) out(i, j) += rho(k * d2 + i, k * d2 + j);
  return out;
}

BasisPtr pauli_string_basis(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 5)
    throw DimensionError("pauli_string_basis: n_qubits must be in [1, 5]");

  const std::array<ComplexMatrix, 4> site = {pauli_identity(), pauli_x(),
                                             pauli_y(), pauli_z()};
  const char* site_label = "1XYZ";

  auto basis = std::make_shared<OperatorBasis>();
  basis->n_qubits = n_qubits;
  basis->dim = 1 << n_qubits;

  const int n_strings = 1;
  int total = n_strings;
  for (int i = 0; i < n_qubits; ++i) total *= 4;

  // Lexicographic enumeration of per-site indices, identity string skipped.
  for (int code = 1; code < total; ++code) {
    ComplexMatrix m = ComplexMatrix::Identity(1, 1);
    std::string label;
    int rem = code;
    int div = total / 4;
    for (int s = 0; s < n_qubits; ++s) {
      const int idx = rem / div;
      rem %= div;
      div /= 4;
      m = kron(m, site[idx]);
      label += site_label[idx];
    }
    basis->elements.push_back(std::move(m));
    basis->labels.push_back(std::move(label));
  }
  return basis;
}

ComplexMatrix density_from_coherence(const CoherenceVector& r,
                                     const OperatorBasis& basis) {
  if (r.size() != basis.size())
    throw DimensionError("density_from_coherence: length mismatch");
  const int n = basis.dim;
  ComplexMatrix rho = ComplexMatrix::Identity(n, n);
  for (int a = 0; a < basis.size(); ++a) rho += r[a] * basis.elements[a];
  return rho / static_cast<double>(n);
}

CoherenceVector coherence_from_density(const ComplexMatrix& rho,
                                       const OperatorBasis& basis) {
  if (rho.rows() != basis.dim || rho.cols() != basis.dim)
    throw DimensionError("coherence_from_density: dimension mismatch");
  if (!is_hermitian(rho, 1e-10))
    throw InvalidStateError("coherence_from_density: rho not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 ||
      std::abs(rho.trace().imag()) > 1e-10)
    throw InvalidStateError("coherence_from_density: trace != 1");

  CoherenceVector r(basis.size());
  for (int a = 0; a < basis.size(); ++a)
    r[a] = (basis.elements[a] * rho).trace().real();
  return r;
}

}  // namespace relax
