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
#ifndef RELAX_OPERATORS_HPP
#define RELAX_OPERATORS_HPP

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "relax/errors.hpp"

namespace relax {

using ComplexMatrix = Eigen::MatrixXcd;
using CoherenceVector = Eigen::VectorXd;

// Single-qubit Pauli matrices.
ComplexMatrix pauli_identity();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Raising operator (X + iY)/2 = |up><down|, damping target |up>.
ComplexMatrix raising_operator();

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);

// Tensor product, dim(out) = dim(a) * dim(b).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced density matrix of subsystem `keep` (0 or 1) of a bipartite
// d1 x d2 system.  Trace preserving.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int keep, int d1, int d2);

// Ordered traceless Hermitian Pauli-string basis for n qubits.
//
// Elements are all n-fold tensor products of {1, X, Y, Z} except the
// all-identity string, in lexicographic per-site order (1=0, X=1, Y=2,
// Z=3).  Unnormalized: Tr(P_a P_b) = N delta_ab with N = 2^n.
struct OperatorBasis {
  int n_qubits = 0;
  int dim = 0;  // N = 2^n
  std::vector<ComplexMatrix> elements;
  std::vector<std::string> labels;  // e.g. "X", "ZZ", "1Y"

  int size() const { return static_cast<int>(elements.size()); }
};

using BasisPtr = std::shared_ptr<const OperatorBasis>;

// Builds the basis for 1 <= n_qubits <= 5 (dense-matrix cap).
BasisPtr pauli_string_basis(int n_qubits);

// rho = (1 + sum_a r_a P_a) / N.  Does not reject non-positive rho.
ComplexMatrix density_from_coherence(const CoherenceVector& r,
                                     const OperatorBasis& basis);

// r_a = Re Tr(P_a rho).  Requires rho Hermitian with unit trace.
CoherenceVector coherence_from_density(const ComplexMatrix& rho,
                                       const OperatorBasis& basis);

}  // namespace relax

#endif  // RELAX_OPERATORS_HPP
