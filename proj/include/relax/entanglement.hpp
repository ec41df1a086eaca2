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
#ifndef RELAX_ENTANGLEMENT_HPP
#define RELAX_ENTANGLEMENT_HPP

#include <array>

#include "relax/operators.hpp"

namespace relax {

struct EntanglementReport {
  double concurrence = 0.0;  // max(0, l1 - l2 - l3 - l4)
  double eof = 0.0;          // ebits, Wootters closed form
  std::array<double, 4> spin_flip_eigenvalues{};  // descending
};

// Binary entropy in bits; h(0) = h(1) = 0.
double binary_entropy(double p);

// Entanglement entropy -Tr(rho_1 log2 rho_1) of a normalized two-qubit
// pure state.
double pure_state_entanglement(const Eigen::VectorXcd& psi);

// Wootters concurrence of a 4x4 density matrix.
double concurrence(const ComplexMatrix& rho);

EntanglementReport entanglement_of_formation(const ComplexMatrix& rho);

}  // namespace relax

#endif  // RELAX_ENTANGLEMENT_HPP
