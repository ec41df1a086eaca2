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
#ifndef RELAX_EXPM_HPP
#define RELAX_EXPM_HPP

#include <Eigen/Dense>

namespace relax {

// Dense matrix exponential by scaling-and-squaring with diagonal Pade
// approximants (orders 3/5/7/9/13 selected from the 1-norm).
Eigen::MatrixXd expm(const Eigen::MatrixXd& m);
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m);

}  // namespace relax

#endif  // RELAX_EXPM_HPP
