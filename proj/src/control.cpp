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
#include "relax/control.hpp"

#include <cmath>
#include <random>

namespace relax {

ComplexMatrix local_spin_generator(char axis, int site, int n_qubits) {
  if (site < 1 || site > n_qubits)
    throw DimensionError("local_spin_generator: site out of range");
  ComplexMatrix single;
  switch (axis) {
    case 'X': single = pauli_x(); break;
    case 'Y': single = pauli_y(); break;
    case 'Z': single = pauli_z(); break;
    default:
      throw DomainError("local_spin_generator: axis must be X, Y, or Z");
  }
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int s = 1; s <= n_qubits; ++s)
    out = kron(out, s == site ? single : pauli_identity());
  return out / 2.0;
}

ComplexMatrix named_generator(const std::string& name, int n_qubits) {
  if (name.size() < 2)
    throw DomainError("named_generator: expected e.g. \"X1\", got \"" + name +
                      "\"");
  const char axis = name[0];
  int site = 0;
  try {
    site = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw DomainError("named_generator: bad site in \"" + name + "\"");
  }
  return local_spin_generator(axis, site, n_qubits);
}

std::vector<ComplexMatrix> local_generators(int n_qubits) {
  std::vector<ComplexMatrix> gens;
  gens.reserve(3 * n_qubits);
  for (int s = 1; s <= n_qubits; ++s)
    for (char axis : {'X', 'Y', 'Z'})
      gens.push_back(local_spin_generator(axis, s, n_qubits));
  return gens;
}

std::vector<ComplexMatrix> full_generators(int n_qubits) {
  const BasisPtr basis = pauli_string_basis(n_qubits);
  std::vector<ComplexMatrix> gens;
  gens.reserve(basis->size());
  for (const auto& p : basis->elements) gens.push_back(p / 2.0);
  return gens;
}

ComplexMatrix control_hamiltonian(const ControlSpec& ctrl) {
  if (ctrl.generators.empty())
    throw DimensionError("control_hamiltonian: no generators");
  if (ctrl.u.size() != static_cast<Eigen::Index>(ctrl.generators.size()))
    throw DimensionError("control_hamiltonian: |u| != |generators|");
  ComplexMatrix h = ComplexMatrix::Zero(ctrl.generators[0].rows(),
                                        ctrl.generators[0].cols());
  for (size_t a = 0; a < ctrl.generators.size(); ++a)
    h += ctrl.u[static_cast<Eigen::Index>(a)] * ctrl.generators[a];
  return h;
}

FixedPointResult stabilized_fixed_point(const LindbladModel& model,
                                        const ControlSpec& ctrl,
                                        BasisPtr basis) {
  LindbladModel controlled = model;
  controlled.hamiltonian += control_hamiltonian(ctrl);
  return fixed_point(build_affine(controlled, std::move(basis)));
}

namespace {

// Adjoint matrix of a single generator: A^(a)_pq = Re Tr(P_p (-i[G, P_q]))/N.
Eigen::MatrixXd generator_adjoint(const ComplexMatrix& gen,
                                  const OperatorBasis& basis) {
  const int m = basis.size();
  const int n = basis.dim;
  Eigen::MatrixXd adj(m, m);
  for (int q = 0; q < m; ++q) {
    const ComplexMatrix col = hamiltonian_action(gen, basis.elements[q]);
    for (int p = 0; p < m; ++p)
      adj(p, q) = (basis.elements[p] * col).trace().real() / n;
  }
  return adj;
}

void check_purity_bound(const CoherenceVector& r, int dim) {
  if (r.squaredNorm() > dim - 1 + 1e-9)
    throw InvalidStateError("target violates the purity bound");
}

}  // namespace

SynthesisResult synthesize_controller(const LindbladModel& model,
                                      const std::vector<ComplexMatrix>& gens,
                                      const CoherenceVector& target,
                                      BasisPtr basis) {
  const int m = basis->size();
  if (target.size() != m)
    throw DimensionError("synthesize_controller: target length mismatch");
  check_purity_bound(target, basis->dim);

  const CoherenceRep drift = build_affine(model, basis);

  // (A_drift + B) target + c + sum_a u_a A^(a) target = 0, linear in u.
  const int k = static_cast<int>(gens.size());
  Eigen::MatrixXd lhs(m, k);
  for (int a = 0; a < k; ++a)
    lhs.col(a) = generator_adjoint(gens[a], *basis) * target;
  const Eigen::VectorXd rhs =
      -(drift.generator() * target + drift.affine_part);

  SynthesisResult result;
  result.u = lhs.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
  result.residual = (lhs * result.u - rhs).norm();
  result.stabilizable = result.residual < kSynthesisResidualTol;

  ControlSpec ctrl{gens, result.u};
  result.achieved_fixed_point = stabilized_fixed_point(model, ctrl, basis);
  return result;
}

std::pair<double, double> one_spin_controller(double x, double y, double z,
                                              double gamma1, double gamma2) {
  if (std::abs(z) <= 1e-9)
    throw SingularTargetError("one_spin_controller: |z| too small");
  const double ellipsoid_residual =
      (z - 0.5) * (z - 0.5) + (gamma2 / gamma1) * (x * x + y * y) - 0.25;
  if (std::abs(ellipsoid_residual) > 1e-6)
    throw NotStabilizableError(
        "one_spin_controller: target off the stabilizable ellipsoid");
  return {-gamma2 * y / z, gamma2 * x / z};
}

int manifold_dimension(const LindbladModel& model,
                       const std::vector<ComplexMatrix>& gens,
                       const Eigen::VectorXd& u0, BasisPtr basis) {
  const int k = static_cast<int>(gens.size());
  if (u0.size() != k)
    throw DimensionError("manifold_dimension: |u0| != |generators|");

  const FixedPointResult base =
      stabilized_fixed_point(model, ControlSpec{gens, u0}, basis);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(base.rho_f);
  const Eigen::VectorXd evals = es.eigenvalues();
  for (Eigen::Index i = 1; i < evals.size(); ++i)
    if (evals[i] - evals[i - 1] < 1e-6)
      throw DegenerateSpectrumError(
          "manifold_dimension: fixed-point spectrum degenerate at base point");

  const double step = 1e-5;
  const int m = basis->size();
  Eigen::MatrixXd jac(m, k);
  for (int a = 0; a < k; ++a) {
    Eigen::VectorXd up = u0, dn = u0;
    up[a] += step;
    dn[a] -= step;
    const CoherenceVector rp =
        stabilized_fixed_point(model, ControlSpec{gens, up}, basis).r_f;
    const CoherenceVector rm =
        stabilized_fixed_point(model, ControlSpec{gens, dn}, basis).r_f;
    jac.col(a) = (rp - rm) / (2.0 * step);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-6 * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

ManifoldSample sample_manifold(const LindbladModel& model,
                               const std::vector<ComplexMatrix>& gens,
                               int n_samples, double amplitude_scale,
                               std::uint64_t seed, BasisPtr basis) {
  if (n_samples < 1)
    throw DomainError("sample_manifold: n_samples must be >= 1");

  // Draw sequence fixed up front so results are order-independent.
  std::mt19937_64 rng(seed);
  const int k = static_cast<int>(gens.size());
  std::vector<Eigen::VectorXd> draws(n_samples, Eigen::VectorXd(k));
  for (auto& u : draws)
    for (int a = 0; a < k; ++a) {
      // Top 53 bits -> [0, 1); portable unlike uniform_real_distribution.
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      u[a] = amplitude_scale * (2.0 * x - 1.0);
    }

  ManifoldSample sample;
  for (const auto& u : draws) {
    try {
      sample.points.push_back(
          stabilized_fixed_point(model, ControlSpec{gens, u}, basis));
      sample.amplitudes.push_back(u);
    } catch (const NotRelaxingError&) {
      ++sample.skipped;
    }
  }
  return sample;
}

}  // namespace relax
