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
#include "relax/lindblad.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "relax/expm.hpp"

namespace relax {

namespace {
const std::complex<double> kI(0.0, 1.0);

double condition_estimate(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) <= 0.0)
    return std::numeric_limits<double>::infinity();
  return sv(0) / sv(sv.size() - 1);
}
}  // namespace

ComplexMatrix hamiltonian_action(const ComplexMatrix& h,
                                 const ComplexMatrix& m) {
  return -kI * (h * m - m * h);
}

ComplexMatrix dissipative_action(const std::vector<ComplexMatrix>& ls,
                                 const ComplexMatrix& m) {
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (const auto& l : ls) {
    const ComplexMatrix ldag = l.adjoint();
    const ComplexMatrix ldl = ldag * l;
    out += l * m * ldag - 0.5 * (ldl * m + m * ldl);
  }
  return out;
}

CoherenceRep build_affine(const LindbladModel& model, BasisPtr basis) {
  const int n = basis->dim;
  if (model.dim != n || model.hamiltonian.rows() != n ||
      model.hamiltonian.cols() != n)
    throw DimensionError("build_affine: model/basis dimension mismatch");
  for (const auto& l : model.dissipators)
    if (l.rows() != n || l.cols() != n)
      throw DimensionError("build_affine: dissipator dimension mismatch");
  if (!is_hermitian(model.hamiltonian, 1e-12))
    throw InvalidModelError("build_affine: Hamiltonian not Hermitian");

  const int m = basis->size();
  CoherenceRep rep;
  rep.basis = basis;
  rep.hamiltonian_part.resize(m, m);
  rep.dissipative_part.resize(m, m);
  rep.affine_part.resize(m);

  for (int b = 0; b < m; ++b) {
    const ComplexMatrix hp =
        hamiltonian_action(model.hamiltonian, basis->elements[b]);
    const ComplexMatrix dp =
        dissipative_action(model.dissipators, basis->elements[b]);
    for (int a = 0; a < m; ++a) {
      rep.hamiltonian_part(a, b) =
          (basis->elements[a] * hp).trace().real() / n;
      rep.dissipative_part(a, b) =
          (basis->elements[a] * dp).trace().real() / n;
    }
  }
  const ComplexMatrix di =
      dissipative_action(model.dissipators, ComplexMatrix::Identity(n, n));
  for (int a = 0; a < m; ++a)
    rep.affine_part(a) = (basis->elements[a] * di).trace().real() / n;
  return rep;
}

RelaxingDiagnostics is_relaxing(const CoherenceRep& rep) {
  RelaxingDiagnostics diag;
  const Eigen::MatrixXd gen = rep.generator();
  Eigen::EigenSolver<Eigen::MatrixXd> es(gen, /*computeEigenvectors=*/false);
  diag.spectrum = es.eigenvalues();
  diag.spectral_abscissa = diag.spectrum.real().maxCoeff();
  diag.condition_number = condition_estimate(gen);
  diag.relaxing = diag.spectral_abscissa < -kRelaxingAbscissaTol;
  return diag;
}

FixedPointResult fixed_point(const CoherenceRep& rep) {
  const RelaxingDiagnostics diag = is_relaxing(rep);
  if (!(diag.condition_number < kConditionLimit)) {
    std::ostringstream msg;
    msg << "fixed_point: generator condition number " << diag.condition_number
        << " exceeds " << kConditionLimit << "; spectral abscissa "
        << diag.spectral_abscissa;
    throw NotRelaxingError(msg.str());
  }
  FixedPointResult result;
  result.r_f = rep.generator().partialPivLu().solve(-rep.affine_part);
  result.rho_f = density_from_coherence(result.r_f, *rep.basis);
  result.spectrum = diag.spectrum;
  result.condition_number = diag.condition_number;
  result.relaxing = diag.relaxing;
  return result;
}

CoherenceVector propagate(const CoherenceRep& rep, const CoherenceVector& r0,
                          double t) {
  if (t < 0.0) throw DomainError("propagate: t must be >= 0");
  if (r0.size() != rep.basis->size())
    throw DimensionError("propagate: state length mismatch");

  const RelaxingDiagnostics diag = is_relaxing(rep);
  if (diag.relaxing && diag.condition_number < kConditionLimit) {
    const FixedPointResult fp = fixed_point(rep);
    return expm(Eigen::MatrixXd(rep.generator() * t)) * (r0 - fp.r_f) +
           fp.r_f;
  }
  // Augmented affine form: exponentiate [[A+B, c], [0, 0]].
  const int m = static_cast<int>(r0.size());
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(m + 1, m + 1);
  aug.topLeftCorner(m, m) = rep.generator();
  aug.topRightCorner(m, 1) = rep.affine_part;
  const Eigen::MatrixXd e = expm(Eigen::MatrixXd(aug * t));
  return e.topLeftCorner(m, m) * r0 + e.topRightCorner(m, 1);
}

AffineMap affine_propagator(const CoherenceRep& rep, double dt) {
  if (dt < 0.0) throw DomainError("affine_propagator: dt must be >= 0");
  const int m = rep.basis->size();
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(m + 1, m + 1);
  aug.topLeftCorner(m, m) = rep.generator();
  aug.topRightCorner(m, 1) = rep.affine_part;
  const Eigen::MatrixXd e = expm(Eigen::MatrixXd(aug * dt));
  return {e.topLeftCorner(m, m), e.topRightCorner(m, 1)};
}

std::vector<std::pair<double, CoherenceVector>> integrate_rk4(
    const CoherenceRep& rep, const CoherenceVector& r0, double t, double dt) {
  if (dt <= 0.0) throw DomainError("integrate_rk4: dt must be > 0");
  if (t < 0.0) throw DomainError("integrate_rk4: t must be >= 0");
  if (r0.size() != rep.basis->size())
    throw DimensionError("integrate_rk4: state length mismatch");

  const Eigen::MatrixXd gen = rep.generator();
  const Eigen::VectorXd& c = rep.affine_part;
  auto deriv = [&](const CoherenceVector& r) -> CoherenceVector {
    return gen * r + c;
  };

  std::vector<std::pair<double, CoherenceVector>> traj;
  traj.reserve(static_cast<size_t>(t / dt) + 2);
  CoherenceVector r = r0;
  double time = 0.0;
  traj.emplace_back(time, r);
  while (time < t - 1e-15 * std::max(1.0, t)) {
    const double h = std::min(dt, t - time);
    const CoherenceVector k1 = deriv(r);
    const CoherenceVector k2 = deriv(r + 0.5 * h * k1);
    const CoherenceVector k3 = deriv(r + 0.5 * h * k2);
    const CoherenceVector k4 = deriv(r + h * k3);
    r += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    time += h;
    traj.emplace_back(time, r);
  }
  return traj;
}

}  // namespace relax
