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
#include <doctest.h>

#include <cmath>
#include <random>

#include "relax/control.hpp"
#include "relax/scenarios.hpp"
#include "test_util.hpp"

using namespace relax;

namespace {

ControlSpec one_spin_control(double ux, double uy, double uz) {
  ControlSpec ctrl;
  ctrl.generators = local_generators(1);
  ctrl.u.resize(3);
  ctrl.u << ux, uy, uz;
  return ctrl;
}

}  // namespace

TEST_CASE("named generators") {
  CHECK((named_generator("X1", 1) - pauli_x() / 2.0).norm() < 1e-15);
  CHECK((named_generator("Z2", 2) -
         kron(pauli_identity(), pauli_z()) / 2.0)
            .norm() < 1e-15);
  CHECK_THROWS_AS(named_generator("X3", 2), DimensionError);
  CHECK_THROWS_AS(named_generator("Q1", 1), DomainError);
  CHECK_THROWS_AS(named_generator("X", 1), DomainError);
  CHECK(local_generators(2).size() == 6);
  CHECK(full_generators(2).size() == 15);
}

TEST_CASE("stabilized_fixed_point canonical one-spin cases") {
  const auto basis = pauli_string_basis(1);
  const LindbladModel model = one_spin_model({1.0, 1.0});

  SUBCASE("no control keeps the drift fixed point") {
    const FixedPointResult fp =
        stabilized_fixed_point(model, one_spin_control(0, 0, 0), basis);
    CHECK(fp.r_f[0] == doctest::Approx(0.0));
    CHECK(fp.r_f[1] == doctest::Approx(0.0));
    CHECK(fp.r_f[2] == doctest::Approx(1.0));
  }

  SUBCASE("u_y = gamma tilts to (1/2, 0, 1/2)") {
    const FixedPointResult fp =
        stabilized_fixed_point(model, one_spin_control(0, 1.0, 0), basis);
    CHECK(fp.r_f[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fp.r_f[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fp.r_f[2] == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("huge amplitudes rotation-average onto the control axis") {
    const double mu = 1e6;
    const FixedPointResult fp = stabilized_fixed_point(
        model, one_spin_control(0.4 * mu, 0.8 * mu, -0.2 * mu), basis);
    // limit is (n . c) n with n the unit control axis and c = (0, 0, 1)
    CHECK(fp.r_f.norm() ==
          doctest::Approx(0.2 / std::sqrt(0.84)).epsilon(1e-4));
  }
}

TEST_CASE("synthesize_controller inverts the one-spin family") {
  const auto basis = pauli_string_basis(1);
  const LindbladModel model = one_spin_model({1.0, 1.0});
  const auto gens = local_generators(1);

  SUBCASE("recovers u_y = gamma for target (1/2, 0, 1/2)") {
    CoherenceVector target(3);
    target << 0.5, 0, 0.5;
    const SynthesisResult res =
        synthesize_controller(model, gens, target, basis);
    CHECK(res.residual < 1e-10);
    CHECK(res.stabilizable);
    CHECK(res.u[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(res.u[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK((res.achieved_fixed_point.r_f - target).norm() < 1e-10);
  }

  SUBCASE("drift fixed point needs no control") {
    CoherenceVector target(3);
    target << 0, 0, 1;
    const SynthesisResult res =
        synthesize_controller(model, gens, target, basis);
    CHECK(res.residual < 1e-12);
    CHECK(res.u.norm() < 1e-12);  // minimum-norm solution
  }

  SUBCASE("off-ellipsoid targets are flagged") {
    CoherenceVector target(3);
    target << 0.5, 0, 0.2;
    const SynthesisResult res =
        synthesize_controller(model, gens, target, basis);
    CHECK(res.residual > 1e-3);
    CHECK_FALSE(res.stabilizable);
  }

  SUBCASE("purity-violating targets are rejected") {
    CoherenceVector target(3);
    target << 2, 0, 0;
    CHECK_THROWS_AS(synthesize_controller(model, gens, target, basis),
                    InvalidStateError);
  }
}

TEST_CASE("synthesis round-trip on random controls") {
  std::mt19937_64 rng(41);
  const auto basis = pauli_string_basis(1);
  const LindbladModel model = one_spin_model({1.0, 2.0});
  const auto gens = local_generators(1);
  for (int trial = 0; trial < 25; ++trial) {
    Eigen::VectorXd u(3);
    for (int a = 0; a < 3; ++a) u[a] = testutil::uniform(rng, -2, 2);
    const CoherenceVector target =
        stabilized_fixed_point(model, {gens, u}, basis).r_f;
    const SynthesisResult res =
        synthesize_controller(model, gens, target, basis);
    CHECK(res.residual < 1e-8);
    CHECK((res.achieved_fixed_point.r_f - target).norm() < 1e-8);
  }
}

TEST_CASE("stabilized fixed points are invariant under propagation") {
  std::mt19937_64 rng(42);
  const auto basis = pauli_string_basis(1);
  const LindbladModel model = one_spin_model({1.0, 1.0});
  const auto gens = local_generators(1);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd u(3);
    for (int a = 0; a < 3; ++a) u[a] = testutil::uniform(rng, -2, 2);
    LindbladModel controlled = model;
    controlled.hamiltonian += control_hamiltonian({gens, u});
    const CoherenceRep rep = build_affine(controlled, basis);
    const FixedPointResult fp = fixed_point(rep);
    for (double t : {0.1, 1.0, 10.0})
      CHECK((propagate(rep, fp.r_f, t) - fp.r_f).norm() < 1e-9);
  }
}

TEST_CASE("one_spin_controller closed form") {
  SUBCASE("matches the worked targets") {
    const auto [ux1, uy1] = one_spin_controller(0.5, 0, 0.5, 1.0, 1.0);
    CHECK(ux1 == doctest::Approx(0.0));
    CHECK(uy1 == doctest::Approx(1.0));

    const auto [ux2, uy2] = one_spin_controller(0, 0, 1, 1.0, 1.0);
    CHECK(ux2 == doctest::Approx(0.0));
    CHECK(uy2 == doctest::Approx(0.0));

    const auto [ux3, uy3] = one_spin_controller(0, 0.5, 0.5, 1.0, 1.0);
    CHECK(ux3 == doctest::Approx(-1.0));
    CHECK(uy3 == doctest::Approx(0.0));
  }

  SUBCASE("agrees with the general synthesizer along the ellipsoid") {
    const auto basis = pauli_string_basis(1);
    const double g1 = 1.0, g2 = 3.0;
    const LindbladModel model = one_spin_model({g1, g2});
    const auto gens = local_generators(1);
    for (double z : {0.1, 0.35, 0.65, 0.9}) {
      const double rsq = (g1 / g2) * (0.25 - (z - 0.5) * (z - 0.5));
      for (double phi : {0.3, 2.0, 4.4}) {
        const double x = std::sqrt(rsq) * std::cos(phi);
        const double y = std::sqrt(rsq) * std::sin(phi);
        const auto [ux, uy] = one_spin_controller(x, y, z, g1, g2);
        CoherenceVector target(3);
        target << x, y, z;
        const SynthesisResult res =
            synthesize_controller(model, gens, target, basis);
        CHECK(res.residual < 1e-10);
        CHECK(std::abs(ux - res.u[0]) < 1e-8);
        CHECK(std::abs(uy - res.u[1]) < 1e-8);
      }
    }
  }

  SUBCASE("rejects degenerate and off-manifold targets") {
    CHECK_THROWS_AS(one_spin_controller(0.5, 0, 1e-12, 1.0, 1.0),
                    SingularTargetError);
    CHECK_THROWS_AS(one_spin_controller(0.9, 0, 0.9, 1.0, 1.0),
                    NotStabilizableError);
  }
}

TEST_CASE("manifold_dimension") {
  std::mt19937_64 rng(43);

  SUBCASE("one spin with full su(2) controls has dimension 2") {
    const auto basis = pauli_string_basis(1);
    const LindbladModel model = one_spin_model({1.0, 1.0});
    Eigen::VectorXd u0(3);
    u0 << 0.7, -0.4, 0.9;
    CHECK(manifold_dimension(model, local_generators(1), u0, basis) == 2);
  }

  SUBCASE("two spins with local controls are bounded by parameter count") {
    const auto basis = pauli_string_basis(2);
    const LindbladModel model = two_spin_model({1.0, 1.0});
    Eigen::VectorXd u0(6);
    for (int a = 0; a < 6; ++a) u0[a] = testutil::uniform(rng, -1, 1);
    CHECK(manifold_dimension(model, local_generators(2), u0, basis) <= 6);
  }

  SUBCASE("degenerate base point is rejected") {
    const auto basis = pauli_string_basis(2);
    const LindbladModel model = two_spin_model({1.0, 0.0});
    // u = 0: fixed point |up up> has eigenvalues (1, 0, 0, 0).
    CHECK_THROWS_AS(manifold_dimension(model, local_generators(2),
                                       Eigen::VectorXd::Zero(6), basis),
                    DegenerateSpectrumError);
  }
}

TEST_CASE("sample_manifold") {
  const auto basis = pauli_string_basis(1);
  const LindbladModel model = one_spin_model({1.0, 1.0});
  const auto gens = local_generators(1);

  SUBCASE("is deterministic in the seed") {
    const ManifoldSample a = sample_manifold(model, gens, 20, 2.0, 99, basis);
    const ManifoldSample b = sample_manifold(model, gens, 20, 2.0, 99, basis);
    REQUIRE(a.points.size() == b.points.size());
    for (size_t i = 0; i < a.points.size(); ++i)
      CHECK((a.points[i].r_f - b.points[i].r_f).norm() == 0.0);
  }

  SUBCASE("zero amplitude scale reproduces the drift fixed point") {
    const ManifoldSample s = sample_manifold(model, gens, 5, 0.0, 1, basis);
    for (const auto& p : s.points) {
      CHECK(p.r_f[0] == doctest::Approx(0.0));
      CHECK(p.r_f[2] == doctest::Approx(1.0));
    }
  }

  SUBCASE("one-spin samples lie on the ellipsoid") {
    const ManifoldSample s =
        sample_manifold(model, gens, 500, 3.0, 7, basis);
    CHECK(s.skipped == 0);
    for (const auto& p : s.points) {
      const double x = p.r_f[0], y = p.r_f[1], z = p.r_f[2];
      CHECK(std::abs((z - 0.5) * (z - 0.5) + x * x + y * y - 0.25) < 1e-9);
    }
  }

  SUBCASE("two-spin local samples are valid states") {
    const auto basis2 = pauli_string_basis(2);
    const LindbladModel model2 = two_spin_model({1.0, 2.0});
    const ManifoldSample s = sample_manifold(
        model2, local_generators(2), 200, 2.0, 5, basis2);
    for (const auto& p : s.points) {
      CHECK(p.r_f.squaredNorm() <= 3.0 + 1e-9);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p.rho_f);
      CHECK(es.eigenvalues().minCoeff() >= -1e-10);
    }
  }
}

TEST_CASE("large amplitudes rotation-average onto the control axis") {
  const auto basis = pauli_string_basis(1);
  const LindbladModel model = one_spin_model({1.0, 1.0});
  const auto gens = local_generators(1);
  Eigen::VectorXd u(3);
  u << 0.8, -0.5, 0.3;
  double prev = 2.0;
  for (double mu : {1.0, 10.0, 100.0, 1e4, 1e6}) {
    const double norm =
        stabilized_fixed_point(model, {gens, Eigen::VectorXd(mu * u)}, basis)
            .r_f.norm();
    CHECK(norm < prev);
    prev = norm;
  }
  // limit is (n . c) n with n = u/|u| and c = (0, 0, gamma1)
  CHECK(prev == doctest::Approx(0.3 / u.norm()).epsilon(1e-4));
}

TEST_CASE("Jacobian rank never exceeds N^2 - N") {
  std::mt19937_64 rng(44);
  const auto basis = pauli_string_basis(2);
  const LindbladModel model = two_spin_model({1.0, 1.0});
  const auto gens = full_generators(2);
  int checked = 0;
  for (int trial = 0; trial < 5 && checked < 3; ++trial) {
    Eigen::VectorXd u0(static_cast<Eigen::Index>(gens.size()));
    for (Eigen::Index a = 0; a < u0.size(); ++a)
      u0[a] = testutil::uniform(rng, -1, 1);
    try {
      CHECK(manifold_dimension(model, gens, u0, basis) <= 12);
      ++checked;
    } catch (const DegenerateSpectrumError&) {
      // unlucky base point; draw another
    }
  }
  CHECK(checked >= 1);
}
