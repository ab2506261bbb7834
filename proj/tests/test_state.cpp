// Copyright 2026 The qcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qcoh/measures.hpp"
#include "qcoh/state.hpp"

using namespace qcoh;
using testing::max_abs;

TEST_CASE("bloch_decompose on simple states") {
  const auto b2 = gellmann_basis(2);
  CHECK(bloch_decompose(Eigen::MatrixXcd::Identity(2, 2) / 2.0, b2).x.norm() < 1e-15);
  Eigen::MatrixXcd plus = Eigen::MatrixXcd::Constant(2, 2, 0.5);
  const auto v = bloch_decompose(plus, b2);
  CHECK(v.d == 2);
  CHECK((v.x - Eigen::Vector3d(1, 0, 0)).norm() < 1e-15);

  const auto b3 = gellmann_basis(3);
  CHECK(bloch_decompose(Eigen::MatrixXcd::Identity(3, 3) / 3.0, b3).x.norm() < 1e-15);
  CHECK_THROWS_AS(bloch_decompose(plus, b3), DimensionMismatch);
}

TEST_CASE("bloch_decompose rejects non-Hermitian input") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2) / 2.0;
  m(0, 1) = std::complex<double>(0, 0.3);
  CHECK_THROWS_AS(bloch_decompose(m, gellmann_basis(2)), NonHermitian);
}

TEST_CASE("compose and decompose round trip") {
  std::mt19937_64 rng(11);
  for (Index d = 2; d <= 6; ++d) {
    const auto b = gellmann_basis(d);
    for (int rep = 0; rep < 20; ++rep) {
      const Eigen::MatrixXcd rho = testing::random_density(int(d), rng);
      const auto v = bloch_decompose(rho, b);
      CHECK(max_abs(bloch_compose(v, b) - rho) < 1e-12);
      // purity identity
      CHECK(std::abs((rho * rho).trace().real() - (v.x.squaredNorm() / 2 + 1.0 / double(d))) < 1e-12);
    }
  }
}

TEST_CASE("bloch_compose basics") {
  const auto b2 = gellmann_basis(2);
  CHECK(max_abs(bloch_compose(Eigen::Vector3d::Zero().eval(), b2) - Eigen::MatrixXcd::Identity(2, 2) / 2.0) < 1e-15);
  Eigen::MatrixXcd up = Eigen::MatrixXcd::Zero(2, 2);
  up(0, 0) = 1;
  CHECK(max_abs(bloch_compose(Eigen::Vector3d(0, 0, 1), b2) - up) < 1e-15);
  CHECK_THROWS_AS(bloch_compose(Eigen::Vector2d(0, 0), b2), DimensionMismatch);
}

TEST_CASE("bloch_compose with validation rejects vectors past the purity bound") {
  const auto b3 = gellmann_basis(3);
  // Pure state |0><0| has |x|^2 = 2(d-1)/d. Scaling its vector by 1.01 leaves the state space.
  Eigen::MatrixXcd pure = Eigen::MatrixXcd::Zero(3, 3);
  pure(0, 0) = 1;
  const Eigen::VectorXd x = bloch_decompose(pure, b3).x;
  CHECK(std::abs(x.squaredNorm() - 4.0 / 3.0) < 1e-12);
  const Eigen::VectorXd over = 1.01 * x;
  // oracle: eigenvalues of the composed matrix, computed locally
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3) / 3.0;
  for (Index i = 0; i < 8; ++i) m += 0.5 * over(i) * b3[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  REQUIRE(es.eigenvalues()(0) < -1e-9);
  try {
    bloch_compose(over, b3, true);
    FAIL("expected UnphysicalState");
  } catch (const UnphysicalState& e) {
    CHECK(std::abs(e.min_eigenvalue() - es.eigenvalues()(0)) < 1e-12);
  }
  CHECK_NOTHROW(bloch_compose(x, b3, true));
}

TEST_CASE("validate_density") {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(2, 2) / 2.0;
  CHECK_NOTHROW(validate_density(rho));
  CHECK(is_density(rho));
  Eigen::MatrixXcd bad = rho;
  bad(0, 0) = 0.7;
  CHECK_FALSE(is_density(bad));
  Eigen::MatrixXcd neg(2, 2);
  neg << 1.2, 0, 0, -0.2;
  CHECK_THROWS_AS(validate_density(neg), UnphysicalState);
}

TEST_CASE("family members") {
  const auto b2 = gellmann_basis(2);
  StateFamilyd fam{2, Eigen::Vector3d(1, 0, 0), 1.0};
  CHECK(max_abs(family_member(fam, b2) - Eigen::MatrixXcd::Constant(2, 2, 0.5)) < 1e-15);
  fam.chi = 0;
  CHECK(max_abs(family_member(fam, b2) - Eigen::MatrixXcd::Identity(2, 2) / 2.0) < 1e-15);

  std::mt19937_64 rng(5);
  for (Index d = 2; d <= 5; ++d) {
    const auto b = gellmann_basis(d);
    for (int rep = 0; rep < 10; ++rep) {
      std::normal_distribution<double> n01;
      Eigen::VectorXd n(d * d - 1);
      for (auto& v : n) v = n01(rng);
      n.normalize();
      const double chi = std::uniform_real_distribution<double>(-1, 1)(rng) * max_family_chi(d);
      const auto rho = family_member(StateFamilyd{d, n, chi}, b);
      CHECK(std::abs((rho * rho).trace().real() - (chi * chi / 2 + 1.0 / double(d))) < 1e-12);
      // degree-one homogeneity of the l1 norm in chi
      const auto unit = family_member(StateFamilyd{d, n, 1.0}, b);
      CHECK(std::abs(l1_from_density(rho) - std::abs(chi) * l1_from_density(unit)) < 1e-12);
    }
  }
  CHECK_THROWS(family_member(StateFamilyd{2, Eigen::Vector3d(1, 1, 0), 0.5}, b2));
  CHECK_THROWS_AS(family_member(StateFamilyd{2, Eigen::Vector2d(1, 0), 0.5}, b2), DimensionMismatch);
}

TEST_CASE("probe states") {
  const auto b2 = gellmann_basis(2);
  SUBCASE("x direction is the plus state") {
    const auto p = probe_state(Eigen::Vector3d(1, 0, 0), b2);
    CHECK(p.chi_p == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(max_abs(p.state - Eigen::MatrixXcd::Constant(2, 2, 0.5)) < 1e-15);
    CHECK(p.physical);
  }
  SUBCASE("weakly coherent direction gives a formal probe") {
    const auto p = probe_state(Eigen::Vector3d(0.6, 0, 0.8), b2);
    CHECK(std::abs(p.chi_p - 5.0 / 3.0) < 1e-14);
    // eigenvalues of I/2 + (chi_p/2) n.sigma are (1 +- chi_p)/2
    CHECK(std::abs(p.min_eigenvalue - (1 - 5.0 / 3.0) / 2) < 1e-14);
    CHECK_FALSE(p.physical);
    CHECK(std::abs(l1_from_density(p.state) - 1.0) < 1e-12);
  }
  SUBCASE("incoherent direction has no probe") {
    CHECK_THROWS_AS(probe_state(Eigen::Vector3d(0, 0, 1), b2), NoProbe);
  }
  SUBCASE("probe coherence is one in every dimension") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> n01;
    for (Index d = 2; d <= 5; ++d) {
      const auto b = gellmann_basis(d);
      for (int rep = 0; rep < 20; ++rep) {
        Eigen::VectorXd n(d * d - 1);
        for (auto& v : n) v = n01(rng);
        n.normalize();
        const auto p = probe_state(n, b);
        CHECK(std::abs(testing::l1_loop(p.state) - 1.0) < 1e-12);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(p.state);
        CHECK(p.physical == (es.eigenvalues()(0) >= -1e-9));
      }
    }
  }
}

TEST_CASE("random_state") {
  CHECK(max_abs(random_state(3, 17) - random_state(3, 17)) == 0.0);
  CHECK(max_abs(random_state(3, 17) - random_state(3, 18)) > 0.0);
  const auto b = gellmann_basis(3);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(8);
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const auto rho = random_state(3, s);
    CHECK_NOTHROW(validate_density(rho));
    mean += bloch_decompose(rho, b).x;
  }
  mean /= 1000.0;
  CHECK(mean.cwiseAbs().maxCoeff() < 5.0 / std::sqrt(1000.0));
}

TEST_CASE("random_family") {
  for (Index d = 2; d <= 4; ++d) {
    const auto b = gellmann_basis(d);
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto fam = random_family(d, s);
      CHECK(fam.d == d);
      CHECK(std::abs(fam.n.norm() - 1.0) < 1e-12);
      CHECK(std::abs(fam.chi) <= max_family_chi(d));
      CHECK(is_density(family_member(fam, b)));
    }
    CHECK(random_family(d, 3).n == random_family(d, 3).n);
  }
}

TEST_CASE("long double state pipeline") {
  const auto b = gellmann_basis<long double>(3);
  Eigen::Matrix<long double, Eigen::Dynamic, 1> x = Eigen::Matrix<long double, Eigen::Dynamic, 1>::Zero(8);
  x(0) = 0.3L;
  x(1) = 0.4L;
  const auto rho = bloch_compose(x, b, true);
  CHECK(std::abs(l1_from_density(rho) - 0.5L) < 1e-17L);
  CHECK(std::abs(l1_from_bloch(bloch_decompose(rho, b)) - 0.5L) < 1e-17L);
}
