// Copyright 2026 The pstwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <random>

#include "pst/families.hpp"
#include "pst/graph.hpp"
#include "pst/spectral.hpp"

using namespace pst;

namespace {

Eigen::MatrixXd random_symmetric(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m(i, j) = entry(rng);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("4-cycle Laplacian spectrum is {0, 2, 2, 4}") {
  const Spectrum spec = decompose(cycle_graph(4).graph.generalized_laplacian(-1.0));
  REQUIRE(spec.count() == 3);
  CHECK(spec.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(spec.eigenvalues[1] == doctest::Approx(2.0));
  CHECK(spec.eigenvalues[2] == doctest::Approx(4.0));
  CHECK(spec.multiplicities == std::vector<int>{1, 2, 1});
}

TEST_CASE("identity decomposes into a single full projector") {
  const Spectrum spec = decompose(Eigen::MatrixXd::Identity(3, 3));
  REQUIRE(spec.count() == 1);
  CHECK(spec.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(spec.multiplicities[0] == 3);
  CHECK((spec.projectors[0] - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <=
        1e-14);
}

TEST_CASE("looped wheel at q=1 has the closed-form eigenvalue multiset") {
  const Spectrum spec = decompose(looped_wheel(0.0).graph.generalized_laplacian(1.0));
  const double root17 = std::sqrt(17.0);
  std::vector<double> expected{1.0, (9.0 - root17) / 2.0, 3.0, 3.0,
                               (9.0 + root17) / 2.0};
  std::sort(expected.begin(), expected.end());
  const std::vector<double> got = expanded_eigenvalues(spec);
  REQUIRE(got.size() == expected.size());
  for (size_t i = 0; i < got.size(); ++i) {
    CHECK(std::abs(got[i] - expected[i]) <= 1e-9);
  }
}

TEST_CASE("decomposition invariants hold on random symmetric matrices") {
  std::mt19937 rng(42);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 2 + rep % 11;
    const Eigen::MatrixXd m = random_symmetric(rng, n);
    const Spectrum spec = decompose(m);
    CHECK(spec.completeness_error() <= 1e-10);
    CHECK(spec.orthogonality_error() <= 1e-10);
    CHECK(spec.trace_error() <= 1e-8);
    CHECK(spec.reconstruction_error(m) <= 1e-9 * (1.0 + spec.spectral_radius()));
    int total = 0;
    for (int mult : spec.multiplicities) total += mult;
    CHECK(total == n);
  }
}

TEST_CASE("cluster tolerance controls eigenvalue merging") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0 + 1e-12;
  m(2, 2) = 2.0;
  CHECK(decompose(m).count() == 2);            // default 1e-8 merges the near pair
  CHECK(decompose(m, 1e-14).count() == 3);     // a tight tolerance separates it
}

TEST_CASE("decompose rejects non-symmetric input") {
  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(decompose(m), Error);
}

TEST_CASE("transition matrix basics") {
  const Spectrum spec = decompose(path_graph(2).graph.generalized_laplacian(1.0));

  SUBCASE("U(0) is the identity") {
    const TransitionMatrix u = transition(spec, 0.0);
    CHECK((u.entries - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() <=
          1e-14);
  }
  SUBCASE("transfer entry has unit modulus at pi/2") {
    const TransitionMatrix u = transition(spec, M_PI / 2.0);
    CHECK(std::abs(u.entries(0, 1)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("half probability at pi/4") {
    const TransitionMatrix u = transition(spec, M_PI / 4.0);
    CHECK(std::norm(u.entries(0, 1)) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("transition matrices are unitary, symmetric, and a semigroup") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> time(-4.0, 4.0);
  const Eigen::MatrixXd m = random_symmetric(rng, 7);
  const Spectrum spec = decompose(m);
  for (int rep = 0; rep < 10; ++rep) {
    const double t = time(rng);
    const double s = time(rng);
    const TransitionMatrix ut = transition(spec, t);
    CHECK(ut.unitarity_error() <= 1e-10);
    CHECK(ut.symmetry_error() <= 1e-10);
    const Eigen::MatrixXcd combined = transition(spec, t + s).entries;
    CHECK((combined - ut.entries * transition(spec, s).entries).cwiseAbs().maxCoeff() <=
          1e-9);
    // U(-t) is the conjugate of U(t)
    CHECK((transition(spec, -t).entries - ut.entries.conjugate()).cwiseAbs().maxCoeff() <=
          1e-12);
  }
}

TEST_CASE("rank-one interlacing on the stated instances") {
  SUBCASE("4-cycle Laplacian with a pair perturbation") {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(4);
    w(0) = 1.0;
    w(1) = -1.0;
    const InterlacingReport report =
        interlacing_verify(cycle_graph(4).graph.generalized_laplacian(-1.0), 1.0, w);
    CHECK(report.ok);
  }
  SUBCASE("zero rho leaves the spectrum in place") {
    std::mt19937 rng(5);
    const Eigen::MatrixXd b = random_symmetric(rng, 5);
    Eigen::VectorXd w(5);
    for (int i = 0; i < 5; ++i) w(i) = i - 2.0;
    CHECK(interlacing_verify(b, 0.0, w).ok);
  }
  SUBCASE("6-cycle signless Laplacian with a plus perturbation") {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(6);
    w(0) = 1.0;
    w(3) = 1.0;
    CHECK(interlacing_verify(cycle_graph(6).graph.generalized_laplacian(1.0), 2.0, w)
              .ok);
  }
  SUBCASE("negative rho is rejected") {
    Eigen::VectorXd w = Eigen::VectorXd::Ones(3);
    CHECK_THROWS_AS(interlacing_verify(Eigen::MatrixXd::Identity(3, 3), -1.0, w),
                    Error);
  }
}

TEST_CASE("spectrum multiset union") {
  Eigen::MatrixXd whole(2, 2);
  whole << 1, 0, 0, 2;
  Eigen::MatrixXd one(1, 1), two(1, 1), three(1, 1);
  one << 1;
  two << 2;
  three << 3;
  CHECK(spectrum_union_equal(decompose(whole), decompose(one), decompose(two), 1e-8));
  CHECK_FALSE(
      spectrum_union_equal(decompose(whole), decompose(one), decompose(three), 1e-8));
  CHECK_THROWS_AS(
      spectrum_union_equal(decompose(whole), decompose(whole), decompose(one), 1e-8),
      Error);
}
