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

#include <random>

#include "pst/families.hpp"
#include "pst/graph.hpp"

using namespace pst;

namespace {

WeightedGraph random_simple_graph(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> weight(0.1, 3.0);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::tuple<int, int, double>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v, weight(rng));
    }
  }
  return WeightedGraph::build(n, edges, {});
}

}  // namespace

TEST_CASE("build validates its inputs") {
  CHECK_NOTHROW(WeightedGraph::build(2, {{0, 1, 1.0}}, {}));

  try {
    WeightedGraph::build(2, {{0, 2, 1.0}}, {});
    FAIL("out-of-range edge accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
  CHECK_THROWS_AS(WeightedGraph::build(3, {{0, 1, 1.0}, {1, 0, 1.0}}, {}), Error);
  try {
    WeightedGraph::build(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}, {1, 2, 1.0}}, {});
    FAIL("duplicate edge accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateEdge);
  }
  try {
    WeightedGraph::build(2, {{1, 1, 1.0}}, {});
    FAIL("self loop accepted in edge list");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SelfLoopInEdgeList);
  }
  try {
    WeightedGraph::build(2, {{0, 1, -0.5}}, {});
    FAIL("negative weight accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveEdgeWeight);
  }
  try {
    WeightedGraph::build(2, {{0, 1, 1.0}}, {{0, 1.0}, {0, 2.0}});
    FAIL("duplicate loop accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateEdge);
  }
}

TEST_CASE("edge storage is direction-free") {
  const WeightedGraph g = WeightedGraph::build(3, {{2, 0, 1.5}}, {});
  CHECK(g.edge_weight(0, 2) == 1.5);
  CHECK(g.edge_weight(2, 0) == 1.5);
  CHECK(g.edge_weight(0, 1) == 0.0);
}

TEST_CASE("loops sit on the adjacency diagonal and count once in the degree") {
  const WeightedGraph g =
      WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 2.0}}, {{1, -0.75}});
  const Eigen::MatrixXd a = g.adjacency();
  CHECK(a(1, 1) == -0.75);
  CHECK(a(0, 0) == 0.0);
  CHECK(g.degree(1) == doctest::Approx(1.0 + 2.0 - 0.75));
  CHECK(g.degree(0) == 1.0);
}

TEST_CASE("generalized Laplacian of the single edge") {
  const WeightedGraph g = WeightedGraph::build(2, {{0, 1, 1.0}}, {});
  const Eigen::MatrixXd q1 = g.generalized_laplacian(1.0);
  CHECK(q1(0, 0) == 1.0);
  CHECK(q1(0, 1) == 1.0);
  CHECK(q1(1, 0) == 1.0);
  CHECK(q1(1, 1) == 1.0);
  CHECK_THROWS_AS(g.generalized_laplacian(0.0), Error);
}

TEST_CASE("generalized Laplacian of the 3-path") {
  const WeightedGraph g = path_graph(3).graph;
  const double q = 1.7;
  const Eigen::MatrixXd lap = g.generalized_laplacian(q);
  Eigen::MatrixXd expected(3, 3);
  expected << 1, q, 0, q, 2, q, 0, q, 1;
  CHECK((lap - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("looped path matches the shifted form 2I + (w-1)(ends) + qA") {
  const double omega = -2.25;
  const double q = 0.7;
  const WeightedGraph g = path_with_loops(5, omega).graph;
  const Eigen::MatrixXd lap = g.generalized_laplacian(q);
  Eigen::MatrixXd expected = 2.0 * Eigen::MatrixXd::Identity(5, 5);
  expected(0, 0) += omega - 1.0;
  expected(4, 4) += omega - 1.0;
  expected += q * path_graph(5).graph.offdiagonal_adjacency();
  CHECK((lap - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("wheel diagonal carries the loop weight once, independently of q") {
  const double alpha = 0.8;
  for (double q : {1.0, -1.0, 2.5}) {
    const Eigen::MatrixXd lap = looped_wheel(alpha).graph.generalized_laplacian(q);
    CHECK(lap(0, 0) == doctest::Approx(3.0 + alpha));
    CHECK(lap(1, 1) == doctest::Approx(3.0));
    CHECK(lap(4, 4) == doctest::Approx(4.0));
  }
}

TEST_CASE("Laplacian row sums vanish for loopless graphs") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const WeightedGraph g = random_simple_graph(rng, 2 + rep % 7);
    const Eigen::VectorXd sums = g.generalized_laplacian(-1.0).rowwise().sum();
    CHECK(sums.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("the Laplacian is linear in q off the degree part") {
  std::mt19937 rng(13);
  const WeightedGraph g = random_simple_graph(rng, 6);
  const double q1 = 0.4, q2 = -2.5;
  const Eigen::MatrixXd diff =
      g.generalized_laplacian(q1) - g.generalized_laplacian(q2);
  const Eigen::MatrixXd expected = (q1 - q2) * g.offdiagonal_adjacency();
  CHECK((diff - expected).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("LaplacianSpec bundles a graph with its walk parameter") {
  const LaplacianSpec spec{looped_wheel(0.25).graph, -1.0};
  const Eigen::MatrixXd lap = generalized_laplacian(spec);
  CHECK((lap - spec.graph.generalized_laplacian(-1.0)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((lap - lap.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("json decode of the single edge") {
  const WeightedGraph g =
      WeightedGraph::from_json_text(R"({"n":2,"edges":[[0,1,1.0]],"loops":[]})");
  CHECK(g == path_graph(2).graph);
}

TEST_CASE("canonical roundtrip is the identity") {
  const std::string canonical = cycle_graph(6).graph.to_json_text();
  CHECK(WeightedGraph::from_json_text(canonical).to_json_text() == canonical);

  // loops and edges come back sorted regardless of construction order
  const WeightedGraph g = WeightedGraph::build(
      4, {{2, 3, 1.0}, {0, 1, 2.5}, {1, 3, 0.5}}, {{3, 1.0}, {0, -1.0}});
  const WeightedGraph h = WeightedGraph::from_json_text(g.to_json_text());
  CHECK(g == h);
}

TEST_CASE("zero-weight loops are dropped from the canonical form") {
  const WeightedGraph g = WeightedGraph::from_json_text(
      R"({"n":2,"edges":[[0,1,1.0]],"loops":[[0,0.0]]})");
  CHECK(g.to_json_text() == path_graph(2).graph.to_json_text());
}

TEST_CASE("schema violations carry field diagnostics") {
  auto expect_violation = [](const std::string& text, const std::string& needle) {
    try {
      WeightedGraph::from_json_text(text);
      FAIL("schema accepted: ", text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SchemaViolation);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_violation(R"({"n":2,"edges":[[0,2,1.0]],"loops":[]})", "out of range");
  expect_violation(R"({"n":2,"edges":[[1,0,1.0]],"loops":[]})", "u < v");
  expect_violation(R"({"n":2,"edges":[[0,1,0.0]],"loops":[]})", "w must be");
  expect_violation(R"({"n":0,"edges":[],"loops":[]})", "n");
  expect_violation(R"({"n":2,"edges":[],"loops":[],"extra":1})", "unknown field");
  expect_violation(R"({"n":2,"edges":[]})", "required");
  expect_violation(R"({"n":2,"edges":[[0,1,1.0],[0,1,2.0]],"loops":[]})",
                   "DuplicateEdge");
  expect_violation(R"({"n":2,"edges":[],"loops":[[1,1.0],[1,2.0]]})", "Duplicate");
  expect_violation("not json", "");
}
