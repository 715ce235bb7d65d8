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

#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pst/errors.hpp"

namespace pst {

struct Edge {
  int u;      // u < v
  int v;
  double w;   // > 0
};

// Undirected weighted graph with optional real loop weights per vertex.
//
// Conventions:
//  - adjacency() carries edge weights off the diagonal and the loop weight
//    on the diagonal;
//  - the degree of a vertex is the sum of its incident edge weights plus its
//    loop weight (counted once);
//  - generalized_laplacian(q) is Delta + q * A0 where A0 is the off-diagonal
//    (loop-free) part of the adjacency matrix, so a loop contributes its
//    weight exactly once to the diagonal, independently of q.  With no loops
//    q = -1 gives the Laplacian and q = +1 the signless Laplacian.
class WeightedGraph {
 public:
  WeightedGraph() = default;  // empty placeholder; build() validates real graphs

  static WeightedGraph build(int n,
                             const std::vector<std::tuple<int, int, double>>& edges,
                             const std::vector<std::pair<int, double>>& loops);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<double>& loop_weights() const { return loops_; }

  double edge_weight(int u, int v) const;  // 0 when not adjacent
  double loop(int v) const { return loops_.at(v); }
  double degree(int v) const;
  bool has_edge(int u, int v) const { return edge_weight(u, v) != 0.0; }

  Eigen::MatrixXd adjacency() const;
  Eigen::MatrixXd offdiagonal_adjacency() const;
  Eigen::MatrixXd degree_matrix() const;
  Eigen::MatrixXd generalized_laplacian(double q) const;  // throws ZeroQ

  // Canonical JSON form: {"n": int, "edges": [[u, v, w], ...] sorted
  // lexicographically with u < v, "loops": [[v, w], ...] sorted by vertex,
  // zero-weight loops omitted.  Unknown fields are rejected on decode.
  static WeightedGraph from_json_text(const std::string& text);
  std::string to_json_text() const;

  bool operator==(const WeightedGraph& other) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;      // sorted by (u, v)
  std::vector<double> loops_;    // dense, size n_
};

// The walk Hamiltonian specification: a graph together with q != 0.
struct LaplacianSpec {
  WeightedGraph graph;
  double q;
};

Eigen::MatrixXd generalized_laplacian(const LaplacianSpec& spec);

}  // namespace pst
