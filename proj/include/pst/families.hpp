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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pst/graph.hpp"
#include "pst/states.hpp"

namespace pst {

// Symbolic transfer time, evaluated once q (and rho / l) are known.
struct TimeExpr {
  enum class Form { Literal, PiOver2Q, PiOverSqrt2Q, TwoPiL, PiOver2Rho };

  Form form = Form::Literal;
  double literal = 0.0;
  int l = 1;
  double rho = 1.0;

  static TimeExpr pi_over_2q() { return {Form::PiOver2Q, 0.0, 1, 1.0}; }
  static TimeExpr pi_over_sqrt2q() { return {Form::PiOverSqrt2Q, 0.0, 1, 1.0}; }
  static TimeExpr two_pi_l(int l) { return {Form::TwoPiL, 0.0, l, 1.0}; }
  static TimeExpr pi_over_2rho(double rho) { return {Form::PiOver2Rho, 0.0, 1, rho}; }
  static TimeExpr literal_time(double t) { return {Form::Literal, t, 1, 1.0}; }

  double evaluate(double q) const;
  std::string text() const;
};

struct StateSpec {
  StateKind kind = StateKind::Vertex;
  int a = -1;
  int b = -1;
  double s = 0.0;

  static StateSpec vertex(int a) { return {StateKind::Vertex, a, -1, 0.0}; }
  static StateSpec pair(int a, int b) { return {StateKind::SPair, a, b, -1.0}; }
  static StateSpec plus(int a, int b) { return {StateKind::SPair, a, b, +1.0}; }

  PureState realize(int n) const;
  std::string text() const;
};

// Designated transfer a constructed family is built to exhibit.
struct Prediction {
  StateSpec from;
  StateSpec to;
  TimeExpr time;
  // Transfer holds only at this q when set (e.g. Laplacian-only rows).
  std::optional<double> required_q;
  std::string note;
};

struct GeneratedFamily {
  std::string name;
  WeightedGraph graph;
  std::optional<std::vector<int>> involution;  // documented phi when one exists
  std::optional<Prediction> prediction;
  std::string labeling;                        // how vertices are numbered

  std::string metadata_json_text() const;      // sidecar document
};

// ---- generators ------------------------------------------------------------

GeneratedFamily path_graph(int n);
GeneratedFamily cycle_graph(int n);
GeneratedFamily complete_graph(int n);
GeneratedFamily complete_bipartite(int m, int n);

// Path with loops omega1 / omega2 on the two end vertices.
GeneratedFamily path_with_loops(int n, double omega1, double omega2);
inline GeneratedFamily path_with_loops(int n, double omega) {
  return path_with_loops(n, omega, omega);
}

// P_n (n >= 6) plus edges {1, n-3} and {2, n-2} plus weight-2 loops on the
// end vertices; pair transfer (e_0 - e_{n-1}) -> (e_1 - e_{n-2}) at pi/(2q).
GeneratedFamily chorded_looped_path(int n);

// C_n with an extra edge of weight rho between vertices 0 and b (weights
// merge when {0, b} is already a cycle edge).
GeneratedFamily perturbed_cycle(int n, double rho, int b);

// C_5 with weight-1 loops at vertices 1 and 4; Laplacian pair transfer
// (e_1 - e_4) -> (e_2 - e_3) at pi/2.
GeneratedFamily c5_with_loops();

// Cycle (length 6 or 8) with a path of tail_len vertices attached at the
// vertex antipodal to 0.  Pair transfer across the reflection at pi/(2q)
// (length 6) or pi/(sqrt2 q) (length 8).
GeneratedFamily cycle_with_tail(int cycle_len, int tail_len);

enum class PlanarCore { P5, P7 };

// Core path (a b u d c for P5; a . b u d . c for P7) with a subgraph H hung
// from the middle vertex u and loops of weight loop_weight at a and c.
// H defaults to a single vertex.
GeneratedFamily planar_attach(PlanarCore core, const std::optional<WeightedGraph>& h,
                              double loop_weight);

// Two copies of g joined by the matching {v, v+n : v in matched}, with loop
// weights maxdeg(g) - deg(u) on matched vertices and maxdeg(g) - deg(u) + 1 + q
// elsewhere.  (a, b, tau_g) is g's adjacency-transfer pair and time; the plus
// states over the copies transfer at tau_g / q.
GeneratedFamily two_copies_plus_matching(const WeightedGraph& g,
                                         const std::vector<int>& matched,
                                         int a, int b, double tau_g, double q);

// 4-cycle rim 0-1-3-2-0 with hub 4 and loops alpha at 0 and 2.
GeneratedFamily looped_wheel(double alpha);

// The three two-copy showcase graphs (base K_2 / C_4 / P_3) with the loop
// weights as drawn: 1+q, 1+q, q.
GeneratedFamily two_copy_showcase(int which, double q);  // which in {1, 2, 3}

// Cycle with inserted chords realizing pair transfer across a reflection.
// n = 6: chords {0, n-2}, {1, n-1}; Laplacian-only transfer at pi/2.
// n = 8: four distance-2 chords symmetric about the two fixed edges;
//        transfer at pi/(2q) for every q.
// Other sizes rejected: the chord patterns do not extend (see module tests).
GeneratedFamily cycle_plus_two_edges(int n);

// C_n (n >= 7) with chords {2, n-3}, {3, n-2} and weight-1 loops at vertices
// 1 and n-1; pair transfer (e_1 - e_{n-1}) -> (e_2 - e_{n-2}) at pi/(2q).
GeneratedFamily cycle_plus_four_edges(int n);

// K_{m,n} (m >= n >= 2) minus the matching {{2i, 2i+1} : i < k}, plus, when
// m > n, edges joining vertices 0 and 2 to the m-n trailing vertices of the
// larger side.  Even indices below 2n and all indices >= 2n form the larger
// side.  Pair transfer (e_0 - e_2) -> (e_1 - e_3) at pi/(2q).
GeneratedFamily kmn_minus_matching_plus_e(int m, int n, int k);

// ---- closed-form cycle spectrum --------------------------------------------

// Eigenvalues theta_j = 2 + 2 zeta cos(2 j pi / n) of C_n relative to the
// Laplacian (zeta = -1) or signless Laplacian (zeta = +1), with the explicit
// orthonormal cosine/sine eigenbasis.
class CycleOracle {
 public:
  CycleOracle(int n, int zeta);  // n >= 3, zeta in {-1, +1}; throws BadN

  int n() const { return n_; }
  int zeta() const { return zeta_; }

  double eigenvalue(int j) const;            // 0 <= j <= n/2
  Eigen::VectorXd eigenvector(int j) const;  // 0 <= j <= n-1
  Eigen::MatrixXd basis() const;             // columns v_0 .. v_{n-1}
  std::vector<double> eigenvalue_multiset() const;  // size n, ascending

  Eigen::VectorXd perturbation_vector(int b) const;  // e_0 + zeta e_b
  double w_dot_v(int b, int j) const;                // closed form
  // Laplacian / signless Laplacian of C_n plus a weight-rho edge {0, b}.
  Eigen::MatrixXd perturbed_matrix(double rho, int b) const;

 private:
  int n_;
  int zeta_;
};

CycleOracle cycle_closed_spectrum(int n, int zeta);

// Eigenvector of the rank-one-perturbed cycle matrix for theta_j,
// 1 <= j < n/2: z = v_j + v_{n-j} when w is orthogonal to both, else
// z = (w.v_{n-j}) v_j - (w.v_j) v_{n-j}.
Eigen::VectorXd perturbed_eigvec(const CycleOracle& oracle, double rho, int b, int j);

// Entry formulas for the two branches (used to cross-check perturbed_eigvec).
double perturbed_eigvec_entry(const CycleOracle& oracle, int b, int j, int k);

// ---- arithmetic transfer predicates ----------------------------------------

enum class MatrixKind { Laplacian, SignlessLaplacian };

// Candidate endpoints for vertex transfer in the edge-perturbed cycle
// C_n(rho, b); empty when the integrality conditions fail.  Vertices are
// reduced mod n.  Requires n >= 7, 1 <= b <= n-1.
std::set<int> cycle_vertex_candidates(int n, int b, MatrixKind which);

// Admissible values of k + l for pair transfer from (e_k - e_l)/sqrt2 in
// C_n(rho, b); empty when impossible.  Requires n >= 13, 1 <= b <= n-1.
std::set<int> cycle_pair_sums(int n, int b, MatrixKind which);

// The (q, tau) making the loopless P_3 transfer across its ends:
// q = sqrt((k^2 - l^2) / (8 l^2)), tau = 2 pi l, for k > l >= 1 with
// k, l of opposite parity.
struct PathTransferParams {
  double q;
  double tau;
};

PathTransferParams path_end_transfer_params(int k, int l);

// Loop weight making the adjacency walk on P_n(w) match the generalized
// Laplacian walk on P_n(omega): (omega - 1) / q.
double adjacency_equivalent_loop_weight(double omega, double q);

}  // namespace pst
