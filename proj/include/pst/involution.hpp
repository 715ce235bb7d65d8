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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pst/graph.hpp"
#include "pst/states.hpp"

namespace pst {

// A non-trivial order-two automorphism phi with its fixed set S and a
// transversal T holding the smallest vertex of each 2-orbit.
// |V| = 2|T| + |S|.
struct Involution {
  std::vector<int> perm;
  std::vector<int> fixed_set;     // ascending
  std::vector<int> transversal;   // ascending

  int apply(int v) const { return perm.at(v); }
};

Involution verify_involution(const WeightedGraph& g, const std::vector<int>& perm);

// Parses "0:2,1:3" into a permutation of {0..n-1}; unlisted vertices fixed.
std::vector<int> parse_transpositions(const std::string& text, int n);

// Brute-force enumeration of all non-trivial involutive automorphisms.
// Exponential; restricted to n <= 10.
std::vector<std::vector<int>> enumerate_involutions(const WeightedGraph& g);

// Block data of the generalized Laplacian under the vertex ordering
// (T, phi(T), S):
//
//   L = [ L_G     q A_phi  q A_S ]
//       [ q A_phi L_G      q A_S ]
//       [ q A_S^T q A_S^T  L_H   ]
//
// minus_block       = L_G - q A_phi
// plus_block        = [ L_G + q A_phi   q A_S ; 2 q A_S^T  L_H ]
// plus_block_sym    = K^{-1} plus_block K with K = diag(I, sqrt(2) I),
//                     i.e. the sqrt(2)-coupled symmetric form.
// basis             = orthogonal M whose columns are (e_u - e_phi(u))/sqrt2
//                     for u in T, then (e_u + e_phi(u))/sqrt2, then e_s for
//                     s in S.
// sym_basis         = N, the plus/fixed columns of M.
struct HalfGraphDecomposition {
  WeightedGraph graph;
  double q = 0.0;
  Involution involution;
  WeightedGraph half_graph;   // induced on T, loops inherited

  Eigen::MatrixXd laplacian_g;    // L_G, indexed by T
  Eigen::MatrixXd a_phi;          // A_phi[i][j] = w(T_i, phi(T_j))
  Eigen::MatrixXd a_s;            // A_S[i][s]   = w(T_i, S_s)
  Eigen::MatrixXd laplacian_h;    // L_H, indexed by S
  Eigen::MatrixXd minus_block;
  Eigen::MatrixXd plus_block;
  Eigen::MatrixXd plus_block_sym;
  Eigen::MatrixXd basis;
  Eigen::MatrixXd sym_basis;

  double basis_orthogonality_error() const;
};

HalfGraphDecomposition decompose_by_involution(const WeightedGraph& g, double q,
                                               const Involution& inv);

// ||M^T U_L(t) M - diag(U_minus(t), U_plus_sym(t))||max; the block
// diagonalization passes when the residual is <= 1e-10 * dim.
double block_diagonalize_residual(const HalfGraphDecomposition& dec, double t);
bool block_diagonalize_verify(const HalfGraphDecomposition& dec, double t);

enum class BlockSide { Minus, Plus };

// Full-graph states whose transfer corresponds to vertex transfer between
// u, v (members of T) relative to the chosen block: pair states
// (e_u - e_phi(u))/sqrt2 for the minus block, plus states for the plus block.
std::pair<PureState, PureState> lift_correspondence(const HalfGraphDecomposition& dec,
                                                    BlockSide side, int u, int v);

// Eigenvalue-multiset factorization check plus the block eigenvector form
// ([c; -c; 0] for each minus-block eigenpair).
bool factorization_check(const HalfGraphDecomposition& dec, double tol = 1e-8);

}  // namespace pst
