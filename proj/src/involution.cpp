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

#include "pst/involution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pst {

Involution verify_involution(const WeightedGraph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::BadIndex, "permutation size does not match the graph");
  }
  std::vector<bool> hit(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || hit[v]) {
      throw Error(ErrorCode::BadIndex, "not a permutation of the vertex set");
    }
    hit[v] = true;
  }

  bool trivial = true;
  for (int v = 0; v < n; ++v) {
    if (perm[perm[v]] != v) {
      throw Error(ErrorCode::NotOrderTwo,
                  "vertex " + std::to_string(v) + " has orbit longer than two");
    }
    if (perm[v] != v) trivial = false;
  }
  if (trivial) {
    throw Error(ErrorCode::NotOrderTwo, "the identity is not a non-trivial involution");
  }

  for (const Edge& e : g.edges()) {
    const double mapped = g.edge_weight(perm[e.u], perm[e.v]);
    if (mapped != e.w) {
      std::ostringstream os;
      os << "edge (" << e.u << "," << e.v << ") maps to (" << perm[e.u] << ","
         << perm[e.v] << ") with weight " << mapped << " != " << e.w;
      throw Error(ErrorCode::NotAutomorphism, os.str());
    }
  }
  for (int v = 0; v < n; ++v) {
    if (g.loop(v) != g.loop(perm[v])) {
      std::ostringstream os;
      os << "loop weights differ on orbit (" << v << "," << perm[v] << ")";
      throw Error(ErrorCode::LoopWeightMismatch, os.str());
    }
  }

  Involution inv;
  inv.perm = perm;
  for (int v = 0; v < n; ++v) {
    if (perm[v] == v) {
      inv.fixed_set.push_back(v);
    } else if (v < perm[v]) {
      inv.transversal.push_back(v);
    }
  }
  return inv;
}

std::vector<int> parse_transpositions(const std::string& text, int n) {
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  if (text.empty()) return perm;

  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::UsageError, "transposition '" + item + "' is not a:b");
    }
    int a, b;
    try {
      a = std::stoi(item.substr(0, colon));
      b = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::UsageError, "transposition '" + item + "' is not a:b");
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw Error(ErrorCode::UsageError, "transposition '" + item + "' out of range");
    }
    if (a == b || perm[a] != a || perm[b] != b) {
      throw Error(ErrorCode::UsageError, "transposition '" + item + "' reuses a vertex");
    }
    perm[a] = b;
    perm[b] = a;
  }
  return perm;
}

namespace {

bool is_automorphism(const WeightedGraph& g, const std::vector<int>& perm) {
  for (const Edge& e : g.edges()) {
    if (g.edge_weight(perm[e.u], perm[e.v]) != e.w) return false;
  }
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    if (g.loop(v) != g.loop(perm[v])) return false;
  }
  return true;
}

void extend_involution(const WeightedGraph& g, std::vector<int>& perm, int next,
                       std::vector<std::vector<int>>& out) {
  const int n = g.vertex_count();
  while (next < n && perm[next] != -1) ++next;
  if (next == n) {
    bool trivial = true;
    for (int v = 0; v < n; ++v) {
      if (perm[v] != v) trivial = false;
    }
    if (!trivial && is_automorphism(g, perm)) out.push_back(perm);
    return;
  }
  perm[next] = next;
  extend_involution(g, perm, next + 1, out);
  perm[next] = -1;
  for (int partner = next + 1; partner < n; ++partner) {
    if (perm[partner] != -1) continue;
    perm[next] = partner;
    perm[partner] = next;
    extend_involution(g, perm, next + 1, out);
    perm[next] = -1;
    perm[partner] = -1;
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_involutions(const WeightedGraph& g) {
  if (g.vertex_count() > 10) {
    throw Error(ErrorCode::BadParameters,
                "brute-force involution enumeration is limited to n <= 10");
  }
  std::vector<int> perm(g.vertex_count(), -1);
  std::vector<std::vector<int>> out;
  extend_involution(g, perm, 0, out);
  return out;
}

HalfGraphDecomposition decompose_by_involution(const WeightedGraph& g, double q,
                                               const Involution& inv) {
  if (q == 0.0 || !std::isfinite(q)) {
    throw Error(ErrorCode::ZeroQ, "q must be a nonzero finite real");
  }
  const int n = g.vertex_count();
  const auto& t = inv.transversal;
  const auto& s = inv.fixed_set;
  const int nt = static_cast<int>(t.size());
  const int ns = static_cast<int>(s.size());

  HalfGraphDecomposition dec;
  dec.graph = g;
  dec.q = q;
  dec.involution = inv;

  const Eigen::MatrixXd lap = g.generalized_laplacian(q);

  dec.laplacian_g.resize(nt, nt);
  dec.a_phi.resize(nt, nt);
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < nt; ++j) {
      dec.laplacian_g(i, j) = lap(t[i], t[j]);
      dec.a_phi(i, j) = g.edge_weight(t[i], inv.apply(t[j]));
    }
  }
  dec.a_s.resize(nt, ns);
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < ns; ++j) dec.a_s(i, j) = g.edge_weight(t[i], s[j]);
  }
  dec.laplacian_h.resize(ns, ns);
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < ns; ++j) dec.laplacian_h(i, j) = lap(s[i], s[j]);
  }

  dec.minus_block = dec.laplacian_g - q * dec.a_phi;

  const int np = nt + ns;
  dec.plus_block.resize(np, np);
  dec.plus_block_sym.resize(np, np);
  dec.plus_block.topLeftCorner(nt, nt) = dec.laplacian_g + q * dec.a_phi;
  dec.plus_block_sym.topLeftCorner(nt, nt) = dec.plus_block.topLeftCorner(nt, nt);
  dec.plus_block.topRightCorner(nt, ns) = q * dec.a_s;
  dec.plus_block.bottomLeftCorner(ns, nt) = 2.0 * q * dec.a_s.transpose();
  dec.plus_block_sym.topRightCorner(nt, ns) = std::sqrt(2.0) * q * dec.a_s;
  dec.plus_block_sym.bottomLeftCorner(ns, nt) =
      std::sqrt(2.0) * q * dec.a_s.transpose();
  dec.plus_block.bottomRightCorner(ns, ns) = dec.laplacian_h;
  dec.plus_block_sym.bottomRightCorner(ns, ns) = dec.laplacian_h;

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  dec.basis = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < nt; ++i) {
    dec.basis(t[i], i) = inv_sqrt2;
    dec.basis(inv.apply(t[i]), i) = -inv_sqrt2;
    dec.basis(t[i], nt + i) = inv_sqrt2;
    dec.basis(inv.apply(t[i]), nt + i) = inv_sqrt2;
  }
  for (int j = 0; j < ns; ++j) dec.basis(s[j], 2 * nt + j) = 1.0;
  dec.sym_basis = dec.basis.rightCols(nt + ns);

  // Half graph: induced subgraph on the transversal, loops inherited.
  std::vector<std::tuple<int, int, double>> half_edges;
  std::vector<std::pair<int, double>> half_loops;
  for (int i = 0; i < nt; ++i) {
    if (g.loop(t[i]) != 0.0) half_loops.emplace_back(i, g.loop(t[i]));
    for (int j = i + 1; j < nt; ++j) {
      const double w = g.edge_weight(t[i], t[j]);
      if (w != 0.0) half_edges.emplace_back(i, j, w);
    }
  }
  dec.half_graph = WeightedGraph::build(nt, half_edges, half_loops);
  return dec;
}

double HalfGraphDecomposition::basis_orthogonality_error() const {
  const int n = graph.vertex_count();
  return (basis.transpose() * basis - Eigen::MatrixXd::Identity(n, n))
      .cwiseAbs()
      .maxCoeff();
}

double block_diagonalize_residual(const HalfGraphDecomposition& dec, double t) {
  const int n = dec.graph.vertex_count();
  const int nt = static_cast<int>(dec.involution.transversal.size());
  const int np = n - nt;

  const Spectrum full = decompose(dec.graph.generalized_laplacian(dec.q));
  const Eigen::MatrixXcd u_full = transition(full, t).entries;

  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(n, n);
  if (nt > 0) {
    const Spectrum minus = decompose(dec.minus_block);
    expected.topLeftCorner(nt, nt) = transition(minus, t).entries;
  }
  if (np > 0) {
    const Spectrum plus = decompose(dec.plus_block_sym);
    expected.bottomRightCorner(np, np) = transition(plus, t).entries;
  }

  const Eigen::MatrixXcd conjugated = dec.basis.transpose() * u_full * dec.basis;
  return (conjugated - expected).cwiseAbs().maxCoeff();
}

bool block_diagonalize_verify(const HalfGraphDecomposition& dec, double t) {
  return block_diagonalize_residual(dec, t) <= 1e-10 * dec.graph.vertex_count();
}

std::pair<PureState, PureState> lift_correspondence(const HalfGraphDecomposition& dec,
                                                    BlockSide side, int u, int v) {
  const auto& t = dec.involution.transversal;
  const auto in_transversal = [&](int w) {
    return std::find(t.begin(), t.end(), w) != t.end();
  };
  if (!in_transversal(u) || !in_transversal(v)) {
    throw Error(ErrorCode::VertexNotInTransversal,
                "lifted vertices must lie in the transversal");
  }
  const int n = dec.graph.vertex_count();
  const double sgn = side == BlockSide::Minus ? -1.0 : 1.0;
  auto lift = [&](int w) {
    return make_spair_state(n, w, dec.involution.apply(w), sgn);
  };
  return {lift(u), lift(v)};
}

bool factorization_check(const HalfGraphDecomposition& dec, double tol) {
  const Eigen::MatrixXd lap = dec.graph.generalized_laplacian(dec.q);
  const Spectrum whole = decompose(lap);
  const Spectrum minus = decompose(dec.minus_block);
  const Spectrum plus = decompose(dec.plus_block_sym);
  if (!spectrum_union_equal(whole, minus, plus, tol)) return false;

  // Eigenvectors of the minus block lift to the block form [c; -c; 0].
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dec.minus_block);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolveFailure, "eigensolve did not converge");
  }
  const auto& t = dec.involution.transversal;
  const int n = dec.graph.vertex_count();
  const int nt = static_cast<int>(t.size());
  for (int r = 0; r < nt; ++r) {
    const double mu = solver.eigenvalues()(r);
    Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < nt; ++i) {
      z(t[i]) = solver.eigenvectors()(i, r);
      z(dec.involution.apply(t[i])) = -solver.eigenvectors()(i, r);
    }
    z.normalize();
    if ((lap * z - mu * z).norm() > tol) return false;
  }
  return true;
}

}  // namespace pst
