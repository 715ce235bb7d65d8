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

#include "pst/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace pst {

double TimeExpr::evaluate(double q) const {
  switch (form) {
    case Form::Literal: return literal;
    case Form::PiOver2Q: return M_PI / (2.0 * q);
    case Form::PiOverSqrt2Q: return M_PI / (std::sqrt(2.0) * q);
    case Form::TwoPiL: return 2.0 * M_PI * l;
    case Form::PiOver2Rho: return M_PI / (2.0 * rho);
  }
  return literal;
}

std::string TimeExpr::text() const {
  std::ostringstream os;
  switch (form) {
    case Form::Literal: os << literal; break;
    case Form::PiOver2Q: os << "pi/(2q)"; break;
    case Form::PiOverSqrt2Q: os << "pi/(sqrt2*q)"; break;
    case Form::TwoPiL: os << "2*pi*" << l; break;
    case Form::PiOver2Rho: os << "pi/(2*" << rho << ")"; break;
  }
  return os.str();
}

PureState StateSpec::realize(int n) const {
  if (kind == StateKind::Vertex) return make_vertex_state(n, a);
  return make_spair_state(n, a, b, s);
}

std::string StateSpec::text() const {
  std::ostringstream os;
  if (kind == StateKind::Vertex) {
    os << "vertex:" << a;
  } else if (s == -1.0) {
    os << "pair:" << a << "," << b;
  } else if (s == 1.0) {
    os << "plus:" << a << "," << b;
  } else {
    os << "spair:" << a << "," << b << "," << s;
  }
  return os.str();
}

std::string GeneratedFamily::metadata_json_text() const {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["name"] = name;
  doc["labeling"] = labeling;
  if (involution) {
    std::ostringstream os;
    bool first = true;
    for (size_t v = 0; v < involution->size(); ++v) {
      const int w = (*involution)[v];
      if (w > static_cast<int>(v)) {
        if (!first) os << ",";
        os << v << ":" << w;
        first = false;
      }
    }
    doc["involution"] = os.str();
  } else {
    doc["involution"] = nullptr;
  }
  if (prediction) {
    doc["designated_states"] =
        nlohmann::json::array({prediction->from.text(), prediction->to.text()});
    doc["predicted_time_expr"] = prediction->time.text();
    if (prediction->required_q) {
      doc["required_q"] = *prediction->required_q;
    } else {
      doc["required_q"] = nullptr;
    }
    doc["reference"] = prediction->note;
  } else {
    doc["designated_states"] = nlohmann::json::array();
    doc["predicted_time_expr"] = nullptr;
    doc["required_q"] = nullptr;
    doc["reference"] = nullptr;
  }
  return doc.dump();
}

namespace {

using EdgeList = std::vector<std::tuple<int, int, double>>;
using LoopList = std::vector<std::pair<int, double>>;

EdgeList path_edges(int n, int offset = 0) {
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(offset + i, offset + i + 1, 1.0);
  return edges;
}

EdgeList cycle_edges(int n, int offset = 0) {
  EdgeList edges = path_edges(n, offset);
  if (n >= 3) edges.emplace_back(offset, offset + n - 1, 1.0);
  return edges;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return perm;
}

}  // namespace

GeneratedFamily path_graph(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "path needs n >= 1");
  GeneratedFamily fam;
  fam.name = "path";
  fam.graph = WeightedGraph::build(n, path_edges(n), {});
  fam.labeling = "vertices 0..n-1 in path order";
  if (n == 2) {
    fam.prediction = Prediction{StateSpec::vertex(0), StateSpec::vertex(1),
                                TimeExpr::pi_over_2q(), std::nullopt,
                                "end-to-end vertex transfer on the two-vertex path"};
  }
  return fam;
}

GeneratedFamily cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::BadParameters, "cycle needs n >= 3");
  GeneratedFamily fam;
  fam.name = "cycle";
  fam.graph = WeightedGraph::build(n, cycle_edges(n), {});
  fam.labeling = "vertices 0..n-1 in cycle order";
  if (n == 4 || n == 6 || n == 8) {
    std::vector<int> perm = identity_perm(n);
    if (n == 4) {
      perm = {1, 0, 3, 2};  // reflection through the two edge midpoints
      fam.prediction = Prediction{StateSpec::pair(0, 1), StateSpec::pair(3, 2),
                                  TimeExpr::pi_over_2q(), std::nullopt,
                                  "pair transfer across the 4-cycle reflection"};
    } else {
      for (int j = 1; j < n; ++j) perm[j] = n - j;  // fixes 0 and n/2
      if (n == 6) {
        fam.prediction = Prediction{StateSpec::pair(1, 5), StateSpec::pair(2, 4),
                                    TimeExpr::pi_over_2q(), std::nullopt,
                                    "pair transfer across the 6-cycle reflection"};
      } else {
        fam.prediction = Prediction{StateSpec::pair(1, 7), StateSpec::pair(3, 5),
                                    TimeExpr::pi_over_sqrt2q(), std::nullopt,
                                    "pair transfer across the 8-cycle reflection"};
      }
    }
    fam.involution = perm;
  }
  return fam;
}

GeneratedFamily complete_graph(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "complete graph needs n >= 1");
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j, 1.0);
  }
  GeneratedFamily fam;
  fam.name = "complete";
  fam.graph = WeightedGraph::build(n, edges, {});
  fam.labeling = "vertices 0..n-1";
  return fam;
}

GeneratedFamily complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::BadParameters, "sides must be >= 1");
  EdgeList edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j, 1.0);
  }
  GeneratedFamily fam;
  fam.name = "complete_bipartite";
  fam.graph = WeightedGraph::build(m + n, edges, {});
  fam.labeling = "side A = 0..m-1, side B = m..m+n-1";
  return fam;
}

GeneratedFamily path_with_loops(int n, double omega1, double omega2) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "path needs n >= 1");
  LoopList loops;
  if (omega1 != 0.0) loops.emplace_back(0, omega1);
  if (n > 1 && omega2 != 0.0) loops.emplace_back(n - 1, omega2);
  GeneratedFamily fam;
  fam.name = "path_with_loops";
  fam.graph = WeightedGraph::build(n, path_edges(n), loops);
  fam.labeling = "vertices 0..n-1 in path order, loops on the ends";

  const bool symmetric = omega1 == omega2;
  if (symmetric && n == 2) {
    fam.prediction = Prediction{StateSpec::vertex(0), StateSpec::vertex(1),
                                TimeExpr::pi_over_2q(), std::nullopt,
                                "vertex transfer across the looped edge"};
  } else if (symmetric && n == 3 && omega1 == 1.0) {
    fam.involution = std::vector<int>{2, 1, 0};
    fam.prediction = Prediction{StateSpec::pair(0, 1), StateSpec::pair(1, 2),
                                TimeExpr::pi_over_sqrt2q(), std::nullopt,
                                "pair transfer on the looped 3-path"};
  } else if (symmetric && n == 4) {
    const double q_needed = 1.0 - omega1;
    if (q_needed != 0.0) {
      fam.involution = std::vector<int>{3, 2, 1, 0};
      fam.prediction = Prediction{StateSpec::pair(0, 3), StateSpec::pair(1, 2),
                                  TimeExpr::pi_over_2q(), q_needed,
                                  "pair transfer on the looped 4-path"};
    }
  } else if (symmetric && n == 5 && omega1 == 1.0) {
    fam.involution = std::vector<int>{4, 3, 2, 1, 0};
    fam.prediction = Prediction{StateSpec::pair(0, 4), StateSpec::pair(1, 3),
                                TimeExpr::pi_over_2q(), std::nullopt,
                                "pair transfer on the looped 5-path"};
  } else if (symmetric && n == 7 && omega1 == 1.0) {
    fam.involution = std::vector<int>{6, 5, 4, 3, 2, 1, 0};
    fam.prediction = Prediction{StateSpec::pair(0, 6), StateSpec::pair(2, 4),
                                TimeExpr::pi_over_sqrt2q(), std::nullopt,
                                "pair transfer on the looped 7-path"};
  }
  return fam;
}

GeneratedFamily chorded_looped_path(int n) {
  if (n < 6) throw Error(ErrorCode::BadParameters, "construction needs n >= 6");
  EdgeList edges = path_edges(n);
  edges.emplace_back(1, n - 3, 1.0);
  edges.emplace_back(2, n - 2, 1.0);
  LoopList loops{{0, 2.0}, {n - 1, 2.0}};
  GeneratedFamily fam;
  fam.name = "chorded_looped_path";
  fam.graph = WeightedGraph::build(n, edges, loops);
  fam.labeling =
      "path 0..n-1 with chords {1,n-3}, {2,n-2} and weight-2 loops at 0, n-1";
  std::vector<int> perm = identity_perm(n);
  std::swap(perm[0], perm[n - 1]);
  std::swap(perm[1], perm[n - 2]);
  fam.involution = perm;
  fam.prediction = Prediction{StateSpec::pair(0, n - 1), StateSpec::pair(1, n - 2),
                              TimeExpr::pi_over_2q(), std::nullopt,
                              "pair transfer on the chord-augmented looped path"};
  return fam;
}

GeneratedFamily perturbed_cycle(int n, double rho, int b) {
  if (n < 3) throw Error(ErrorCode::BadParameters, "cycle needs n >= 3");
  if (!(rho > 0.0)) throw Error(ErrorCode::BadParameters, "rho must be positive");
  if (b < 1 || b > n - 1) throw Error(ErrorCode::BadParameters, "need 1 <= b <= n-1");

  EdgeList edges;
  const bool parallel = b == 1 || b == n - 1;
  for (auto [u, v, w] : cycle_edges(n)) {
    if (u == 0 && v == b) w += rho;  // extra edge parallels a cycle edge
    edges.emplace_back(u, v, w);
  }
  if (!parallel) edges.emplace_back(0, b, rho);

  GeneratedFamily fam;
  fam.name = "perturbed_cycle";
  fam.graph = WeightedGraph::build(n, edges, {});
  fam.labeling = "cycle 0..n-1 plus weight-rho edge {0,b}";

  const bool integral_rho = rho == std::floor(rho);
  if (n == 3 && b == 1) {
    fam.prediction = Prediction{StateSpec::pair(0, 2), StateSpec::pair(1, 2),
                                TimeExpr::pi_over_2rho(rho), -1.0,
                                "pair transfer in the weighted triangle"};
  } else if (n == 4 && b == 1) {
    fam.involution = std::vector<int>{1, 0, 3, 2};
    fam.prediction = Prediction{StateSpec::pair(0, 1), StateSpec::pair(2, 3),
                                TimeExpr::literal_time(M_PI / 2.0), 1.0,
                                "pair transfer in the perturbed 4-cycle"};
  } else if (n == 4 && b == 2 && integral_rho) {
    const bool odd = std::fmod(rho, 2.0) == 1.0;
    fam.prediction = Prediction{StateSpec::pair(0, 1),
                                odd ? StateSpec::pair(0, 3) : StateSpec::pair(2, 3),
                                TimeExpr::literal_time(M_PI / 2.0), -1.0,
                                "pair transfer in the chord-perturbed 4-cycle"};
  }
  return fam;
}

GeneratedFamily c5_with_loops() {
  GeneratedFamily fam;
  fam.name = "c5_with_loops";
  fam.graph = WeightedGraph::build(5, cycle_edges(5), {{1, 1.0}, {4, 1.0}});
  fam.labeling = "cycle 0..4 with weight-1 loops at 1 and 4";
  fam.involution = std::vector<int>{0, 4, 3, 2, 1};
  fam.prediction = Prediction{StateSpec::pair(1, 4), StateSpec::pair(2, 3),
                              TimeExpr::literal_time(M_PI / 2.0), -1.0,
                              "pair transfer on the looped 5-cycle"};
  return fam;
}

GeneratedFamily cycle_with_tail(int cycle_len, int tail_len) {
  if (cycle_len != 6 && cycle_len != 8) {
    throw Error(ErrorCode::BadParameters, "cycle length must be 6 or 8");
  }
  if (tail_len < 1) throw Error(ErrorCode::BadParameters, "tail length must be >= 1");

  EdgeList edges = cycle_edges(cycle_len);
  const int hub = cycle_len / 2;
  edges.emplace_back(hub, cycle_len, 1.0);
  for (int i = 0; i + 1 < tail_len; ++i) {
    edges.emplace_back(cycle_len + i, cycle_len + i + 1, 1.0);
  }
  GeneratedFamily fam;
  fam.name = "cycle_with_tail";
  fam.graph = WeightedGraph::build(cycle_len + tail_len, edges, {});
  fam.labeling = "cycle 0..len-1, tail len.. attached at vertex len/2";

  const int n = cycle_len + tail_len;
  std::vector<int> perm = identity_perm(n);
  for (int j = 1; j < cycle_len; ++j) perm[j] = cycle_len - j;
  fam.involution = perm;
  if (cycle_len == 6) {
    fam.prediction = Prediction{StateSpec::pair(1, 5), StateSpec::pair(2, 4),
                                TimeExpr::pi_over_2q(), std::nullopt,
                                "pair transfer across the tailed 6-cycle"};
  } else {
    fam.prediction = Prediction{StateSpec::pair(1, 7), StateSpec::pair(3, 5),
                                TimeExpr::pi_over_sqrt2q(), std::nullopt,
                                "pair transfer across the tailed 8-cycle"};
  }
  return fam;
}

GeneratedFamily planar_attach(PlanarCore core, const std::optional<WeightedGraph>& h,
                              double loop_weight) {
  const int core_len = core == PlanarCore::P5 ? 5 : 7;
  const int mid = core_len / 2;
  EdgeList edges = path_edges(core_len);
  LoopList loops;
  if (loop_weight != 0.0) {
    loops.emplace_back(0, loop_weight);
    loops.emplace_back(core_len - 1, loop_weight);
  }

  WeightedGraph hub = h ? *h : WeightedGraph::build(1, {}, {});
  const int n = core_len + hub.vertex_count();
  for (const Edge& e : hub.edges()) {
    edges.emplace_back(core_len + e.u, core_len + e.v, e.w);
  }
  for (int v = 0; v < hub.vertex_count(); ++v) {
    if (hub.loop(v) != 0.0) loops.emplace_back(core_len + v, hub.loop(v));
  }
  edges.emplace_back(mid, core_len, 1.0);

  GeneratedFamily fam;
  fam.name = core == PlanarCore::P5 ? "planar_attach_p5" : "planar_attach_p7";
  fam.graph = WeightedGraph::build(n, edges, loops);
  fam.labeling = "core path 0..core-1 (middle = core/2), attached graph from core";

  std::vector<int> perm = identity_perm(n);
  for (int j = 0; j < core_len; ++j) perm[j] = core_len - 1 - j;
  fam.involution = perm;
  if (loop_weight == 1.0) {
    if (core == PlanarCore::P5) {
      fam.prediction = Prediction{StateSpec::pair(0, 4), StateSpec::pair(1, 3),
                                  TimeExpr::pi_over_2q(), std::nullopt,
                                  "pair transfer across the attached 5-path core"};
    } else {
      fam.prediction = Prediction{StateSpec::pair(0, 6), StateSpec::pair(2, 4),
                                  TimeExpr::pi_over_sqrt2q(), std::nullopt,
                                  "pair transfer across the attached 7-path core"};
    }
  }
  return fam;
}

GeneratedFamily two_copies_plus_matching(const WeightedGraph& g,
                                         const std::vector<int>& matched, int a,
                                         int b, double tau_g, double q) {
  const int n = g.vertex_count();
  if (q == 0.0) throw Error(ErrorCode::ZeroQ, "q must be nonzero");
  if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
    throw Error(ErrorCode::BadParameters, "transfer pair must be two distinct vertices");
  }
  if (matched.empty() || static_cast<int>(matched.size()) >= n) {
    throw Error(ErrorCode::BadParameters, "matching size must be in 1..n-1");
  }
  std::vector<bool> is_matched(n, false);
  for (int v : matched) {
    if (v < 0 || v >= n || is_matched[v]) {
      throw Error(ErrorCode::BadParameters, "matched vertices must be distinct");
    }
    is_matched[v] = true;
  }

  double maxdeg = 0.0;
  for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));

  EdgeList edges;
  for (const Edge& e : g.edges()) {
    edges.emplace_back(e.u, e.v, e.w);
    edges.emplace_back(e.u + n, e.v + n, e.w);
  }
  for (int v : matched) edges.emplace_back(v, v + n, 1.0);

  LoopList loops;
  for (int v = 0; v < n; ++v) {
    double w = g.loop(v) + maxdeg - g.degree(v);
    if (!is_matched[v]) w += 1.0 + q;
    if (w != 0.0) {
      loops.emplace_back(v, w);
      loops.emplace_back(v + n, w);
    }
  }

  GeneratedFamily fam;
  fam.name = "two_copies_plus_matching";
  fam.graph = WeightedGraph::build(2 * n, edges, loops);
  fam.labeling = "first copy 0..n-1, second copy n..2n-1, matching {v, v+n}";
  std::vector<int> perm(2 * n);
  for (int v = 0; v < n; ++v) {
    perm[v] = v + n;
    perm[v + n] = v;
  }
  fam.involution = perm;
  fam.prediction = Prediction{StateSpec::plus(a, a + n), StateSpec::plus(b, b + n),
                              TimeExpr::literal_time(tau_g / q), q,
                              "plus transfer lifted from the base adjacency walk"};
  return fam;
}

GeneratedFamily looped_wheel(double alpha) {
  EdgeList edges{{0, 1, 1.0}, {0, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0},
                 {0, 4, 1.0}, {1, 4, 1.0}, {2, 4, 1.0}, {3, 4, 1.0}};
  LoopList loops;
  if (alpha != 0.0) {
    loops.emplace_back(0, alpha);
    loops.emplace_back(2, alpha);
  }
  GeneratedFamily fam;
  fam.name = "wheel_with_loops";
  fam.graph = WeightedGraph::build(5, edges, loops);
  fam.labeling = "rim 4-cycle 0-1-3-2-0, hub 4, loops at 0 and 2";
  fam.involution = std::vector<int>{2, 3, 0, 1, 4};
  return fam;
}

GeneratedFamily two_copy_showcase(int which, double q) {
  if (q == 0.0) throw Error(ErrorCode::ZeroQ, "q must be nonzero");
  GeneratedFamily fam;
  switch (which) {
    case 1: {
      EdgeList edges{{0, 1, 1.0}, {2, 3, 1.0}, {1, 3, 1.0}};
      LoopList loops;
      if (1.0 + q != 0.0) {
        loops.emplace_back(0, 1.0 + q);
        loops.emplace_back(2, 1.0 + q);
      }
      fam.graph = WeightedGraph::build(4, edges, loops);
      fam.name = "two_edges_plus_matching";
      fam.labeling = "copies {0,1} and {2,3}, matching {1,3}, loops 1+q at 0 and 2";
      fam.involution = std::vector<int>{2, 3, 0, 1};
      fam.prediction = Prediction{StateSpec::plus(0, 2), StateSpec::plus(1, 3),
                                  TimeExpr::pi_over_2q(), q,
                                  "plus transfer over doubled single edge"};
      break;
    }
    case 2: {
      EdgeList edges = cycle_edges(4);
      for (auto [u, v, w] : cycle_edges(4)) edges.emplace_back(u + 4, v + 4, w);
      edges.emplace_back(1, 5, 1.0);
      edges.emplace_back(2, 6, 1.0);
      edges.emplace_back(3, 7, 1.0);
      LoopList loops;
      if (1.0 + q != 0.0) {
        loops.emplace_back(0, 1.0 + q);
        loops.emplace_back(4, 1.0 + q);
      }
      fam.graph = WeightedGraph::build(8, edges, loops);
      fam.name = "two_squares_plus_matching";
      fam.labeling =
          "4-cycles 0-1-2-3 and 4-5-6-7, matching {1,5},{2,6},{3,7}, loops at 0, 4";
      fam.involution = std::vector<int>{4, 5, 6, 7, 0, 1, 2, 3};
      fam.prediction = Prediction{StateSpec::plus(1, 5), StateSpec::plus(3, 7),
                                  TimeExpr::pi_over_2q(), q,
                                  "plus transfer over doubled 4-cycle"};
      break;
    }
    case 3: {
      EdgeList edges{{0, 1, 1.0}, {1, 2, 1.0}, {3, 4, 1.0},
                     {4, 5, 1.0}, {0, 3, 1.0}, {2, 5, 1.0}};
      LoopList loops{{1, q}, {4, q}};
      fam.graph = WeightedGraph::build(6, edges, loops);
      fam.name = "two_paths_plus_matching";
      fam.labeling =
          "3-paths 0-1-2 and 3-4-5, matching {0,3},{2,5}, loops q at the middles";
      fam.involution = std::vector<int>{3, 4, 5, 0, 1, 2};
      fam.prediction = Prediction{StateSpec::plus(0, 3), StateSpec::plus(2, 5),
                                  TimeExpr::pi_over_sqrt2q(), q,
                                  "plus transfer over doubled 3-path"};
      break;
    }
    default:
      throw Error(ErrorCode::BadParameters, "variant must be 1, 2 or 3");
  }
  return fam;
}

GeneratedFamily cycle_plus_two_edges(int n) {
  GeneratedFamily fam;
  fam.name = "cycle_plus_two_edges";
  if (n == 6) {
    EdgeList edges = cycle_edges(6);
    edges.emplace_back(0, 4, 1.0);
    edges.emplace_back(1, 5, 1.0);
    fam.graph = WeightedGraph::build(6, edges, {});
    fam.labeling = "cycle 0..5 plus chords {0,4} and {1,5}; 0 and 5 fixed";
    fam.involution = std::vector<int>{0, 4, 3, 2, 1, 5};
    fam.prediction = Prediction{StateSpec::pair(1, 4), StateSpec::pair(2, 3),
                                TimeExpr::literal_time(M_PI / 2.0), -1.0,
                                "pair transfer from two inserted chords"};
  } else if (n == 8) {
    EdgeList edges = cycle_edges(8);
    edges.emplace_back(0, 2, 1.0);
    edges.emplace_back(1, 7, 1.0);
    edges.emplace_back(3, 5, 1.0);
    edges.emplace_back(4, 6, 1.0);
    fam.graph = WeightedGraph::build(8, edges, {});
    fam.labeling =
        "cycle 0..7 plus distance-2 chords symmetric about edges {0,1} and {4,5}";
    fam.involution = std::vector<int>{1, 0, 7, 6, 5, 4, 3, 2};  // j -> 1-j mod 8
    fam.prediction = Prediction{StateSpec::pair(7, 2), StateSpec::pair(6, 3),
                                TimeExpr::pi_over_2q(), std::nullopt,
                                "pair transfer from four inserted chords"};
  } else {
    // The two chord patterns are size-specific: the half graph stops
    // decoupling for other n (checked in the module tests).
    throw Error(ErrorCode::BadParameters, "supported cycle lengths are 6 and 8");
  }
  return fam;
}

GeneratedFamily cycle_plus_four_edges(int n) {
  if (n < 7) throw Error(ErrorCode::BadParameters, "construction needs n >= 7");
  EdgeList edges = cycle_edges(n);
  edges.emplace_back(2, n - 3, 1.0);
  edges.emplace_back(3, n - 2, 1.0);
  LoopList loops{{1, 1.0}, {n - 1, 1.0}};
  GeneratedFamily fam;
  fam.name = "cycle_plus_four_edges";
  fam.graph = WeightedGraph::build(n, edges, loops);
  fam.labeling =
      "cycle 0..n-1 plus chords {2,n-3},{3,n-2} and weight-1 loops at 1, n-1";
  std::vector<int> perm = identity_perm(n);
  for (int j = 1; j < n; ++j) perm[j] = n - j;
  fam.involution = perm;
  fam.prediction = Prediction{StateSpec::pair(1, n - 1), StateSpec::pair(2, n - 2),
                              TimeExpr::pi_over_2q(), std::nullopt,
                              "pair transfer from two chords and two loops"};
  return fam;
}

GeneratedFamily kmn_minus_matching_plus_e(int m, int n, int k) {
  if (n < 2 || m < n) throw Error(ErrorCode::BadParameters, "need m >= n >= 2");
  if (k < 2 || k > n) throw Error(ErrorCode::BadParameters, "need 2 <= k <= n");

  const int total = m + n;
  // Side A (size m): even indices below 2n and everything from 2n up.
  // Side B (size n): odd indices below 2n.
  auto side_a = [&](int v) { return v >= 2 * n || v % 2 == 0; };

  EdgeList edges;
  for (int u = 0; u < total; ++u) {
    for (int v = u + 1; v < total; ++v) {
      if (side_a(u) == side_a(v)) continue;
      const bool in_matching =
          v == u + 1 && u % 2 == 0 && u < 2 * k;  // pairs {2i, 2i+1}, i < k
      if (!in_matching) edges.emplace_back(u, v, 1.0);
    }
  }
  for (int t = 2 * n; t < total; ++t) {
    edges.emplace_back(0, t, 1.0);
    edges.emplace_back(2, t, 1.0);
  }

  GeneratedFamily fam;
  fam.name = "kmn_minus_matching";
  fam.graph = WeightedGraph::build(total, edges, {});
  fam.labeling =
      "side A = even indices < 2n plus indices >= 2n, side B = odd indices < 2n; "
      "matching {2i,2i+1} removed, extra edges join 0 and 2 to the trailing side-A "
      "vertices";
  std::vector<int> perm = identity_perm(total);
  std::swap(perm[0], perm[2]);
  std::swap(perm[1], perm[3]);
  fam.involution = perm;
  fam.prediction = Prediction{StateSpec::pair(0, 2), StateSpec::pair(1, 3),
                              TimeExpr::pi_over_2q(), std::nullopt,
                              "pair transfer in the matched bipartite construction"};
  return fam;
}

// ---- closed-form cycle spectrum --------------------------------------------

CycleOracle::CycleOracle(int n, int zeta) : n_(n), zeta_(zeta) {
  if (n < 3) throw Error(ErrorCode::BadN, "cycle oracle needs n >= 3");
  if (zeta != -1 && zeta != 1) {
    throw Error(ErrorCode::BadParameters, "zeta must be -1 or +1");
  }
}

CycleOracle cycle_closed_spectrum(int n, int zeta) { return CycleOracle(n, zeta); }

double CycleOracle::eigenvalue(int j) const {
  if (j < 0 || 2 * j > n_) throw Error(ErrorCode::BadIndex, "eigenvalue index");
  return 2.0 + 2.0 * zeta_ * std::cos(2.0 * M_PI * j / n_);
}

Eigen::VectorXd CycleOracle::eigenvector(int j) const {
  if (j < 0 || j >= n_) throw Error(ErrorCode::BadIndex, "eigenvector index");
  Eigen::VectorXd v(n_);
  if (j == 0) {
    v.setConstant(1.0 / std::sqrt(static_cast<double>(n_)));
  } else if (2 * j == n_) {
    for (int k = 0; k < n_; ++k) {
      v(k) = (k % 2 == 0 ? 1.0 : -1.0) / std::sqrt(static_cast<double>(n_));
    }
  } else if (2 * j < n_) {
    const double c = std::sqrt(2.0 / n_);
    for (int k = 0; k < n_; ++k) v(k) = c * std::cos(2.0 * M_PI * j * k / n_);
  } else {
    const int jp = n_ - j;
    const double c = std::sqrt(2.0 / n_);
    for (int k = 0; k < n_; ++k) v(k) = c * std::sin(2.0 * M_PI * jp * k / n_);
  }
  return v;
}

Eigen::MatrixXd CycleOracle::basis() const {
  Eigen::MatrixXd b(n_, n_);
  for (int j = 0; j < n_; ++j) b.col(j) = eigenvector(j);
  return b;
}

std::vector<double> CycleOracle::eigenvalue_multiset() const {
  std::vector<double> vals;
  for (int k = 0; k < n_; ++k) vals.push_back(eigenvalue(std::min(k, n_ - k)));
  std::sort(vals.begin(), vals.end());
  return vals;
}

Eigen::VectorXd CycleOracle::perturbation_vector(int b) const {
  if (b < 1 || b > n_ - 1) throw Error(ErrorCode::BadIndex, "need 1 <= b <= n-1");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n_);
  w(0) = 1.0;
  w(b) += static_cast<double>(zeta_);
  return w;
}

double CycleOracle::w_dot_v(int b, int j) const {
  if (b < 1 || b > n_ - 1) throw Error(ErrorCode::BadIndex, "need 1 <= b <= n-1");
  if (j < 0 || j >= n_) throw Error(ErrorCode::BadIndex, "eigenvector index");
  const double root_n = std::sqrt(static_cast<double>(n_));
  if (j == 0) return (1.0 + zeta_) / root_n;
  if (2 * j == n_) return (1.0 + zeta_ * (b % 2 == 0 ? 1.0 : -1.0)) / root_n;
  if (2 * j < n_) {
    return std::sqrt(2.0 / n_) * (1.0 + zeta_ * std::cos(2.0 * M_PI * b * j / n_));
  }
  const int jp = n_ - j;
  return std::sqrt(2.0 / n_) * zeta_ * std::sin(2.0 * M_PI * b * jp / n_);
}

Eigen::MatrixXd CycleOracle::perturbed_matrix(double rho, int b) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) {
    m(i, i) = 2.0;
    m(i, (i + 1) % n_) += static_cast<double>(zeta_);
    m((i + 1) % n_, i) += static_cast<double>(zeta_);
  }
  const Eigen::VectorXd w = perturbation_vector(b);
  return m + rho * (w * w.transpose());
}

Eigen::VectorXd perturbed_eigvec(const CycleOracle& oracle, double rho, int b, int j) {
  if (!(rho > 0.0)) throw Error(ErrorCode::BadParameters, "rho must be positive");
  const int n = oracle.n();
  if (b < 1 || b > n - 1) throw Error(ErrorCode::BadIndex, "need 1 <= b <= n-1");
  if (j < 1 || 2 * j >= n) throw Error(ErrorCode::BadIndex, "need 1 <= j < n/2");

  // Exact orthogonality conditions: w.v_j = 0 = w.v_{n-j} iff bj = 0 mod n
  // (Laplacian) or 2bj = n mod 2n (signless).
  const long bj = static_cast<long>(b) * j;
  const bool orthogonal = oracle.zeta() == -1
                              ? bj % n == 0
                              : (2 * bj - n) % (2 * static_cast<long>(n)) == 0;
  if (orthogonal) {
    return oracle.eigenvector(j) + oracle.eigenvector(n - j);
  }
  return oracle.w_dot_v(b, n - j) * oracle.eigenvector(j) -
         oracle.w_dot_v(b, j) * oracle.eigenvector(n - j);
}

double perturbed_eigvec_entry(const CycleOracle& oracle, int b, int j, int k) {
  const int n = oracle.n();
  const long bj = static_cast<long>(b) * j;
  const bool orthogonal = oracle.zeta() == -1
                              ? bj % n == 0
                              : (2 * bj - n) % (2 * static_cast<long>(n)) == 0;
  if (orthogonal) {
    return 2.0 / std::sqrt(static_cast<double>(n)) *
           std::cos(2.0 * M_PI * j * k / n - M_PI / 4.0);
  }
  if (oracle.zeta() == 1) {
    return -4.0 / n * std::cos(M_PI * b * j / n) *
           std::sin(M_PI * (2.0 * k - b) * j / n);
  }
  return -4.0 / n * std::sin(M_PI * b * j / n) *
         std::cos(M_PI * (2.0 * k - b) * j / n);
}

// ---- arithmetic predicates ---------------------------------------------------

std::set<int> cycle_vertex_candidates(int n, int b, MatrixKind which) {
  if (n < 7) throw Error(ErrorCode::BadParameters, "predicate defined for n >= 7");
  if (b < 1 || b > n - 1) throw Error(ErrorCode::BadParameters, "need 1 <= b <= n-1");

  std::set<int> out;
  if (which == MatrixKind::Laplacian) {
    if ((2 * b + n) % 4 == 0) {
      out.insert(((2 * b + n) / 4) % n);
      out.insert(((2 * b + 3 * n) / 4) % n);
    }
  } else if (2 * b != n) {
    if (b % 2 == 0 && (n + b) % 2 == 0) {
      out.insert((b / 2) % n);
      out.insert(((n + b) / 2) % n);
    }
  } else {
    if (n % 8 == 0) {
      out.insert(3 * n / 8);
      out.insert(7 * n / 8);
    }
  }
  return out;
}

std::set<int> cycle_pair_sums(int n, int b, MatrixKind which) {
  if (n < 13) throw Error(ErrorCode::BadParameters, "predicate defined for n >= 13");
  if (b < 1 || b > n - 1) throw Error(ErrorCode::BadParameters, "need 1 <= b <= n-1");

  std::set<int> out;
  if (which == MatrixKind::Laplacian) {
    out.insert(b);
    out.insert(n + b);
  } else if (2 * b != n) {
    if (n % 2 == 0) {
      out.insert(b + n / 2);
      out.insert(b + 3 * n / 2);
    }
  } else {
    if (n % 4 == 0) {
      out.insert(n / 4);
      out.insert(5 * n / 4);
    }
  }
  return out;
}

PathTransferParams path_end_transfer_params(int k, int l) {
  if (l < 1 || k <= l || (k - l) % 2 == 0) {
    throw Error(ErrorCode::BadKL, "need k > l >= 1 with k, l of opposite parity");
  }
  PathTransferParams params;
  params.q = std::sqrt(static_cast<double>(k) * k - static_cast<double>(l) * l) /
             (std::sqrt(8.0) * l);
  params.tau = 2.0 * M_PI * l;
  return params;
}

double adjacency_equivalent_loop_weight(double omega, double q) {
  if (q == 0.0) throw Error(ErrorCode::ZeroQ, "q must be nonzero");
  return (omega - 1.0) / q;
}

}  // namespace pst
