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

#include "pst/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace pst {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoopInEdgeList: return "SelfLoopInEdgeList";
    case ErrorCode::NonPositiveEdgeWeight: return "NonPositiveEdgeWeight";
    case ErrorCode::ZeroQ: return "ZeroQ";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::EigensolveFailure: return "EigensolveFailure";
    case ErrorCode::NegativeRho: return "NegativeRho";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::ZeroS: return "ZeroS";
    case ErrorCode::LinearlyDependentStates: return "LinearlyDependentStates";
    case ErrorCode::BadGrid: return "BadGrid";
    case ErrorCode::NotOrderTwo: return "NotOrderTwo";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::LoopWeightMismatch: return "LoopWeightMismatch";
    case ErrorCode::VertexNotInTransversal: return "VertexNotInTransversal";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::BadKL: return "BadKL";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "UnknownError";
}

WeightedGraph WeightedGraph::build(int n,
                                   const std::vector<std::tuple<int, int, double>>& edges,
                                   const std::vector<std::pair<int, double>>& loops) {
  if (n < 1) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex count must be >= 1");
  }
  WeightedGraph g;
  g.n_ = n;
  g.loops_.assign(n, 0.0);

  for (const auto& [u, v, w] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      std::ostringstream os;
      os << "edge (" << u << "," << v << ") outside 0.." << n - 1;
      throw Error(ErrorCode::IndexOutOfRange, os.str());
    }
    if (u == v) {
      std::ostringstream os;
      os << "edge (" << u << "," << v << "); loops must use the loops argument";
      throw Error(ErrorCode::SelfLoopInEdgeList, os.str());
    }
    if (!(w > 0.0) || !std::isfinite(w)) {
      std::ostringstream os;
      os << "edge (" << u << "," << v << ") has weight " << w;
      throw Error(ErrorCode::NonPositiveEdgeWeight, os.str());
    }
    Edge e{std::min(u, v), std::max(u, v), w};
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (size_t i = 1; i < g.edges_.size(); ++i) {
    if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v) {
      std::ostringstream os;
      os << "edge (" << g.edges_[i].u << "," << g.edges_[i].v << ") listed twice";
      throw Error(ErrorCode::DuplicateEdge, os.str());
    }
  }

  std::vector<bool> seen(n, false);
  for (const auto& [v, w] : loops) {
    if (v < 0 || v >= n) {
      std::ostringstream os;
      os << "loop vertex " << v << " outside 0.." << n - 1;
      throw Error(ErrorCode::IndexOutOfRange, os.str());
    }
    if (!std::isfinite(w)) {
      throw Error(ErrorCode::SchemaViolation, "loop weight must be finite");
    }
    if (seen[v]) {
      std::ostringstream os;
      os << "loop on vertex " << v << " listed twice";
      throw Error(ErrorCode::DuplicateEdge, os.str());
    }
    seen[v] = true;
    g.loops_[v] = w;
  }
  return g;
}

double WeightedGraph::edge_weight(int u, int v) const {
  if (u == v) return 0.0;
  Edge key{std::min(u, v), std::max(u, v), 0.0};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key,
                             [](const Edge& a, const Edge& b) {
                               return std::tie(a.u, a.v) < std::tie(b.u, b.v);
                             });
  if (it != edges_.end() && it->u == key.u && it->v == key.v) return it->w;
  return 0.0;
}

double WeightedGraph::degree(int v) const {
  double d = loops_.at(v);
  for (const Edge& e : edges_) {
    if (e.u == v || e.v == v) d += e.w;
  }
  return d;
}

Eigen::MatrixXd WeightedGraph::offdiagonal_adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const Edge& e : edges_) {
    a(e.u, e.v) = e.w;
    a(e.v, e.u) = e.w;
  }
  return a;
}

Eigen::MatrixXd WeightedGraph::adjacency() const {
  Eigen::MatrixXd a = offdiagonal_adjacency();
  for (int v = 0; v < n_; ++v) a(v, v) = loops_[v];
  return a;
}

Eigen::MatrixXd WeightedGraph::degree_matrix() const {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n_, n_);
  for (int v = 0; v < n_; ++v) d(v, v) = loops_[v];
  for (const Edge& e : edges_) {
    d(e.u, e.u) += e.w;
    d(e.v, e.v) += e.w;
  }
  return d;
}

Eigen::MatrixXd WeightedGraph::generalized_laplacian(double q) const {
  if (q == 0.0 || !std::isfinite(q)) {
    throw Error(ErrorCode::ZeroQ, "q must be a nonzero finite real");
  }
  return degree_matrix() + q * offdiagonal_adjacency();
}

Eigen::MatrixXd generalized_laplacian(const LaplacianSpec& spec) {
  return spec.graph.generalized_laplacian(spec.q);
}

bool WeightedGraph::operator==(const WeightedGraph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v ||
        edges_[i].w != other.edges_[i].w) {
      return false;
    }
  }
  return loops_ == other.loops_;
}

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, where + ": " + what);
}

}  // namespace

WeightedGraph WeightedGraph::from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaViolation, e.what());
  }
  if (!doc.is_object()) schema_error("$", "document must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "n" && key != "edges" && key != "loops") {
      schema_error(key, "unknown field");
    }
  }
  if (!doc.contains("n") || !doc.contains("edges") || !doc.contains("loops")) {
    schema_error("$", "fields n, edges, loops are all required");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 1) {
    schema_error("n", "must be an integer >= 1");
  }
  const int n = doc["n"].get<int>();

  if (!doc["edges"].is_array()) schema_error("edges", "must be an array");
  std::vector<std::tuple<int, int, double>> edges;
  int idx = 0;
  for (const auto& item : doc["edges"]) {
    std::string where = "edges[" + std::to_string(idx++) + "]";
    if (!item.is_array() || item.size() != 3) schema_error(where, "must be [u, v, w]");
    if (!item[0].is_number_integer() || !item[1].is_number_integer()) {
      schema_error(where, "u and v must be integers");
    }
    int u = item[0].get<int>();
    int v = item[1].get<int>();
    if (!item[2].is_number()) schema_error(where, "w must be a number");
    double w = item[2].get<double>();
    if (u < 0 || u >= n || v < 0 || v >= n) {
      schema_error(where, "index " + std::to_string(std::max(u, v)) + " out of range");
    }
    if (u >= v) schema_error(where, "requires u < v");
    if (!std::isfinite(w) || !(w > 0.0)) {
      schema_error(where, "w must be finite and > 0");
    }
    edges.emplace_back(u, v, w);
  }

  if (!doc["loops"].is_array()) schema_error("loops", "must be an array");
  std::vector<std::pair<int, double>> loops;
  idx = 0;
  for (const auto& item : doc["loops"]) {
    std::string where = "loops[" + std::to_string(idx++) + "]";
    if (!item.is_array() || item.size() != 2) schema_error(where, "must be [v, w]");
    if (!item[0].is_number_integer()) schema_error(where, "v must be an integer");
    int v = item[0].get<int>();
    if (!item[1].is_number()) schema_error(where, "w must be a number");
    double w = item[1].get<double>();
    if (v < 0 || v >= n) schema_error(where, "vertex out of range");
    if (!std::isfinite(w)) schema_error(where, "w must be finite");
    loops.emplace_back(v, w);
  }

  try {
    return build(n, edges, loops);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaViolation) throw;
    throw Error(ErrorCode::SchemaViolation, e.what());
  }
}

std::string WeightedGraph::to_json_text() const {
  json doc;
  doc["n"] = n_;
  json edges = json::array();
  for (const Edge& e : edges_) {
    edges.push_back(json::array({e.u, e.v, e.w}));
  }
  doc["edges"] = std::move(edges);
  json loops = json::array();
  for (int v = 0; v < n_; ++v) {
    if (loops_[v] != 0.0) loops.push_back(json::array({v, loops_[v]}));
  }
  doc["loops"] = std::move(loops);
  return doc.dump();
}

}  // namespace pst
