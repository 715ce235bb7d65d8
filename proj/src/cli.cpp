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

#include "pst/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pst/families.hpp"
#include "pst/graph.hpp"
#include "pst/involution.hpp"
#include "pst/report.hpp"
#include "pst/spectral.hpp"
#include "pst/states.hpp"

namespace pst {

namespace {

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::UsageError, "cannot open graph file " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return WeightedGraph::from_json_text(buffer.str());
}

std::ostream& precise(std::ostream& os) { return os << std::setprecision(17); }

}  // namespace

PureState parse_state_descriptor(const std::string& text, int n) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::UsageError,
                "state '" + text + "' must be vertex:a, pair:a,b, plus:a,b or "
                "spair:a,b,s");
  }
  const std::string kind = text.substr(0, colon);
  std::vector<std::string> parts;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);

  try {
    if (kind == "vertex" && parts.size() == 1) {
      return make_vertex_state(n, std::stoi(parts[0]));
    }
    if (kind == "pair" && parts.size() == 2) {
      return make_pair_state(n, std::stoi(parts[0]), std::stoi(parts[1]));
    }
    if (kind == "plus" && parts.size() == 2) {
      return make_plus_state(n, std::stoi(parts[0]), std::stoi(parts[1]));
    }
    if (kind == "spair" && parts.size() == 3) {
      return make_spair_state(n, std::stoi(parts[0]), std::stoi(parts[1]),
                              std::stod(parts[2]));
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::UsageError, "state '" + text + "' has malformed numbers");
  }
  throw Error(ErrorCode::UsageError, "unrecognized state descriptor '" + text + "'");
}

double parse_time_expression(const std::string& text, double q, int l) {
  if (text == "pi/2q") return M_PI / (2.0 * q);
  if (text == "pi/sqrt2q") return M_PI / (std::sqrt(2.0) * q);
  if (text == "2pi*l") return 2.0 * M_PI * l;
  try {
    size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::UsageError,
              "time '" + text + "' is neither a decimal nor pi/2q, pi/sqrt2q, 2pi*l");
}

namespace {

int cmd_analyze(const std::string& path, double q, const std::string& state_text,
                double tol, bool json_out, std::ostream& out) {
  const WeightedGraph g = load_graph(path);
  const Eigen::MatrixXd lap = g.generalized_laplacian(q);
  const Spectrum spec = decompose(lap, tol > 0 ? tol : kDefaultClusterTol);

  std::optional<PureState> state;
  if (!state_text.empty()) state = parse_state_descriptor(state_text, g.vertex_count());

  if (json_out) {
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["n"] = g.vertex_count();
    doc["q"] = q;
    doc["eigenvalues"] = spec.eigenvalues;
    doc["multiplicities"] = spec.multiplicities;
    doc["completeness_error"] = spec.completeness_error();
    if (state) {
      const Support sup = support(spec, *state);
      doc["state"] = state->label;
      doc["support_indices"] = sup.indices;
      doc["support_norms"] = sup.norms;
      doc["fixed_state"] = sup.is_fixed();
    }
    out << doc.dump() << "\n";
    return 0;
  }

  out << "graph: " << g.vertex_count() << " vertices, " << g.edges().size()
      << " edges\n";
  precise(out) << "q: " << q << "\n";
  out << "distinct eigenvalues (multiplicity):\n";
  for (int j = 0; j < spec.count(); ++j) {
    precise(out) << "  " << spec.eigenvalues[j] << " (" << spec.multiplicities[j]
                 << ")\n";
  }
  if (state) {
    const Support sup = support(spec, *state);
    out << "state " << state->label << " support:";
    for (int j : sup.indices) precise(out) << " " << spec.eigenvalues[j];
    out << (sup.is_fixed() ? "  [fixed state]" : "") << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& path, double q, const std::string& from_text,
               const std::string& to_text, const std::string& time_text, int l,
               double pst_tol, bool json_out, std::ostream& out) {
  const WeightedGraph g = load_graph(path);
  const double tau = parse_time_expression(time_text, q, l);
  const Spectrum spec = decompose(g.generalized_laplacian(q));
  const PureState x = parse_state_descriptor(from_text, g.vertex_count());
  const PureState y = parse_state_descriptor(to_text, g.vertex_count());
  const TransferVerdict v =
      verify_transfer(spec, x, y, tau, pst_tol > 0 ? pst_tol : kPstTol);

  if (json_out) {
    out << v.to_json_text() << "\n";
  } else {
    precise(out) << (v.achieved ? "achieved" : "not achieved") << ": fidelity "
                 << v.fidelity << " at t = " << v.time;
    if (v.phase_valid) {
      precise(out) << ", phase = (" << v.phase.real() << ", " << v.phase.imag()
                   << ")";
    }
    out << "\n";
  }
  return v.achieved ? 0 : 1;
}

int cmd_find(const std::string& path, double q, const std::string& from_text,
             const std::string& to_text, double t_max, long points, bool json_out,
             std::ostream& out) {
  const WeightedGraph g = load_graph(path);
  const Spectrum spec = decompose(g.generalized_laplacian(q));
  const PureState x = parse_state_descriptor(from_text, g.vertex_count());
  const PureState y = parse_state_descriptor(to_text, g.vertex_count());
  SearchConfig cfg;
  if (t_max > 0) cfg.t_max = t_max;
  if (points > 1) cfg.points = points;
  const std::optional<TransferVerdict> v = find_transfer_time(spec, x, y, cfg);

  if (!v) {
    if (json_out) {
      out << "{\"achieved\":false,\"reason\":\"no strong cospectrality\",\"schema\":1}"
          << "\n";
    } else {
      out << "no transfer: states are not strongly cospectral\n";
    }
    return 1;
  }
  if (json_out) {
    out << v->to_json_text() << "\n";
  } else {
    precise(out) << (v->achieved ? "achieved" : "best found") << ": fidelity "
                 << v->fidelity << " at t = " << v->time << "\n";
  }
  return v->achieved ? 0 : 1;
}

int cmd_scan(const std::string& path, double q, const std::string& from_text,
             const std::string& to_text, double t_max, long points, bool serial,
             bool json_out, std::ostream& out) {
  const WeightedGraph g = load_graph(path);
  const Spectrum spec = decompose(g.generalized_laplacian(q));
  const PureState x = parse_state_descriptor(from_text, g.vertex_count());
  std::optional<PureState> y;
  if (!to_text.empty()) y = parse_state_descriptor(to_text, g.vertex_count());

  GridConfig grid;
  if (t_max > 0) grid.t_max = t_max;
  if (points > 1) grid.points = points;
  const ScanReport report =
      scan_evidence(spec, x, y ? &*y : nullptr, grid, !serial);

  if (json_out) {
    out << report.to_json_text() << "\n";
  } else {
    precise(out) << (report.self_scan ? "self-overlap |x U x|" : "fidelity |y U x|^2")
                 << " over (0, " << report.t_max << "], " << report.points
                 << " points (evidence only)\n"
                 << "  sup " << report.sup << " at t = " << report.argmax << "\n"
                 << "  inf " << report.inf << " at t = " << report.argmin << "\n";
    if (report.suggests_pgst) {
      out << "  sup exceeds 0.999: suggestive of pretty good transfer\n";
    }
  }
  return 0;
}

int cmd_involution_reduce(const std::string& path, const std::string& perm_text,
                          double q, bool json_out, std::ostream& out) {
  const WeightedGraph g = load_graph(path);
  const std::vector<int> perm = parse_transpositions(perm_text, g.vertex_count());
  const Involution inv = verify_involution(g, perm);
  const HalfGraphDecomposition dec = decompose_by_involution(g, q, inv);

  const Spectrum minus = decompose(dec.minus_block);
  const Spectrum plus = decompose(dec.plus_block_sym);
  const bool factorizes = factorization_check(dec);
  const double residual =
      std::max(block_diagonalize_residual(dec, 0.3), block_diagonalize_residual(dec, 1.7));

  if (json_out) {
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["transversal"] = inv.transversal;
    doc["fixed_set"] = inv.fixed_set;
    doc["minus_eigenvalues"] = expanded_eigenvalues(minus);
    doc["plus_eigenvalues"] = expanded_eigenvalues(plus);
    doc["factorization_ok"] = factorizes;
    doc["block_residual"] = residual;
    out << doc.dump() << "\n";
  } else {
    out << "transversal:";
    for (int v : inv.transversal) out << " " << v;
    out << "\nfixed set:";
    for (int v : inv.fixed_set) out << " " << v;
    out << "\nminus-block eigenvalues:";
    for (double t : expanded_eigenvalues(minus)) precise(out) << " " << t;
    out << "\nplus-block eigenvalues:";
    for (double t : expanded_eigenvalues(plus)) precise(out) << " " << t;
    out << "\nfactorization: " << (factorizes ? "ok" : "FAILED");
    precise(out) << "\nblock residual (t in {0.3, 1.7}): " << residual << "\n";
  }
  return factorizes ? 0 : 1;
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> params;
  if (text.empty()) return params;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::UsageError, "parameter '" + item + "' is not k=v");
    }
    params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return params;
}

double param_num(const std::map<std::string, std::string>& params,
                 const std::string& key, std::optional<double> fallback = {}) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw Error(ErrorCode::UsageError, "missing parameter " + key);
  }
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw Error(ErrorCode::UsageError, "parameter " + key + " is not a number");
  }
}

int param_int(const std::map<std::string, std::string>& params, const std::string& key,
              std::optional<int> fallback = {}) {
  const double v = param_num(params, key,
                             fallback ? std::optional<double>(*fallback)
                                      : std::optional<double>());
  return static_cast<int>(v);
}

GeneratedFamily dispatch_family(const std::string& variant,
                                const std::map<std::string, std::string>& params,
                                const std::optional<WeightedGraph>& base) {
  if (variant == "path") return path_graph(param_int(params, "n"));
  if (variant == "cycle") return cycle_graph(param_int(params, "n"));
  if (variant == "complete") return complete_graph(param_int(params, "n"));
  if (variant == "complete_bipartite") {
    return complete_bipartite(param_int(params, "m"), param_int(params, "n"));
  }
  if (variant == "path_with_loops") {
    const int n = param_int(params, "n");
    if (params.count("omega")) {
      return path_with_loops(n, param_num(params, "omega"));
    }
    return path_with_loops(n, param_num(params, "omega1"),
                           param_num(params, "omega2"));
  }
  if (variant == "chorded_looped_path") {
    return chorded_looped_path(param_int(params, "n"));
  }
  if (variant == "perturbed_cycle") {
    return perturbed_cycle(param_int(params, "n"), param_num(params, "rho"),
                           param_int(params, "b"));
  }
  if (variant == "c5_loops") return c5_with_loops();
  if (variant == "cycle_with_tail") {
    return cycle_with_tail(param_int(params, "cycle"), param_int(params, "tail"));
  }
  if (variant == "planar_attach") {
    const auto core_it = params.find("core");
    if (core_it == params.end() || (core_it->second != "p5" && core_it->second != "p7")) {
      throw Error(ErrorCode::UsageError, "planar_attach needs core=p5 or core=p7");
    }
    const PlanarCore core =
        core_it->second == "p5" ? PlanarCore::P5 : PlanarCore::P7;
    return planar_attach(core, base, param_num(params, "loop", 1.0));
  }
  if (variant == "two_copies_plus_matching") {
    if (!base) {
      throw Error(ErrorCode::UsageError,
                  "two_copies_plus_matching needs --base graph.json");
    }
    auto it = params.find("matched");
    if (it == params.end()) {
      throw Error(ErrorCode::UsageError, "missing parameter matched (e.g. matched=0+2)");
    }
    std::vector<int> matched;
    std::stringstream ss(it->second);
    std::string tok;
    while (std::getline(ss, tok, '+')) matched.push_back(std::stoi(tok));
    return two_copies_plus_matching(*base, matched, param_int(params, "a"),
                                    param_int(params, "b"), param_num(params, "tau"),
                                    param_num(params, "q"));
  }
  if (variant == "wheel") return looped_wheel(param_num(params, "alpha", 0.0));
  if (variant == "two_copy_showcase") {
    return two_copy_showcase(param_int(params, "which"), param_num(params, "q"));
  }
  if (variant == "cycle_plus_two_edges") {
    return cycle_plus_two_edges(param_int(params, "n"));
  }
  if (variant == "cycle_plus_four_edges") {
    return cycle_plus_four_edges(param_int(params, "n"));
  }
  if (variant == "kmn_minus_matching") {
    return kmn_minus_matching_plus_e(param_int(params, "m"), param_int(params, "n"),
                                     param_int(params, "k"));
  }
  throw Error(ErrorCode::UsageError, "unknown family variant '" + variant + "'");
}

int cmd_family_gen(const std::string& variant, const std::string& params_text,
                   const std::string& base_path, const std::string& out_path,
                   std::ostream& out) {
  std::optional<WeightedGraph> base;
  if (!base_path.empty()) base = load_graph(base_path);
  const GeneratedFamily fam =
      dispatch_family(variant, parse_params(params_text), base);

  const std::string graph_text = fam.graph.to_json_text();
  const std::string meta_text = fam.metadata_json_text();
  if (out_path.empty()) {
    out << graph_text << "\n" << meta_text << "\n";
    return 0;
  }
  std::ofstream gf(out_path);
  if (!gf) throw Error(ErrorCode::UsageError, "cannot write " + out_path);
  gf << graph_text << "\n";

  std::string meta_path = out_path;
  const std::string suffix = ".json";
  if (meta_path.size() > suffix.size() &&
      meta_path.compare(meta_path.size() - suffix.size(), suffix.size(), suffix) == 0) {
    meta_path = meta_path.substr(0, meta_path.size() - suffix.size());
  }
  meta_path += ".meta.json";
  std::ofstream mf(meta_path);
  if (!mf) throw Error(ErrorCode::UsageError, "cannot write " + meta_path);
  mf << meta_text << "\n";
  out << "wrote " << out_path << " and " << meta_path << "\n";
  return 0;
}

int cmd_reproduce(const std::string& filter, bool json_out, std::ostream& out) {
  const ReproSummary summary = reproduce_paper(filter);
  if (json_out) {
    out << summary.to_json_text() << "\n";
  } else {
    out << summary.to_table_text();
  }
  return summary.all_pass() ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"quantum-walk state transfer analysis on weighted graphs with loops"};
  app.require_subcommand(1);

  std::string graph_path, from_text, to_text, time_text, state_text, perm_text;
  std::string variant, params_text, base_path, out_path, filter;
  double q = 1.0;
  double tol = 0.0;
  double t_max = 0.0;
  long points = 0;
  int l = 1;
  bool json_out = false;
  bool serial = false;

  auto add_q = [&](CLI::App* cmd) {
    cmd->add_option("--q", q, "walk parameter q (nonzero)")->required();
  };
  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json_out); };

  CLI::App* analyze = app.add_subcommand("analyze", "eigendecomposition report");
  analyze->add_option("graph", graph_path)->required();
  add_q(analyze);
  analyze->add_option("--state", state_text, "optional state to report support for");
  analyze->add_option("--tol", tol, "eigenvalue cluster tolerance");
  add_json(analyze);

  CLI::App* verify = app.add_subcommand("verify", "check transfer at a given time");
  verify->add_option("graph", graph_path)->required();
  add_q(verify);
  verify->add_option("--from", from_text)->required();
  verify->add_option("--to", to_text)->required();
  verify->add_option("--time", time_text)->required();
  verify->add_option("--l", l, "integer l for the 2pi*l time form");
  verify->add_option("--tol", tol, "fidelity-deficit tolerance");
  add_json(verify);

  CLI::App* find = app.add_subcommand("find", "search for a transfer time");
  find->add_option("graph", graph_path)->required();
  add_q(find);
  find->add_option("--from", from_text)->required();
  find->add_option("--to", to_text)->required();
  find->add_option("--tmax", t_max);
  find->add_option("--points", points);
  add_json(find);

  CLI::App* scan = app.add_subcommand("scan", "grid evidence scan");
  scan->add_option("graph", graph_path)->required();
  add_q(scan);
  scan->add_option("--from", from_text)->required();
  scan->add_option("--to", to_text, "omit for a self-overlap scan");
  scan->add_option("--tmax", t_max);
  scan->add_option("--points", points);
  scan->add_flag("--serial", serial, "use the serial reference kernel");
  add_json(scan);

  CLI::App* involution = app.add_subcommand("involution", "involution tools");
  CLI::App* reduce = involution->add_subcommand("reduce", "half-graph reduction");
  reduce->add_option("graph", graph_path)->required();
  reduce->add_option("--perm", perm_text, "transpositions, e.g. 0:2,1:3")->required();
  add_q(reduce);
  add_json(reduce);

  CLI::App* family = app.add_subcommand("family", "constructed graph families");
  CLI::App* gen = family->add_subcommand("gen", "generate a family instance");
  gen->add_option("variant", variant)->required();
  gen->add_option("--params", params_text, "comma-separated k=v pairs");
  gen->add_option("--base", base_path, "base graph for two-copy constructions");
  gen->add_option("-o,--output", out_path);

  CLI::App* reproduce = app.add_subcommand("reproduce-paper",
                                           "run the full reproduction table");
  reproduce->add_option("--filter", filter, "only run case ids containing this");
  add_json(reproduce);

  std::vector<const char*> argv;
  argv.push_back("pst");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) {
      return cmd_analyze(graph_path, q, state_text, tol, json_out, out);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(graph_path, q, from_text, to_text, time_text, l, tol,
                        json_out, out);
    }
    if (app.got_subcommand(find)) {
      return cmd_find(graph_path, q, from_text, to_text, t_max, points, json_out, out);
    }
    if (app.got_subcommand(scan)) {
      return cmd_scan(graph_path, q, from_text, to_text, t_max, points, serial,
                      json_out, out);
    }
    if (app.got_subcommand(involution)) {
      return cmd_involution_reduce(graph_path, perm_text, q, json_out, out);
    }
    if (app.got_subcommand(family)) {
      return cmd_family_gen(variant, params_text, base_path, out_path, out);
    }
    if (app.got_subcommand(reproduce)) {
      return cmd_reproduce(filter, json_out, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace pst
