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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "pst/cli.hpp"
#include "pst/families.hpp"
#include "pst/report.hpp"

using namespace pst;

namespace {

struct CommandOutput {
  int exit_code;
  std::string out;
  std::string err;
};

CommandOutput run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content)
      : path_("pst_test_" + name) {
    std::ofstream f(path_);
    f << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("filtered reproduction run") {
  const ReproSummary summary = reproduce_paper("kmn");
  CHECK(summary.rows.size() == 6);
  CHECK(summary.failed == 0);
}

TEST_CASE("full reproduction table passes everywhere it can") {
  const ReproSummary summary = reproduce_paper();
  CHECK(summary.rows.size() >= 45);
  for (const ReproRowOutcome& row : summary.rows) {
    // p3-ends-q1 asserts a transfer that provably does not exist (the
    // acceptance suite reports it in full); every other row must pass.
    if (row.id == "p3-ends-q1") continue;
    CAPTURE(row.id);
    CHECK(row.pass);
  }
}

TEST_CASE("report JSON is deterministic and schema-tagged") {
  const std::string a = reproduce_paper("p2").to_json_text();
  const std::string b = reproduce_paper("p2").to_json_text();
  CHECK(a == b);
  CHECK(a.find("\"schema\":1") != std::string::npos);
  CHECK(a.find("\"cases\":") != std::string::npos);
}

TEST_CASE("cli: verify on the matched bipartite graph") {
  TempFile graph("kmn.json", kmn_minus_matching_plus_e(3, 3, 2).graph.to_json_text());
  const CommandOutput achieved =
      run({"verify", graph.path(), "--q", "1", "--from", "pair:0,2", "--to",
           "pair:1,3", "--time", "1.5707963267948966"});
  CHECK(achieved.exit_code == 0);
  CHECK(achieved.out.find("achieved") == 0);

  const CommandOutput missed =
      run({"verify", graph.path(), "--q", "1", "--from", "pair:0,2", "--to",
           "pair:1,3", "--time", "0.3"});
  CHECK(missed.exit_code == 1);

  const CommandOutput json =
      run({"verify", graph.path(), "--q", "1", "--from", "pair:0,2", "--to",
           "pair:1,3", "--time", "pi/2q", "--json"});
  CHECK(json.exit_code == 0);
  for (const char* field :
       {"\"fidelity\":", "\"time\":", "\"phase_re\":", "\"phase_im\":",
        "\"achieved\":true", "\"evidence_only\":false"}) {
    CHECK(json.out.find(field) != std::string::npos);
  }
}

TEST_CASE("cli: symbolic time forms") {
  TempFile graph("p2.json", path_graph(2).graph.to_json_text());
  CHECK(run({"verify", graph.path(), "--q", "2", "--from", "vertex:0", "--to",
             "vertex:1", "--time", "pi/2q"})
            .exit_code == 0);
  CHECK(run({"verify", graph.path(), "--q", "-1", "--from", "vertex:0", "--to",
             "vertex:1", "--time", "pi/2q"})
            .exit_code == 0);  // negative time folds
  CHECK(run({"verify", graph.path(), "--q", "1", "--from", "vertex:0", "--to",
             "vertex:1", "--time", "nonsense"})
            .exit_code == 2);
}

TEST_CASE("cli: zero q is a usage error") {
  TempFile graph("p2b.json", path_graph(2).graph.to_json_text());
  const CommandOutput res = run({"verify", graph.path(), "--q", "0", "--from",
                                 "vertex:0", "--to", "vertex:1", "--time", "1.0"});
  CHECK(res.exit_code == 2);
  CHECK(res.err.find("ZeroQ") != std::string::npos);
}

TEST_CASE("cli: malformed graph file is a usage error") {
  TempFile graph("bad.json", R"({"n":2,"edges":[[0,2,1.0]],"loops":[]})");
  const CommandOutput res = run({"analyze", graph.path(), "--q", "1"});
  CHECK(res.exit_code == 2);
  CHECK(res.err.find("SchemaViolation") != std::string::npos);
}

TEST_CASE("cli: involution reduce reports the block spectra") {
  TempFile graph("wheel.json", looped_wheel(0.0).graph.to_json_text());
  const CommandOutput res =
      run({"involution", "reduce", graph.path(), "--perm", "0:2,1:3", "--q", "1"});
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("minus-block eigenvalues: 0.99999") != std::string::npos);
  CHECK(res.out.find("plus-block eigenvalues: 2.43844") != std::string::npos);
  CHECK(res.out.find("factorization: ok") != std::string::npos);

  const CommandOutput bad =
      run({"involution", "reduce", graph.path(), "--perm", "0:1", "--q", "1"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("NotAutomorphism") != std::string::npos);
}

TEST_CASE("cli: find and scan") {
  TempFile graph("p5.json", path_with_loops(5, 1.0).graph.to_json_text());
  const CommandOutput found = run({"find", graph.path(), "--q", "1", "--from",
                                   "pair:0,4", "--to", "pair:1,3"});
  CHECK(found.exit_code == 0);
  CHECK(found.out.find("achieved") == 0);

  TempFile c5("c5.json", cycle_graph(5).graph.to_json_text());
  const CommandOutput none = run({"find", c5.path(), "--q", "-1", "--from",
                                  "vertex:0", "--to", "vertex:1"});
  CHECK(none.exit_code == 1);
  CHECK(none.out.find("not strongly cospectral") != std::string::npos);

  const CommandOutput scan =
      run({"scan", graph.path(), "--q", "1", "--from", "pair:0,4", "--to",
           "pair:1,3", "--tmax", "10", "--json"});
  CHECK(scan.exit_code == 0);
  CHECK(scan.out.find("\"evidence_only\":true") != std::string::npos);

  const CommandOutput serial =
      run({"scan", graph.path(), "--q", "1", "--from", "pair:0,4", "--to",
           "pair:1,3", "--tmax", "10", "--serial", "--json"});
  CHECK(serial.out == scan.out);  // kernels agree byte for byte
}

TEST_CASE("cli: family gen writes graph and sidecar") {
  const CommandOutput res = run({"family", "gen", "kmn_minus_matching", "--params",
                                 "m=3,n=3,k=2", "-o", "pst_test_fam.json"});
  CHECK(res.exit_code == 0);
  std::ifstream gf("pst_test_fam.json");
  REQUIRE(gf.good());
  std::stringstream graph_text;
  graph_text << gf.rdbuf();
  CHECK(WeightedGraph::from_json_text(graph_text.str()) ==
        kmn_minus_matching_plus_e(3, 3, 2).graph);
  std::ifstream mf("pst_test_fam.meta.json");
  REQUIRE(mf.good());
  std::stringstream meta_text;
  meta_text << mf.rdbuf();
  CHECK(meta_text.str().find("pi/(2q)") != std::string::npos);
  std::remove("pst_test_fam.json");
  std::remove("pst_test_fam.meta.json");

  CHECK(run({"family", "gen", "no_such_variant"}).exit_code == 2);
  CHECK(run({"family", "gen", "kmn_minus_matching", "--params", "m=3"}).exit_code ==
        2);
}

TEST_CASE("cli: reproduce-paper filter and json") {
  const CommandOutput res = run({"reproduce-paper", "--filter", "p2"});
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("p2-vertex-q1") != std::string::npos);

  const CommandOutput json1 = run({"reproduce-paper", "--filter", "kmn", "--json"});
  const CommandOutput json2 = run({"reproduce-paper", "--filter", "kmn", "--json"});
  CHECK(json1.exit_code == 0);
  CHECK(json1.out == json2.out);
}

TEST_CASE("cli: no subcommand is a usage error") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"bogus"}).exit_code == 2);
}
