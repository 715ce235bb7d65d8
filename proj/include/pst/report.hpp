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

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pst/families.hpp"
#include "pst/graph.hpp"
#include "pst/states.hpp"

namespace pst {

struct CaseResult {
  bool pass = false;
  double fidelity = std::numeric_limits<double>::quiet_NaN();
  double time = std::numeric_limits<double>::quiet_NaN();
  std::string note;
};

// One reproduction row: a constructed instance together with the checkable
// claim it is expected to satisfy.
struct ReproCase {
  enum class Kind {
    Achieve,                 // transfer at the stated time, deficit <= pst_tol
    NotAchieved,             // the stated time must NOT reach transfer
    NoStrongCospectrality,   // find_transfer_time must return nothing
    EmptyCandidateSet,       // arithmetic predicate must be empty
    EvidenceOnly,            // grid scan sup compared against a bound
    SpectrumFactorization,   // eigenvalue multiset + half-graph union
    BlockResidual,           // block-diagonalization residual sweep
    OracleSweep,             // closed-form cycle spectrum vs numeric
    PredicateSweep,          // L4/L5 integer predicates vs brute force
    InterlacingSweep,        // random rank-one interlacing instances
  };

  std::string id;
  int criterion = 0;           // acceptance criterion this row belongs to
  Kind kind = Kind::Achieve;
  std::string description;
  std::function<CaseResult()> run;
};

struct ReproRowOutcome {
  std::string id;
  int criterion = 0;
  ReproCase::Kind kind = ReproCase::Kind::Achieve;
  bool pass = false;
  double fidelity = std::numeric_limits<double>::quiet_NaN();
  double time = std::numeric_limits<double>::quiet_NaN();
  std::string note;
};

struct ReproSummary {
  std::vector<ReproRowOutcome> rows;
  int passed = 0;
  int failed = 0;

  bool all_pass() const { return failed == 0; }
  std::string to_json_text() const;   // stable schema, "schema": 1
  std::string to_table_text() const;
};

// The full reproduction table (every acceptance row).  Ordered and
// deterministic.
std::vector<ReproCase> build_repro_cases();

// Runs every case whose id contains `filter` (all when empty).
ReproSummary reproduce_paper(const std::string& filter = "");

// Shared helper: run one transfer claim and the attached global property
// checks (strong cospectrality of achieved transfers, spectrum completeness /
// Parseval, monogamy spot-check against vertex states).
CaseResult run_transfer_case(const WeightedGraph& g, double q, const StateSpec& from,
                             const StateSpec& to, double tau, bool expect_achieved);

}  // namespace pst
