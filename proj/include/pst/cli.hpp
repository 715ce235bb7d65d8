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

#include <iosfwd>
#include <string>
#include <vector>

namespace pst {

// Exit codes: 0 success, 1 assertion failure (e.g. transfer not achieved,
// reproduction row failed), 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

// State descriptor grammar: vertex:a | pair:a,b | plus:a,b | spair:a,b,s.
struct PureState parse_state_descriptor(const std::string& text, int n);

// Time grammar: decimal literal, or pi/2q, pi/sqrt2q, 2pi*l (evaluated with
// the given q and l).
double parse_time_expression(const std::string& text, double q, int l);

}  // namespace pst
