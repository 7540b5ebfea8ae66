// Copyright 2026 The dlorder Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded random programs for property tests.

#ifndef DLORDER_TESTS_SUPPORT_RANDOM_PROGRAMS_HPP_
#define DLORDER_TESTS_SUPPORT_RANDOM_PROGRAMS_HPP_

#include <random>
#include <string>
#include <vector>

#include "dlorder/core.hpp"

namespace dlorder::testing {

struct GenParams {
  int max_idbs = 3;
  int max_arity = 3;
  int max_rules = 4;
  int max_vars = 5;
  int max_body_idbs = 2;
  int max_order_atoms = 3;
  int num_constants = 0;  // declared as c0, c1, ...
};

/// Order-mode program within the given limits. Every IDB symbol occurs in
/// some rule head, and at least one rule has no IDB atoms in its body.
Program random_program(std::mt19937_64& rng, const GenParams& g = {});

/// Interval-mode program using single basic relations only.
Program random_interval_program(std::mt19937_64& rng, const GenParams& g = {});

/// A few hand-written programs covering recursion, 0-ary IDBs, repeated
/// variables and head-only variables.
std::vector<std::string> fixed_corpus();

/// The discrrun program: rules rho1, rho2, rho3 over a 5-ary P.
std::string discrrun_text();

/// The two-rule P/Q program.
std::string two_rule_text();

}  // namespace dlorder::testing

#endif  // DLORDER_TESTS_SUPPORT_RANDOM_PROGRAMS_HPP_
