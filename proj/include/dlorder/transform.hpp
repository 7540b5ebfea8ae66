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

// Program rewrites.
//
// The type-disjoint transform splits every IDB P of arity k into copies
// `P@code`, one per weak order on its k argument positions (see
// types::OrderType::code; a 0-ary P has the single copy `P@`). Each rule
// is copied once per choice of tags for its head and body atoms; a tag adds
// the order atoms between its consecutive classes and identifies the
// variables of each class. Copies whose order atoms form a directed cycle
// are dropped. Every fixpoint of P is the union of the fixpoints of its
// copies, and every copy only ever holds tuples of its own order type.

#ifndef DLORDER_TRANSFORM_HPP_
#define DLORDER_TRANSFORM_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dlorder/core.hpp"
#include "dlorder/typesys.hpp"

namespace dlorder {

/// Transformed programs with more rules than this are rejected (UsageError).
inline constexpr std::size_t kMaxTypeDisjointRules = 200000;

struct TransformReport {
  ProgramParams before;
  ProgramParams after;
  /// Original IDB -> its copies and their tags, in tag order.
  std::map<std::string, std::vector<std::pair<std::string, types::OrderType>>> copies;

  /// The size bounds relating `after` to `before`; throws std::logic_error
  /// naming the violated bound.
  void check_bounds() const;
};

/// `P@code` for the copy of `symbol` tagged with `tag`.
std::string copy_name(const std::string& symbol, const types::OrderType& tag);

/// Throws UsageError for interval-mode programs, programs with constants,
/// or when the output would exceed kMaxTypeDisjointRules.
std::pair<Program, TransformReport> to_type_disjoint(const Program& p);

/// Threads the constants through every IDB: P(x̄) becomes P'(C1,...,Cr,x̄)
/// and each constant c_i is replaced by the variable C_i. Threading is
/// unconditional, so every IDB gains r leading positions. Declarations and
/// bindings are dropped from the result. Throws ParseError for undeclared
/// constants and UsageError for interval-mode programs.
Program eliminate_constants(const Program& p, const std::vector<std::string>& constants);

/// The symbol eliminate_constants gives to `symbol` in `p`.
std::string lifted_symbol(const Program& p, const std::string& symbol);

/// Variable names eliminate_constants uses for `constants`, fresh for `p`.
std::vector<std::string> constant_variables(const Program& p,
                                            const std::vector<std::string>& constants);

}  // namespace dlorder

#endif  // DLORDER_TRANSFORM_HPP_
