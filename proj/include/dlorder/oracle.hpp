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

// Reference evaluation on finite orders {0, ..., n-1}: stage by stage, every
// rule is instantiated with every assignment of its variables. Slow and
// simple on purpose.

#ifndef DLORDER_ORACLE_HPP_
#define DLORDER_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dlorder/core.hpp"
#include "dlorder/orders.hpp"

namespace dlorder {

using GroundTuple = std::vector<std::int64_t>;

class GroundRelationStore {
 public:
  const std::set<GroundTuple>& relation(const std::string& symbol) const;
  bool contains(const std::string& symbol, const GroundTuple& t) const;
  /// Returns true iff the tuple was new.
  bool insert(const std::string& symbol, GroundTuple t);

  /// Number of stages computed (the last one added nothing).
  std::size_t stage() const { return stage_; }
  void next_stage() { ++stage_; }

  const std::map<std::string, std::set<GroundTuple>>& relations() const { return relations_; }
  friend bool operator==(const GroundRelationStore& a, const GroundRelationStore& b) {
    return a.relations_ == b.relations_;
  }

 private:
  std::map<std::string, std::set<GroundTuple>> relations_;
  std::size_t stage_ = 0;
};

/// Least fixpoint over a finite model. `bindings` interprets the constants.
/// Throws ModelError for infinite models or unbound constants, UsageError
/// for interval-mode programs.
GroundRelationStore naive_eval(const Program& p, const OrderModel& m,
                               const std::map<std::string, Element>& bindings = {});

bool naive_nonempty(const Program& p, const OrderModel& m,
                    const std::map<std::string, Element>& bindings, const std::string& goal);

/// Throws UsageError on an arity mismatch.
bool naive_tuple(const Program& p, const OrderModel& m,
                 const std::map<std::string, Element>& bindings, const std::string& goal,
                 std::span<const std::int64_t> tuple);

/// One line per tuple, `Q(0,3,5)`, symbols in program order, tuples sorted.
/// 0-ary facts print as `G()`.
std::string dump(const Program& p, const GroundRelationStore& store);

}  // namespace dlorder

#endif  // DLORDER_ORACLE_HPP_
