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

// Saturation of type sets and the decision procedures built on it.
//
// saturate() computes, for every IDB, the minimal complete types of the
// tuples it derives. Rules are applied round-robin against a snapshot of
// the current types until a full pass changes nothing. The body-type
// combinations of one application are evaluated in parallel (OpenMP) and
// inserted in a fixed order, so runs are deterministic.

#ifndef DLORDER_ENGINE_HPP_
#define DLORDER_ENGINE_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dlorder/antichain.hpp"
#include "dlorder/core.hpp"
#include "dlorder/orders.hpp"
#include "dlorder/typesys.hpp"

namespace dlorder {

using types::Rank;

/// 10^6, or the value of DLORDER_MAX_STEPS when set to a positive integer.
std::uint64_t default_step_cap();

class TypeSet;
struct SaturationStats;

struct SaturationOptions {
  /// Antichain insertions allowed before giving up.
  std::uint64_t max_insertions = default_step_cap();
  /// Clamp every gap to at most 1. Exact for dense orders, where every
  /// strict step can be refined indefinitely.
  bool dense = false;
  /// Evaluate combinations with OpenMP; the serial path gives identical
  /// results.
  bool parallel = true;
  /// Check antichain, well-formedness and rank-growth invariants as the run
  /// proceeds; violations throw std::logic_error.
  bool check_invariants = false;
  /// Called after every step with the state reached.
  std::function<void(const TypeSet&, const SaturationStats&)> on_step;
};

struct SaturationStats {
  /// Rule applications that changed the type set.
  std::uint64_t steps = 0;
  /// Largest type rank present after each step.
  std::vector<Rank> max_rank_per_step;
  std::uint64_t insertions = 0;
  bool fixpoint_reached = false;
  /// All rule applications, changing or not.
  std::uint64_t applications = 0;

  Rank max_rank() const;
};

class TypeSet {
 public:
  using Family = std::map<types::OrderType, Antichain>;

  /// Returns true iff the type was added (it was not dominated).
  bool insert(const std::string& symbol, const types::OrderType& order, TypeEntry e);

  const Family* find(const std::string& symbol) const;
  bool empty(const std::string& symbol) const;
  /// All types of `symbol`, ordered by order type then insertion.
  std::vector<types::CompleteType> types_of(const std::string& symbol) const;
  std::vector<std::string> symbols() const;
  std::size_t size() const;
  Rank max_rank() const;

  /// Same symbols, order types and gap vectors (ignores ids and witnesses).
  friend bool operator==(const TypeSet& a, const TypeSet& b);

 private:
  std::map<std::string, Family> sets_;
};

struct SaturationResult {
  TypeSet types;
  SaturationStats stats;
};

/// Throws UsageError for programs with constants or interval atoms. On
/// hitting the insertion cap the partial state is returned with
/// `stats.fixpoint_reached == false`.
SaturationResult saturate(const Program& p, const SaturationOptions& options = {});

struct InitSequence {
  std::vector<std::size_t> rules;  // indices into the program's rules
  std::set<std::string> nonempty;  // IDB copies made nonempty
};

/// Fires, pass by pass, every rule whose head is still empty and whose body
/// IDBs are all nonempty. Expects the output of to_type_disjoint.
InitSequence init_sequence(const Program& type_disjoint);

/// Whether some extension of `bindings` (position -> element) satisfies `t`
/// in `m`. Bindings that put different elements into one equality class
/// make the answer false.
bool satisfiable_in_model(const types::CompleteType& t, const OrderModel& m,
                          const std::map<int, Element>& bindings = {});

/// Shared pipeline for repeated decisions on one program: lowers interval
/// atoms and constants once and caches the saturated type sets.
class Analysis {
 public:
  explicit Analysis(const Program& p, SaturationOptions options = {});

  /// Order-mode, constant-free program the engine runs on.
  const Program& lowered() const { return lowered_; }
  const Program& source() const { return source_; }
  const std::vector<std::string>& constants() const { return source_.constants; }

  /// Name of `goal` in the lowered program; throws UsageError for unknown
  /// goals.
  std::string lowered_goal(const std::string& goal) const;

  /// Values of the declared constants: bindings of `m` first, then the
  /// program's @bind lines. Throws UsageError for an unbound constant.
  std::vector<Element> constant_values(const OrderModel& m) const;

  /// Saturation of the lowered program (cached). Throws StepCapExceeded
  /// when the cap is hit.
  const SaturationResult& saturation(bool dense);

  /// Goal types surviving instantiation of the constants in `m` (with the
  /// constant positions stripped), or all goal types without constants.
  std::vector<types::CompleteType> goal_types(const std::string& goal, const OrderModel& m);

  bool nonempty(const std::string& goal, const OrderModel& m);
  bool nonempty_by_saturation(const std::string& goal, const OrderModel& m);
  /// Fast path for infinite models without constants; std::nullopt when it
  /// does not apply or the transformed program would be too large.
  std::optional<bool> nonempty_by_init_sequence(const std::string& goal, const OrderModel& m);

  bool contains(const std::string& goal, std::span<const Element> tuple, const OrderModel& m);

 private:
  Program source_;
  Program lowered_;
  SaturationOptions options_;
  std::map<bool, std::unique_ptr<SaturationResult>> cache_;
};

bool decide_nonempty(const Program& p, const std::string& goal, const OrderModel& m);
bool decide_tuple(const Program& p, const std::string& goal, std::span<const Element> tuple,
                  const OrderModel& m);

}  // namespace dlorder

#endif  // DLORDER_ENGINE_HPP_
