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

// Distance types over a linear order.
//
// A distance atom `x <=_d y` says x <= y and there is a strictly increasing
// chain of d steps from x to y; `-inf <=_d x` and `x <=_d +inf` bound the
// room below and above x. A complete type fixes the order/equality pattern
// of its variables (an OrderType) and is stored in additive canonical form
// as a gap vector: g[0] is the room below the first class, g[j] the distance
// between classes j-1 and j, g[k] the room above the last class. Every
// pairwise or boundary atom of the type is the sum of the gaps it spans.
//
// Distances in a linear order are additive along a chain, so a tuple
// satisfies a complete type iff its order pattern matches and each
// consecutive distance (and both boundary distances) is at least the
// corresponding gap.

#ifndef DLORDER_TYPESYS_HPP_
#define DLORDER_TYPESYS_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dlorder/core.hpp"
#include "dlorder/orders.hpp"

namespace dlorder::types {

using Rank = std::int64_t;

/// Ordered partition of the positions 0..arity-1 (a weak order).
class OrderType {
 public:
  OrderType() = default;

  /// `class_of[p]` is the index of p's class in the order; the used indices
  /// must be exactly 0..c-1. Throws std::invalid_argument otherwise.
  static OrderType from_class_of(std::vector<int> class_of);
  static OrderType from_classes(const std::vector<std::vector<int>>& classes);

  int arity() const { return static_cast<int>(class_of_.size()); }
  int num_classes() const { return num_classes_; }
  int class_of(int pos) const { return class_of_[pos]; }
  const std::vector<int>& class_of() const { return class_of_; }
  std::vector<std::vector<int>> classes() const;

  /// One character per position naming its class ('0'-'9', then 'a'-'z').
  std::string code() const;

  friend bool operator==(const OrderType&, const OrderType&) = default;
  friend auto operator<=>(const OrderType&, const OrderType&) = default;

 private:
  std::vector<int> class_of_;
  int num_classes_ = 0;
};

/// All weak orders on `arity` positions in a fixed deterministic order
/// (ordered Bell number many).
std::vector<OrderType> enumerate_order_types(int arity);

/// The weak orders on `arity` positions in which every pair of positions
/// p < q stands in a relation accepted by `admissible(p, q, c)`, where c
/// compares p's class with q's. Pruned incrementally, so it stays cheap when
/// the predicate rules out most orders.
std::vector<OrderType> enumerate_order_types(
    int arity, const std::function<bool(int, int, Cmp)>& admissible);

struct CompleteType {
  OrderType order;
  std::vector<Rank> gaps;  // order.num_classes() + 1 entries

  int arity() const { return order.arity(); }
  friend bool operator==(const CompleteType&, const CompleteType&) = default;
};

/// Checks the gap-vector shape and that interior gaps are >= 1.
bool well_formed(const CompleteType& t);

struct Endpoint {
  enum class Kind : std::uint8_t { kVar, kMinusInf, kPlusInf };
  Kind kind = Kind::kVar;
  int var = 0;

  static Endpoint Var(int v) { return {Kind::kVar, v}; }
  static Endpoint MinusInf() { return {Kind::kMinusInf, 0}; }
  static Endpoint PlusInf() { return {Kind::kPlusInf, 0}; }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct DistanceAtom {
  Endpoint left;
  Endpoint right;
  Rank rank = 0;
  friend bool operator==(const DistanceAtom&, const DistanceAtom&) = default;
};

/// A finite set of distance atoms over variables 0..num_vars-1.
struct DistanceType {
  int num_vars = 0;
  std::vector<DistanceAtom> atoms;

  Rank rank() const;
};

/// Every atom of the complete type: pairwise atoms between positions
/// (including the mutual `<=_0` atoms of equal positions) and both boundary
/// atoms per position, with additive ranks.
DistanceType atoms_of(const CompleteType& t);

/// Maximum atom rank. For arity 0 (no atoms) the whole-line gap is used so
/// that 0-ary types still carry their finite-model requirement.
Rank rank(const CompleteType& t);

/// Per class: rank below, rank above, then every class pair (i < j) in
/// lexicographic order; 2n + n(n-1)/2 entries for n classes. A 0-ary type
/// yields its single whole-line gap.
std::vector<Rank> rank_vector(const CompleteType& t);

/// `assignment[v]` interprets variable v. Throws ModelError if an atom
/// names a variable outside the assignment.
bool satisfies(const OrderModel& m, std::span<const Element> assignment, const DistanceType& d);
bool satisfies(const OrderModel& m, std::span<const Element> tuple, const CompleteType& t);

/// The distance-d type of a tuple (consecutive distances capped at d).
CompleteType tp(const OrderModel& m, std::span<const Element> tuple, Rank d);

/// gamma implies delta: each atom of delta has an atom of gamma with the
/// same endpoints and at least its rank.
bool implies(const DistanceType& gamma, const DistanceType& delta);

/// `stronger` dominates `weaker` (weaker ⪯ stronger): same order type and
/// every gap of weaker is <= the matching gap of stronger.
bool dominates(const CompleteType& stronger, const CompleteType& weaker);

/// Whether some tuple in some linear order satisfies the type.
bool is_satisfiable(const DistanceType& d);

/// Restriction of a complete type to the given positions (repeats allowed).
/// Each new gap is the sum of the gaps it spans. Throws std::out_of_range
/// for a position outside the type.
CompleteType project(const CompleteType& t, std::span<const int> positions);

/// `[-inf] <=g0 {X1} <=g1 {X2,X3} <=g2 [+inf]`. Positions are named by
/// `names` (falls back to X1..Xk when empty).
std::string to_string(const CompleteType& t, std::span<const std::string> names = {});

// ---------------------------------------------------------------------------
// Rule combination.

/// A rule with variables numbered 0..num_vars-1 and IDB symbols numbered by
/// the caller. Constants must have been eliminated.
struct RuleShape {
  struct BodyAtom {
    int symbol = 0;
    std::vector<int> args;
  };
  int num_vars = 0;
  std::vector<std::string> var_names;
  int head_symbol = 0;
  std::vector<int> head;
  std::vector<BodyAtom> body;
  std::vector<std::pair<int, int>> less;  // left < right

  /// Throws UsageError if the rule has constants or interval atoms.
  static RuleShape compile(const Rule& r, const std::map<std::string, int>& symbol_index);
};

/// Lower bounds `pos(to) - pos(from) >= d` over the nodes MIN (0), the rule
/// variables (1..num_vars) and MAX (num_vars + 1). Positions are measured
/// along a maximal chain of the order, MIN/MAX standing for its ends.
struct ConstraintSystem {
  struct Bound {
    int from = 0;
    int to = 0;
    Rank d = 0;
  };
  int num_vars = 0;
  std::vector<Bound> bounds;

  int min_node() const { return 0; }
  int max_node() const { return num_vars + 1; }
  int var_node(int v) const { return v + 1; }
  int num_nodes() const { return num_vars + 2; }
  Rank max_bound() const;
};

/// Maps every body type (through its argument substitution), every order
/// atom, and the implicit MIN <= x <= MAX facts onto interval lower bounds.
ConstraintSystem build_constraints(const RuleShape& rule,
                                   std::span<const CompleteType* const> body_types);

/// Longest-path closure of a constraint system; std::nullopt when it has a
/// positive cycle (unsatisfiable). Absent paths are kNoPath.
inline constexpr Rank kNoPath = std::numeric_limits<Rank>::min() / 4;
using Closure = std::vector<std::vector<Rank>>;
std::optional<Closure> close(const ConstraintSystem& cs);

/// The Pareto-minimal vectors H >= 0 with, for every pair of nodes s < t of
/// a chain of q+2 nodes, H[s] + ... + H[t-1] >= need[s][t] (entries at or
/// below zero impose nothing). Returned in lexicographic order.
std::vector<std::vector<Rank>> minimal_splits(const std::vector<std::vector<Rank>>& need);

struct HeadType {
  CompleteType type;
  /// A satisfying placement of all rule variables (positions relative to
  /// MIN = 0); the last entry is the position of MAX.
  std::vector<Rank> witness;
};

/// The ⪯-minimal head types derivable by one application of `rule` to
/// tuples satisfying `body_types` (one per body IDB atom). When `sigma` (an
/// order type over all rule variables) is given only placements with that
/// order are considered; otherwise every head order type consistent with
/// the constraints is produced, which equals the minimal elements of the
/// union over all sigma.
std::vector<HeadType> combine(const RuleShape& rule,
                              std::span<const CompleteType* const> body_types,
                              const OrderType* sigma = nullptr);

}  // namespace dlorder::types

#endif  // DLORDER_TYPESYS_HPP_
