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

// Allen's interval algebra over open intervals (x-, x+) with x- < x+, and
// the translations between interval programs and order programs.

#ifndef DLORDER_ALLEN_HPP_
#define DLORDER_ALLEN_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dlorder/core.hpp"

namespace dlorder::allen {

enum class Basic : std::uint8_t {
  kPrecedes = 0,   // p:  x+ < y-
  kMeets,          // m:  x+ = y-
  kOverlaps,       // o:  x- < y- < x+ < y+
  kDuring,         // d:  y- < x-, x+ < y+
  kStarts,         // s:  x- = y-, x+ < y+
  kFinishes,       // f:  y- < x-, x+ = y+
  kEquals,         // eq: x- = y-, x+ = y+
  kPrecededBy,     // pi
  kMetBy,          // mi
  kOverlappedBy,   // oi
  kIncludes,       // di
  kStartedBy,      // si
  kFinishedBy,     // fi
};

inline constexpr int kNumBasic = 13;

/// All 13 basics in enumeration order.
std::array<Basic, kNumBasic> all_basics();

std::string_view name(Basic b);
std::optional<Basic> basic_from_name(std::string_view name);
Basic converse(Basic b);

/// Endpoint values of two intervals.
struct Endpoints {
  std::int64_t x_lo, x_hi, y_lo, y_hi;
};

/// Whether the defining endpoint conjunction of `b` holds. Interval validity
/// (lo < hi) is not checked here.
bool holds(Basic b, const Endpoints& e);

/// A subset of the 13 basic relations.
class Relation {
 public:
  constexpr Relation() = default;
  constexpr explicit Relation(RelationBits bits) : bits_(bits & kAllBits) {}
  static Relation of(Basic b) { return Relation(bit(b)); }
  static constexpr Relation full() { return Relation(kAllBits); }
  static constexpr Relation empty() { return Relation(); }

  bool contains(Basic b) const { return (bits_ & bit(b)) != 0; }
  bool is_empty() const { return bits_ == 0; }
  int size() const;
  RelationBits bits() const { return bits_; }

  friend bool operator==(const Relation&, const Relation&) = default;

  static constexpr RelationBits kAllBits = (1u << kNumBasic) - 1;
  static constexpr RelationBits bit(Basic b) {
    return static_cast<RelationBits>(1u << static_cast<unsigned>(b));
  }

 private:
  RelationBits bits_ = 0;
};

Relation converse(Relation r);
Relation intersect(Relation r, Relation s);
/// Composition of basics, from a table enumerated once on first use.
Relation compose(Basic r, Basic s);
/// Union of compose over all pairs of basics.
Relation compose(Relation r, Relation s);

/// The composition table derived by enumerating every arrangement of the
/// six endpoints of three valid intervals (integer values 0..5 cover every
/// weak order on six points).
using CompositionTable = std::array<std::array<Relation, kNumBasic>, kNumBasic>;
CompositionTable enumerate_composition_table();

/// "{p,m}" style text.
std::string to_string(Relation r);

/// Maximum number of rules interval_to_order may produce.
inline constexpr std::size_t kMaxSplitRules = 10000;

/// Replaces every interval variable X by endpoint variables (Xm, Xp) with
/// Xm < Xp, each basic atom by its endpoint conjunction (equalities become
/// variable identifications) and splits rules over union atoms. IDB arities
/// double. Throws UsageError for programs with constants or order atoms and
/// when the split exceeds kMaxSplitRules.
Program interval_to_order(const Program& p);

/// Replaces every order atom x < y by p(x, y). Throws UsageError when the
/// program has constants or interval atoms.
Program order_to_interval(const Program& p);

}  // namespace dlorder::allen

#endif  // DLORDER_ALLEN_HPP_
