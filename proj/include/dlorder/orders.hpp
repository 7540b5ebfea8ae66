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

// Linearly ordered domains: a finite chain {0,...,n-1}, the naturals, the
// integers and the rationals. The rationals stand in for any dense order
// without endpoints.

#ifndef DLORDER_ORDERS_HPP_
#define DLORDER_ORDERS_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "dlorder/error.hpp"

namespace dlorder {

/// An element of some model. Integer-valued models use `den == 1`;
/// rationals are kept reduced with `den > 0`.
struct Element {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Element integer(std::int64_t v) { return {v, 1}; }
  static Element fraction(std::int64_t num, std::int64_t den);  // reduces
  std::string str() const;
  friend bool operator==(const Element&, const Element&) = default;
};

enum class Cmp : std::int8_t { kLess = -1, kEqual = 0, kGreater = 1 };

enum class Side : std::uint8_t { kBelowToMin, kAboveToMax };

/// Distances are capped at a caller-chosen bound; `kUnbounded` is handy as a
/// cap that never binds.
inline constexpr std::int64_t kUnbounded = std::int64_t{1} << 60;

class OrderModel {
 public:
  enum class Kind : std::uint8_t { kFinite, kNaturals, kIntegers, kRationals };

  static OrderModel finite(std::int64_t n);
  static OrderModel naturals() { return OrderModel(Kind::kNaturals, 0); }
  static OrderModel integers() { return OrderModel(Kind::kIntegers, 0); }
  static OrderModel rationals() { return OrderModel(Kind::kRationals, 0); }

  /// Parses `finite:N`, `nat`, `int` or `rat`. Throws ModelError.
  static OrderModel parse(std::string_view spec);

  Kind kind() const { return kind_; }
  std::int64_t size() const { return size_; }  // Finite only
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_dense() const { return kind_ == Kind::kRationals; }
  std::string spec() const;

  bool contains(const Element& e) const;

  /// Throws ModelError when either element is outside the domain.
  Cmp compare(const Element& a, const Element& b) const;

  /// min(cap, d(a, b)) where d is the length of the longest strictly
  /// increasing chain from a to b. Requires a <= b (throws ModelError
  /// otherwise).
  std::int64_t distance(const Element& a, const Element& b, std::int64_t cap) const;

  /// min(cap, number of strict steps available from a towards the minimum
  /// or the maximum of the order).
  std::int64_t boundary_distance(const Element& a, Side side, std::int64_t cap) const;

  /// min(cap, length of the longest chain in the whole order): n - 1 for
  /// finite:n, unbounded otherwise.
  std::int64_t span(std::int64_t cap) const;

  /// Throws ModelError on malformed or out-of-range literals.
  Element parse_element(std::string_view s) const;

  /// Constant interpretations.
  void bind(const std::string& constant, const Element& e);
  const std::map<std::string, Element>& bindings() const { return bindings_; }

 private:
  OrderModel(Kind k, std::int64_t n) : kind_(k), size_(n) {}
  void require(const Element& e) const;

  Kind kind_;
  std::int64_t size_;
  std::map<std::string, Element> bindings_;
};

}  // namespace dlorder

#endif  // DLORDER_ORDERS_HPP_
