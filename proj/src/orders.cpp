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

#include "dlorder/orders.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace dlorder {
namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ModelError("malformed element literal '" + std::string(s) + "'");
  }
  return v;
}

// Saturating b - a for a <= b.
std::int64_t gap(std::int64_t a, std::int64_t b) {
  __int128 d = static_cast<__int128>(b) - a;
  return d > kUnbounded ? kUnbounded : static_cast<std::int64_t>(d);
}

}  // namespace

Element Element::fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ModelError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::string Element::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

OrderModel OrderModel::finite(std::int64_t n) {
  if (n < 1) throw ModelError("finite order needs at least one element");
  return OrderModel(Kind::kFinite, n);
}

OrderModel OrderModel::parse(std::string_view spec) {
  if (spec == "nat") return naturals();
  if (spec == "int") return integers();
  if (spec == "rat") return rationals();
  constexpr std::string_view kFinite = "finite:";
  if (spec.substr(0, kFinite.size()) == kFinite) {
    std::int64_t n = 0;
    try {
      n = parse_int(spec.substr(kFinite.size()));
    } catch (const ModelError&) {
      throw ModelError("malformed model spec '" + std::string(spec) + "'");
    }
    return finite(n);
  }
  throw ModelError("unknown model '" + std::string(spec) +
                   "' (expected finite:N, nat, int or rat)");
}

std::string OrderModel::spec() const {
  switch (kind_) {
    case Kind::kFinite: return "finite:" + std::to_string(size_);
    case Kind::kNaturals: return "nat";
    case Kind::kIntegers: return "int";
    case Kind::kRationals: return "rat";
  }
  return "?";
}

bool OrderModel::contains(const Element& e) const {
  switch (kind_) {
    case Kind::kFinite: return e.den == 1 && e.num >= 0 && e.num < size_;
    case Kind::kNaturals: return e.den == 1 && e.num >= 0;
    case Kind::kIntegers: return e.den == 1;
    case Kind::kRationals: return e.den > 0 && std::gcd(e.num, e.den) == 1;
  }
  return false;
}

void OrderModel::require(const Element& e) const {
  if (!contains(e)) throw ModelError("element " + e.str() + " is not in " + spec());
}

Cmp OrderModel::compare(const Element& a, const Element& b) const {
  require(a);
  require(b);
  __int128 l = static_cast<__int128>(a.num) * b.den;
  __int128 r = static_cast<__int128>(b.num) * a.den;
  if (l < r) return Cmp::kLess;
  if (l > r) return Cmp::kGreater;
  return Cmp::kEqual;
}

std::int64_t OrderModel::distance(const Element& a, const Element& b, std::int64_t cap) const {
  Cmp c = compare(a, b);
  if (c == Cmp::kGreater) throw ModelError("distance requires a <= b");
  if (c == Cmp::kEqual) return 0;
  if (kind_ == Kind::kRationals) return cap;
  return std::min(cap, gap(a.num, b.num));
}

std::int64_t OrderModel::boundary_distance(const Element& a, Side side, std::int64_t cap) const {
  require(a);
  switch (kind_) {
    case Kind::kFinite:
      return std::min(cap, side == Side::kBelowToMin ? a.num : size_ - 1 - a.num);
    case Kind::kNaturals:
      return side == Side::kBelowToMin ? std::min(cap, a.num) : cap;
    case Kind::kIntegers:
    case Kind::kRationals:
      return cap;
  }
  return cap;
}

std::int64_t OrderModel::span(std::int64_t cap) const {
  return kind_ == Kind::kFinite ? std::min(cap, size_ - 1) : cap;
}

Element OrderModel::parse_element(std::string_view s) const {
  Element e;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    if (kind_ != Kind::kRationals) {
      throw ModelError("fraction literal '" + std::string(s) + "' in " + spec());
    }
    e = Element::fraction(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  } else {
    e = Element::integer(parse_int(s));
  }
  if (!contains(e)) {
    throw ModelError("element " + std::string(s) + " is out of range for " + spec());
  }
  return e;
}

void OrderModel::bind(const std::string& constant, const Element& e) {
  require(e);
  bindings_[constant] = e;
}

}  // namespace dlorder
