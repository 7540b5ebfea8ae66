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

#ifndef DLORDER_ANTICHAIN_HPP_
#define DLORDER_ANTICHAIN_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "dlorder/typesys.hpp"

namespace dlorder {

/// Gap vector stored for one order type, with provenance.
struct TypeEntry {
  std::vector<types::Rank> gaps;
  std::vector<types::Rank> witness;  // see types::HeadType
  std::uint64_t id = 0;              // global insertion counter
  int rule = -1;                     // rule that derived it
};

/// Componentwise-minimal gap vectors of a single order type. A vector is
/// rejected when an existing one is <= it; otherwise every existing vector
/// >= it is evicted.
class Antichain {
 public:
  /// Returns true iff `e` was added.
  bool insert(TypeEntry e);

  /// Some stored vector is componentwise <= `gaps`.
  bool covers(std::span<const types::Rank> gaps) const;

  const std::vector<TypeEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<TypeEntry> entries_;
};

/// a[i] <= b[i] for all i (same length required).
bool leq(std::span<const types::Rank> a, std::span<const types::Rank> b);

}  // namespace dlorder

#endif  // DLORDER_ANTICHAIN_HPP_
