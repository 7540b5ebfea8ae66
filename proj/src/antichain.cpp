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

#include "dlorder/antichain.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlorder {

bool leq(std::span<const types::Rank> a, std::span<const types::Rank> b) {
  if (a.size() != b.size()) throw std::invalid_argument("gap vectors of different length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool Antichain::covers(std::span<const types::Rank> gaps) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const TypeEntry& e) { return leq(e.gaps, gaps); });
}

bool Antichain::insert(TypeEntry e) {
  if (covers(e.gaps)) return false;
  std::erase_if(entries_, [&](const TypeEntry& old) { return leq(e.gaps, old.gaps); });
  entries_.push_back(std::move(e));
  return true;
}

}  // namespace dlorder
