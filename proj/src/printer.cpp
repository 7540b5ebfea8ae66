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

#include "dlorder/allen.hpp"
#include "dlorder/core.hpp"

namespace dlorder {
namespace {

std::string join_terms(const std::vector<Term>& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ',';
    out += ts[i].name;
  }
  return out;
}

}  // namespace

std::string print(const IdbAtom& a) {
  return a.symbol + "(" + join_terms(a.args) + ")";
}

std::string print(const Atom& a) {
  if (const auto* idb = a.idb()) return print(*idb);
  if (const auto* o = a.order()) return o->left.name + "<" + o->right.name;
  const auto& iv = *a.interval();
  allen::Relation rel(iv.relations);
  std::string rels;
  if (rel.size() == 1) {
    for (allen::Basic b : allen::all_basics()) {
      if (rel.contains(b)) rels = std::string(allen::name(b));
    }
  } else {
    rels = "[";
    bool first = true;
    for (allen::Basic b : allen::all_basics()) {
      if (!rel.contains(b)) continue;
      if (!first) rels += ',';
      rels += allen::name(b);
      first = false;
    }
    rels += "]";
  }
  return rels + "(" + iv.left.name + "," + iv.right.name + ")";
}

std::string print(const Rule& r) {
  std::string out = print(r.head);
  if (!r.body.empty()) {
    out += " :- ";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      if (i) out += ", ";
      out += print(r.body[i]);
    }
  }
  return out + ".";
}

std::string print(const Program& p) {
  std::string out;
  if (!p.constants.empty()) {
    out += "@const ";
    for (std::size_t i = 0; i < p.constants.size(); ++i) {
      if (i) out += ", ";
      out += p.constants[i];
    }
    out += ".\n";
  }
  for (const ConstantBinding& b : p.bindings) {
    out += "@bind " + b.constant + " = " + b.element + ".\n";
  }
  for (const Rule& r : p.rules) out += print(r) + "\n";
  return out;
}

}  // namespace dlorder
