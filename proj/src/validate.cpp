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

#include <algorithm>
#include <set>
#include <tuple>

#include "dlorder/core.hpp"

namespace dlorder {
namespace {

class Validator {
 public:
  explicit Validator(const Program& p) : p_(p) {}

  std::vector<Diagnostic> run() {
    const SourcePos* first_order = nullptr;
    const SourcePos* first_interval = nullptr;
    std::map<std::string, int> arity;
    std::set<std::string> bound;

    for (const ConstantBinding& b : p_.bindings) {
      if (!declared(b.constant)) {
        add(b.pos, "binding of undeclared constant '" + b.constant + "'");
      } else if (!bound.insert(b.constant).second) {
        add(b.pos, "constant '" + b.constant + "' bound twice");
      }
    }

    for (const Rule& r : p_.rules) {
      check_symbol(r.head, r.pos, arity);
      for (const Atom& a : r.body) {
        if (const auto* idb = a.idb()) {
          check_symbol(*idb, a.pos, arity);
        } else if (const auto* o = a.order()) {
          if (!first_order) first_order = &a.pos;
          check_term(o->left, a.pos);
          check_term(o->right, a.pos);
        } else if (const auto* iv = a.interval()) {
          if (!first_interval) first_interval = &a.pos;
          if (iv->relations == 0) add(a.pos, "empty interval relation");
          check_term(iv->left, a.pos);
          check_term(iv->right, a.pos);
          if (iv->left.is_const() || iv->right.is_const()) {
            add(a.pos, "constants are not supported in interval atoms");
          }
        }
      }
    }
    for (const auto& [sym, n] : p_.idb_arity) {
      auto it = arity.find(sym);
      if (it != arity.end() && it->second != n) {
        add({}, "recorded arity of '" + sym + "' disagrees with its uses");
      }
    }
    if (first_order && first_interval) {
      const SourcePos& later =
          std::tie(first_order->line, first_order->column) <
                  std::tie(first_interval->line, first_interval->column)
              ? *first_interval
              : *first_order;
      add(later, "mixed atom modes: order atoms and interval atoms in one program");
    }
    if (first_interval && !p_.constants.empty()) {
      add(*first_interval, "constants are not supported in interval mode");
    }
    return std::move(diags_);
  }

 private:
  bool declared(const std::string& c) const {
    return std::find(p_.constants.begin(), p_.constants.end(), c) != p_.constants.end();
  }

  void add(SourcePos pos, std::string msg) { diags_.push_back({pos, std::move(msg)}); }

  void check_term(const Term& t, SourcePos pos) {
    if (t.name.empty()) {
      add(pos, "empty term name");
    } else if (t.is_const() && !declared(t.name)) {
      add(pos, "undeclared constant '" + t.name + "'");
    }
  }

  void check_symbol(const IdbAtom& a, SourcePos pos, std::map<std::string, int>& arity) {
    if (a.symbol == "<" || is_relation_name(a.symbol)) {
      add(pos, "reserved EDB used as IDB: '" + a.symbol + "'");
    } else if (a.symbol.empty()) {
      add(pos, "empty relation symbol");
    }
    auto [it, inserted] = arity.emplace(a.symbol, static_cast<int>(a.args.size()));
    if (!inserted && it->second != static_cast<int>(a.args.size())) {
      add(pos, "arity mismatch for '" + a.symbol + "'");
    }
    for (const Term& t : a.args) check_term(t, pos);
  }

  const Program& p_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> validate(const Program& p) { return Validator(p).run(); }

void require_valid(const Program& p) {
  auto diags = validate(p);
  if (!diags.empty()) throw ParseError(diags.front().pos, diags.front().message);
}

}  // namespace dlorder
