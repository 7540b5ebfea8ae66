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
#include <fstream>
#include <sstream>

#include "dlorder/core.hpp"

namespace dlorder {

std::string SourcePos::str() const {
  return std::to_string(line) + ":" + std::to_string(column);
}

namespace {

void add_var(std::vector<std::string>& out, const Term& t) {
  if (t.is_var() && std::find(out.begin(), out.end(), t.name) == out.end()) {
    out.push_back(t.name);
  }
}

}  // namespace

std::vector<std::string> Rule::variables() const {
  std::vector<std::string> vars;
  for (const Term& t : head.args) add_var(vars, t);
  for (const Atom& a : body) {
    if (const auto* idb = a.idb()) {
      for (const Term& t : idb->args) add_var(vars, t);
    } else if (const auto* o = a.order()) {
      add_var(vars, o->left);
      add_var(vars, o->right);
    } else if (const auto* iv = a.interval()) {
      add_var(vars, iv->left);
      add_var(vars, iv->right);
    }
  }
  return vars;
}

bool Program::has_interval_atoms() const {
  for (const Rule& r : rules) {
    for (const Atom& a : r.body) {
      if (a.interval()) return true;
    }
  }
  return false;
}

bool Program::has_order_atoms() const {
  for (const Rule& r : rules) {
    for (const Atom& a : r.body) {
      if (a.order()) return true;
    }
  }
  return false;
}

ProgramMode Program::mode() const {
  return has_interval_atoms() ? ProgramMode::kInterval : ProgramMode::kOrder;
}

bool Program::has_constant_occurrences() const {
  auto any_const = [](const std::vector<Term>& ts) {
    return std::any_of(ts.begin(), ts.end(), [](const Term& t) { return t.is_const(); });
  };
  for (const Rule& r : rules) {
    if (any_const(r.head.args)) return true;
    for (const Atom& a : r.body) {
      if (const auto* idb = a.idb(); idb && any_const(idb->args)) return true;
      if (const auto* o = a.order(); o && (o->left.is_const() || o->right.is_const())) return true;
      if (const auto* iv = a.interval();
          iv && (iv->left.is_const() || iv->right.is_const())) {
        return true;
      }
    }
  }
  return false;
}

std::optional<int> Program::arity(std::string_view symbol) const {
  auto it = idb_arity.find(std::string(symbol));
  if (it == idb_arity.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Program::idb_symbols() const {
  std::vector<std::string> out;
  auto add = [&](const std::string& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const Rule& r : rules) {
    add(r.head.symbol);
    for (const Atom& a : r.body) {
      if (const auto* idb = a.idb()) add(idb->symbol);
    }
  }
  // Symbols registered without any occurrence (e.g. after a transform that
  // deleted every rule of a copy) keep their declared arity.
  for (const auto& [sym, _] : idb_arity) add(sym);
  return out;
}

void Program::recompute_arities() {
  idb_arity.clear();
  for (const Rule& r : rules) {
    idb_arity.emplace(r.head.symbol, static_cast<int>(r.head.args.size()));
    for (const Atom& a : r.body) {
      if (const auto* idb = a.idb()) {
        idb_arity.emplace(idb->symbol, static_cast<int>(idb->args.size()));
      }
    }
  }
}

ProgramParams params(const Program& p) {
  ProgramParams out;
  out.n_rules = static_cast<int>(p.rules.size());
  std::vector<std::string> idbs;
  for (const Rule& r : p.rules) {
    if (std::find(idbs.begin(), idbs.end(), r.head.symbol) == idbs.end()) {
      idbs.push_back(r.head.symbol);
    }
  }
  // IDBs without rules still count: they are relation symbols of the
  // program that are not EDBs.
  for (const auto& [sym, arity] : p.idb_arity) {
    if (std::find(idbs.begin(), idbs.end(), sym) == idbs.end()) idbs.push_back(sym);
    out.max_arity = std::max(out.max_arity, arity);
  }
  out.n_idb = static_cast<int>(idbs.size());
  for (const Rule& r : p.rules) {
    out.max_arity = std::max(out.max_arity, static_cast<int>(r.head.args.size()));
    out.max_rule_vars = std::max(out.max_rule_vars, static_cast<int>(r.variables().size()));
    int body_idbs = 0;
    int length = 1 + static_cast<int>(r.head.args.size());
    for (const Atom& a : r.body) {
      ++length;
      if (const auto* idb = a.idb()) {
        ++body_idbs;
        length += static_cast<int>(idb->args.size());
      } else {
        length += 2;
      }
    }
    out.max_body_idbs = std::max(out.max_body_idbs, body_idbs);
    out.length += length;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dlorder
