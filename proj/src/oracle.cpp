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

#include "dlorder/oracle.hpp"

#include <algorithm>

namespace dlorder {
namespace {

class Instantiator {
 public:
  Instantiator(const Rule& r, std::int64_t n, const std::map<std::string, std::int64_t>& consts,
               const GroundRelationStore& prev, std::vector<std::pair<std::string, GroundTuple>>& out)
      : rule_(r), vars_(r.variables()), n_(n), consts_(consts), prev_(prev), out_(out),
        value_(vars_.size(), 0) {}

  void run() { assign(0); }

 private:
  std::int64_t eval(const Term& t) const {
    if (t.is_const()) return consts_.at(t.name);
    return value_[std::find(vars_.begin(), vars_.end(), t.name) - vars_.begin()];
  }

  GroundTuple ground(const IdbAtom& a) const {
    GroundTuple t;
    for (const Term& x : a.args) t.push_back(eval(x));
    return t;
  }

  bool body_holds() const {
    for (const Atom& a : rule_.body) {
      if (const auto* idb = a.idb()) {
        if (!prev_.contains(idb->symbol, ground(*idb))) return false;
      } else if (const auto* o = a.order()) {
        if (!(eval(o->left) < eval(o->right))) return false;
      }
    }
    return true;
  }

  void assign(std::size_t i) {
    if (i == vars_.size()) {
      if (body_holds()) out_.emplace_back(rule_.head.symbol, ground(rule_.head));
      return;
    }
    for (std::int64_t v = 0; v < n_; ++v) {
      value_[i] = v;
      assign(i + 1);
    }
  }

  const Rule& rule_;
  std::vector<std::string> vars_;
  std::int64_t n_;
  const std::map<std::string, std::int64_t>& consts_;
  const GroundRelationStore& prev_;
  std::vector<std::pair<std::string, GroundTuple>>& out_;
  std::vector<std::int64_t> value_;
};

}  // namespace

const std::set<GroundTuple>& GroundRelationStore::relation(const std::string& symbol) const {
  static const std::set<GroundTuple> kEmpty;
  auto it = relations_.find(symbol);
  return it == relations_.end() ? kEmpty : it->second;
}

bool GroundRelationStore::contains(const std::string& symbol, const GroundTuple& t) const {
  return relation(symbol).count(t) > 0;
}

bool GroundRelationStore::insert(const std::string& symbol, GroundTuple t) {
  return relations_[symbol].insert(std::move(t)).second;
}

GroundRelationStore naive_eval(const Program& p, const OrderModel& m,
                               const std::map<std::string, Element>& bindings) {
  if (!m.is_finite()) throw ModelError("the reference evaluator needs a finite model");
  if (p.has_interval_atoms()) throw UsageError("the reference evaluator needs an order-mode program");
  std::map<std::string, std::int64_t> consts;
  for (const auto& c : p.constants) {
    auto it = bindings.find(c);
    if (it == bindings.end()) throw ModelError("unbound declared constant '" + c + "'");
    if (!m.contains(it->second)) throw ModelError("constant '" + c + "' is outside " + m.spec());
    consts[c] = it->second.num;
  }
  GroundRelationStore store;
  while (true) {
    // Stage i+1 is derived from stage i only.
    std::vector<std::pair<std::string, GroundTuple>> derived;
    for (const Rule& r : p.rules) Instantiator(r, m.size(), consts, store, derived).run();
    bool grew = false;
    for (auto& [sym, t] : derived) grew |= store.insert(sym, std::move(t));
    store.next_stage();
    if (!grew) break;
  }
  return store;
}

bool naive_nonempty(const Program& p, const OrderModel& m,
                    const std::map<std::string, Element>& bindings, const std::string& goal) {
  return !naive_eval(p, m, bindings).relation(goal).empty();
}

bool naive_tuple(const Program& p, const OrderModel& m,
                 const std::map<std::string, Element>& bindings, const std::string& goal,
                 std::span<const std::int64_t> tuple) {
  auto k = p.arity(goal);
  if (!k) throw UsageError("unknown goal '" + goal + "'");
  if (static_cast<std::size_t>(*k) != tuple.size()) {
    throw UsageError("goal '" + goal + "' expects " + std::to_string(*k) + " elements");
  }
  return naive_eval(p, m, bindings).contains(goal, GroundTuple(tuple.begin(), tuple.end()));
}

std::string dump(const Program& p, const GroundRelationStore& store) {
  std::string out;
  for (const auto& sym : p.idb_symbols()) {
    for (const GroundTuple& t : store.relation(sym)) {
      out += sym + "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t[i]);
      }
      out += ")\n";
    }
  }
  return out;
}

}  // namespace dlorder
