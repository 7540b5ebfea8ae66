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

#include "dlorder/transform.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dlorder {
namespace {

using types::ConstraintSystem;
using types::OrderType;

bool has_path(types::Rank d) { return d > types::kNoPath / 2; }

long double pow3(long double e) {
  long double r = 1;
  for (long double i = 0; i < e; ++i) r *= 3;
  return r;
}

// Directed cycle among `less` edges over nodes 0..n-1 (self-loops count).
bool has_cycle(int n, const std::vector<std::pair<int, int>>& less) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : less) adj[a].push_back(b);
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<int, std::size_t>> stack;
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    stack.push_back({s, 0});
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < adj[v].size()) {
        int w = adj[v][i++];
        if (state[w] == 1) return true;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

class RuleSplitter {
 public:
  RuleSplitter(const Rule& rule, std::vector<Rule>& out)
      : rule_(rule), vars_(rule.variables()), out_(out) {
    slots_.push_back(&rule.head);
    for (const Atom& a : rule.body) {
      if (const auto* idb = a.idb()) slots_.push_back(idb);
    }
    cs_.num_vars = static_cast<int>(vars_.size());
    for (const Atom& a : rule.body) {
      if (const auto* o = a.order()) {
        base_less_.emplace_back(index(o->left), index(o->right));
        cs_.bounds.push_back({cs_.var_node(base_less_.back().first),
                              cs_.var_node(base_less_.back().second), 1});
      }
    }
    tags_.resize(slots_.size());
  }

  void run() { choose(0); }

 private:
  int index(const Term& t) const {
    return static_cast<int>(std::find(vars_.begin(), vars_.end(), t.name) - vars_.begin());
  }

  std::vector<int> args(std::size_t slot) const {
    std::vector<int> a;
    for (const Term& t : slots_[slot]->args) a.push_back(index(t));
    return a;
  }

  // Tags that would close a cycle with the constraints chosen so far are
  // never generated; pairwise consistency with the closure is exact here.
  void choose(std::size_t slot) {
    if (slot == slots_.size()) {
      emit();
      return;
    }
    const auto closure = types::close(cs_);
    if (!closure) return;
    const auto& d = *closure;
    const std::vector<int> a = args(slot);
    auto admissible = [&](int p, int q, Cmp c) {
      const int u = cs_.var_node(a[p]), v = cs_.var_node(a[q]);
      if (u == v) return c == Cmp::kEqual;
      switch (c) {
        case Cmp::kEqual: return d[u][v] <= 0 && d[v][u] <= 0;
        case Cmp::kLess: return !has_path(d[v][u]);
        case Cmp::kGreater: return !has_path(d[u][v]);
      }
      return false;
    };
    for (const OrderType& tag : types::enumerate_order_types(static_cast<int>(a.size()), admissible)) {
      const std::size_t mark = cs_.bounds.size();
      const auto classes = tag.classes();
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const int rep = cs_.var_node(a[classes[c][0]]);
        for (int p : classes[c]) {
          cs_.bounds.push_back({rep, cs_.var_node(a[p]), 0});
          cs_.bounds.push_back({cs_.var_node(a[p]), rep, 0});
        }
        if (c > 0) cs_.bounds.push_back({cs_.var_node(a[classes[c - 1][0]]), rep, 1});
      }
      tags_[slot] = tag;
      choose(slot + 1);
      cs_.bounds.resize(mark);
    }
  }

  void emit() {
    const int n = static_cast<int>(vars_.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::vector<std::pair<int, int>> less = base_less_;
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      const std::vector<int> a = args(s);
      const auto classes = tags_[s].classes();
      for (std::size_t c = 0; c < classes.size(); ++c) {
        for (int p : classes[c]) {
          int x = find(a[classes[c][0]]), y = find(a[p]);
          if (x != y) parent[std::max(x, y)] = std::min(x, y);
        }
        if (c > 0) less.emplace_back(a[classes[c - 1][0]], a[classes[c][0]]);
      }
    }
    for (auto& [l, r] : less) {
      l = find(l);
      r = find(r);
    }
    if (has_cycle(n, less)) return;

    auto term = [&](int v) { return Term::Var(vars_[find(v)]); };
    auto lift = [&](std::size_t s) {
      IdbAtom atom{copy_name(slots_[s]->symbol, tags_[s]), {}};
      for (int v : args(s)) atom.args.push_back(term(v));
      return atom;
    };
    Rule r;
    r.pos = rule_.pos;
    r.head = lift(0);
    std::set<std::pair<int, int>> seen;
    std::size_t slot = 1;
    for (const Atom& a : rule_.body) {
      if (a.idb()) r.body.push_back({lift(slot++), a.pos});
    }
    for (const auto& [l, rr] : less) {
      if (seen.insert({l, rr}).second) r.body.push_back({OrderAtom{term(l), term(rr)}, rule_.pos});
    }
    if (out_.size() >= kMaxTypeDisjointRules) {
      throw UsageError("type-disjoint transform exceeds " + std::to_string(kMaxTypeDisjointRules) +
                       " rules");
    }
    out_.push_back(std::move(r));
  }

  const Rule& rule_;
  std::vector<std::string> vars_;
  std::vector<Rule>& out_;
  std::vector<const IdbAtom*> slots_;
  std::vector<std::pair<int, int>> base_less_;
  ConstraintSystem cs_;
  std::vector<OrderType> tags_;
};

std::map<std::string, std::string> lifted_symbols(const Program& p) {
  std::set<std::string> taken;
  for (const auto& s : p.idb_symbols()) taken.insert(s);
  std::map<std::string, std::string> out;
  for (const auto& s : p.idb_symbols()) {
    std::string name = s + "'";
    while (taken.count(name)) name += "'";
    taken.insert(name);
    out[s] = name;
  }
  return out;
}

}  // namespace

void TransformReport::check_bounds() const {
  const long double ml2 = static_cast<long double>(before.max_arity) * before.max_arity;
  auto fail = [](const std::string& what) { throw std::logic_error("transform bound violated: " + what); };
  if (after.n_idb > before.n_idb * pow3(ml2)) fail("n'_I <= n_I * 3^(m_L^2)");
  if (after.n_rules > before.n_rules * pow3(ml2 * (before.max_body_idbs + 1))) {
    fail("n'_R <= 3^(m_L^2 (m_I+1)) * n_R");
  }
  if (after.max_rule_vars > before.max_rule_vars) fail("m'_R <= m_R");
  if (after.max_arity > before.max_arity) fail("m'_L <= m_L");
  if (after.max_body_idbs > before.max_body_idbs) fail("m'_I <= m_I");
}

std::string copy_name(const std::string& symbol, const types::OrderType& tag) {
  return symbol + "@" + tag.code();
}

std::pair<Program, TransformReport> to_type_disjoint(const Program& p) {
  if (p.has_interval_atoms()) throw UsageError("type-disjoint transform needs an order-mode program");
  if (!p.constants.empty() || p.has_constant_occurrences()) {
    throw UsageError("eliminate constants before the type-disjoint transform");
  }
  Program out;
  TransformReport report;
  report.before = params(p);
  for (const auto& sym : p.idb_symbols()) {
    auto& list = report.copies[sym];
    for (const auto& tag : types::enumerate_order_types(*p.arity(sym))) {
      list.emplace_back(copy_name(sym, tag), tag);
      out.idb_arity[list.back().first] = tag.arity();
    }
  }
  for (const Rule& r : p.rules) RuleSplitter(r, out.rules).run();
  report.after = params(out);
  report.check_bounds();
  return {std::move(out), std::move(report)};
}

std::string lifted_symbol(const Program& p, const std::string& symbol) {
  auto names = lifted_symbols(p);
  auto it = names.find(symbol);
  if (it == names.end()) throw UsageError("unknown IDB symbol '" + symbol + "'");
  return it->second;
}

std::vector<std::string> constant_variables(const Program& p,
                                            const std::vector<std::string>& constants) {
  std::set<std::string> taken;
  for (const Rule& r : p.rules) {
    for (const auto& v : r.variables()) taken.insert(v);
  }
  std::vector<std::string> out;
  for (const auto& c : constants) {
    std::string name = c;
    name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    while (taken.count(name)) name += "_";
    taken.insert(name);
    out.push_back(name);
  }
  return out;
}

Program eliminate_constants(const Program& p, const std::vector<std::string>& constants) {
  if (p.has_interval_atoms()) throw UsageError("constants are not supported in interval mode");
  for (const auto& c : constants) {
    if (std::find(p.constants.begin(), p.constants.end(), c) == p.constants.end()) {
      throw ParseError({}, "undeclared constant '" + c + "'");
    }
  }
  const auto names = lifted_symbols(p);
  const auto cvars = constant_variables(p, constants);
  auto term = [&](const Term& t, SourcePos pos) {
    if (t.is_var()) return t;
    auto it = std::find(constants.begin(), constants.end(), t.name);
    if (it == constants.end()) throw ParseError(pos, "undeclared constant '" + t.name + "'");
    return Term::Var(cvars[it - constants.begin()]);
  };
  auto lift = [&](const IdbAtom& a, SourcePos pos) {
    IdbAtom out{names.at(a.symbol), {}};
    for (const auto& v : cvars) out.args.push_back(Term::Var(v));
    for (const Term& t : a.args) out.args.push_back(term(t, pos));
    return out;
  };
  Program out;
  for (const Rule& r : p.rules) {
    Rule nr;
    nr.pos = r.pos;
    nr.head = lift(r.head, r.pos);
    for (const Atom& a : r.body) {
      if (const auto* idb = a.idb()) {
        nr.body.push_back({lift(*idb, a.pos), a.pos});
      } else {
        const auto& o = *a.order();
        nr.body.push_back({OrderAtom{term(o.left, a.pos), term(o.right, a.pos)}, a.pos});
      }
    }
    out.rules.push_back(std::move(nr));
  }
  for (const auto& [sym, k] : p.idb_arity) {
    out.idb_arity[names.at(sym)] = k + static_cast<int>(constants.size());
  }
  return out;
}

}  // namespace dlorder
