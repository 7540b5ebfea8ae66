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

// One rule application on types.
//
// The body types and order atoms become lower bounds on differences of
// positions along a chain from MIN to MAX. After the longest-path closure D,
// a head order type tau is realisable iff it is pairwise consistent with D
// (D(u,v) >= 0 forces u <= v, D(u,v) >= 1 forces u < v). For a fixed tau
// the achievable head gap vectors are exactly those whose interval sums
// dominate the closure distances between head classes, so the minimal
// head types are the minimal solutions of an interval covering problem.

#include <algorithm>
#include <stdexcept>

#include "dlorder/typesys.hpp"

namespace dlorder::types {
namespace {

bool has_path(Rank d) { return d > kNoPath / 2; }

void add_equal(ConstraintSystem& cs, int a, int b) {
  cs.bounds.push_back({a, b, 0});
  cs.bounds.push_back({b, a, 0});
}

// Pins the nodes `nodes[p]` (p = 0..arity-1) to the pattern of `t`.
void add_type(ConstraintSystem& cs, const CompleteType& t, const std::vector<int>& nodes) {
  if (t.order.arity() != static_cast<int>(nodes.size()) ||
      t.gaps.size() != static_cast<std::size_t>(t.order.num_classes() + 1)) {
    throw std::invalid_argument("body type does not fit its atom");
  }
  if (nodes.empty()) {
    cs.bounds.push_back({cs.min_node(), cs.max_node(), t.gaps[0]});
    return;
  }
  const auto classes = t.order.classes();
  std::vector<int> rep;
  for (const auto& cls : classes) {
    rep.push_back(nodes[cls.front()]);
    for (std::size_t i = 1; i < cls.size(); ++i) add_equal(cs, nodes[cls.front()], nodes[cls[i]]);
  }
  cs.bounds.push_back({cs.min_node(), rep.front(), t.gaps.front()});
  for (std::size_t j = 1; j < rep.size(); ++j) cs.bounds.push_back({rep[j - 1], rep[j], t.gaps[j]});
  cs.bounds.push_back({rep.back(), cs.max_node(), t.gaps.back()});
}

class SplitSearch {
 public:
  explicit SplitSearch(const std::vector<std::vector<Rank>>& need)
      : need_(need), gaps_(need.size() - 1), h_(gaps_, 0), prefix_(gaps_ + 1, 0) {}

  std::vector<std::vector<Rank>> run() {
    dfs(0);
    return std::move(out_);
  }

 private:
  // Sum of h over [s, t) given prefix sums up to r >= t - 1.
  Rank sum(std::size_t s, std::size_t t) const { return prefix_[t] - prefix_[s]; }

  void dfs(std::size_t r) {
    if (r == gaps_) {
      if (minimal()) out_.push_back(h_);
      return;
    }
    // Constraints ending right after gap r fix its lower bound; the largest
    // outstanding need of any constraint through r bounds useful values.
    Rank lo = 0, hi = 0;
    for (std::size_t s = 0; s <= r; ++s) {
      const Rank have = prefix_[r] - prefix_[s];
      lo = std::max(lo, need_[s][r + 1] - have);
      for (std::size_t t = r + 1; t <= gaps_; ++t) hi = std::max(hi, need_[s][t] - have);
    }
    for (Rank v = lo; v <= std::max(lo, hi); ++v) {
      h_[r] = v;
      prefix_[r + 1] = prefix_[r] + v;
      if (!can_be_minimal(r + 1)) break;  // larger v only overshoots more
      dfs(r + 1);
    }
  }

  // Every positive coordinate below `depth` is tight for a closed constraint
  // or may still become tight for one ending later.
  bool can_be_minimal(std::size_t depth) const {
    for (std::size_t j = 0; j < depth; ++j) {
      if (h_[j] == 0) continue;
      bool ok = false;
      for (std::size_t s = 0; s <= j && !ok; ++s) {
        for (std::size_t t = j + 1; t <= gaps_ && !ok; ++t) {
          if (need_[s][t] <= 0) continue;
          ok = t <= depth ? sum(s, t) == need_[s][t] : sum(s, depth) <= need_[s][t];
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  // No positive coordinate can be lowered without breaking a constraint.
  bool minimal() const {
    for (std::size_t r = 0; r < gaps_; ++r) {
      if (h_[r] == 0) continue;
      bool tight = false;
      for (std::size_t s = 0; s <= r && !tight; ++s) {
        for (std::size_t t = r + 1; t <= gaps_ && !tight; ++t) {
          tight = need_[s][t] > 0 && sum(s, t) == need_[s][t];
        }
      }
      if (!tight) return false;
    }
    return true;
  }

  const std::vector<std::vector<Rank>>& need_;
  std::size_t gaps_;
  std::vector<Rank> h_;
  std::vector<Rank> prefix_;
  std::vector<std::vector<Rank>> out_;
};

}  // namespace

RuleShape RuleShape::compile(const Rule& r, const std::map<std::string, int>& symbol_index) {
  RuleShape s;
  s.var_names = r.variables();
  s.num_vars = static_cast<int>(s.var_names.size());
  auto var = [&](const Term& t) {
    if (t.is_const()) throw UsageError("constant '" + t.name + "' must be eliminated first");
    return static_cast<int>(std::find(s.var_names.begin(), s.var_names.end(), t.name) -
                            s.var_names.begin());
  };
  auto symbol = [&](const std::string& name) {
    auto it = symbol_index.find(name);
    if (it == symbol_index.end()) throw UsageError("unknown IDB symbol '" + name + "'");
    return it->second;
  };
  s.head_symbol = symbol(r.head.symbol);
  for (const Term& t : r.head.args) s.head.push_back(var(t));
  for (const Atom& a : r.body) {
    if (const auto* idb = a.idb()) {
      BodyAtom b{symbol(idb->symbol), {}};
      for (const Term& t : idb->args) b.args.push_back(var(t));
      s.body.push_back(std::move(b));
    } else if (const auto* o = a.order()) {
      s.less.emplace_back(var(o->left), var(o->right));
    } else {
      throw UsageError("interval atoms must be translated to order atoms first");
    }
  }
  return s;
}

Rank ConstraintSystem::max_bound() const {
  Rank m = 0;
  for (const Bound& b : bounds) m = std::max(m, b.d);
  return m;
}

ConstraintSystem build_constraints(const RuleShape& rule,
                                   std::span<const CompleteType* const> body_types) {
  if (body_types.size() != rule.body.size()) {
    throw std::invalid_argument("one body type per body atom expected");
  }
  ConstraintSystem cs;
  cs.num_vars = rule.num_vars;
  for (int v = 0; v < rule.num_vars; ++v) {
    cs.bounds.push_back({cs.min_node(), cs.var_node(v), 0});
    cs.bounds.push_back({cs.var_node(v), cs.max_node(), 0});
  }
  cs.bounds.push_back({cs.min_node(), cs.max_node(), 0});
  for (const auto& [l, r] : rule.less) cs.bounds.push_back({cs.var_node(l), cs.var_node(r), 1});
  for (std::size_t i = 0; i < rule.body.size(); ++i) {
    std::vector<int> nodes;
    for (int v : rule.body[i].args) nodes.push_back(cs.var_node(v));
    add_type(cs, *body_types[i], nodes);
  }
  return cs;
}

std::optional<Closure> close(const ConstraintSystem& cs) {
  const int n = cs.num_nodes();
  Closure d(n, std::vector<Rank>(n, kNoPath));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& b : cs.bounds) d[b.from][b.to] = std::max(d[b.from][b.to], b.d);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!has_path(d[i][k])) continue;
      for (int j = 0; j < n; ++j) {
        if (has_path(d[k][j])) d[i][j] = std::max(d[i][j], d[i][k] + d[k][j]);
      }
    }
    if (d[k][k] > 0) return std::nullopt;
  }
  for (int i = 0; i < n; ++i) {
    if (d[i][i] > 0) return std::nullopt;
  }
  return d;
}

std::vector<std::vector<Rank>> minimal_splits(const std::vector<std::vector<Rank>>& need) {
  if (need.size() < 2) throw std::invalid_argument("a chain needs at least two nodes");
  return SplitSearch(need).run();
}

std::vector<HeadType> combine(const RuleShape& rule,
                              std::span<const CompleteType* const> body_types,
                              const OrderType* sigma) {
  ConstraintSystem cs = build_constraints(rule, body_types);
  if (sigma) {
    if (sigma->arity() != rule.num_vars) throw std::invalid_argument("sigma must cover all variables");
    const auto classes = sigma->classes();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t i = 1; i < classes[c].size(); ++i) {
        add_equal(cs, cs.var_node(classes[c][0]), cs.var_node(classes[c][i]));
      }
      if (c > 0) cs.bounds.push_back({cs.var_node(classes[c - 1][0]), cs.var_node(classes[c][0]), 1});
    }
  }
  const auto closure = close(cs);
  if (!closure) return {};
  const Closure& d = *closure;

  std::vector<int> head_vars;  // distinct, in order of first head occurrence
  for (int v : rule.head) {
    if (std::find(head_vars.begin(), head_vars.end(), v) == head_vars.end()) head_vars.push_back(v);
  }
  auto node = [&](int i) { return cs.var_node(head_vars[i]); };
  auto admissible = [&](int p, int q, Cmp c) {
    const Rank pq = d[node(p)][node(q)], qp = d[node(q)][node(p)];
    switch (c) {
      case Cmp::kEqual: return pq <= 0 && qp <= 0;
      case Cmp::kLess: return !has_path(qp);
      case Cmp::kGreater: return !has_path(pq);
    }
    return false;
  };

  std::vector<HeadType> out;
  for (const OrderType& tau :
       enumerate_order_types(static_cast<int>(head_vars.size()), admissible)) {
    // Chain nodes: MIN, the tau classes, MAX.
    std::vector<std::vector<int>> members{{cs.min_node()}};
    for (const auto& cls : tau.classes()) {
      members.emplace_back();
      for (int i : cls) members.back().push_back(node(i));
    }
    members.push_back({cs.max_node()});
    const std::size_t chain = members.size();
    std::vector<std::vector<Rank>> need(chain, std::vector<Rank>(chain, 0));
    for (std::size_t s = 0; s < chain; ++s) {
      for (std::size_t t = s + 1; t < chain; ++t) {
        for (int a : members[s]) {
          for (int b : members[t]) need[s][t] = std::max(need[s][t], d[a][b]);
        }
        const bool interior = t == s + 1 && s > 0 && t + 1 < chain;
        if (interior) need[s][t] = std::max<Rank>(need[s][t], 1);
      }
    }

    std::vector<int> head_class;
    for (int v : rule.head) {
      int i = static_cast<int>(std::find(head_vars.begin(), head_vars.end(), v) - head_vars.begin());
      head_class.push_back(tau.class_of(i));
    }
    const OrderType head_order = OrderType::from_class_of(head_class);

    for (auto& h : minimal_splits(need)) {
      std::vector<Rank> anchor(chain, 0);
      for (std::size_t s = 1; s < chain; ++s) anchor[s] = anchor[s - 1] + h[s - 1];
      HeadType ht{{head_order, h}, std::vector<Rank>(rule.num_vars + 1, 0)};
      for (int v = 0; v < rule.num_vars; ++v) {
        Rank pos = 0;
        for (std::size_t s = 0; s < chain; ++s) {
          for (int a : members[s]) {
            const Rank da = d[a][cs.var_node(v)];
            if (has_path(da)) pos = std::max(pos, anchor[s] + da);
          }
        }
        ht.witness[v] = pos;
      }
      ht.witness[rule.num_vars] = anchor.back();
      out.push_back(std::move(ht));
    }
  }
  return out;
}

}  // namespace dlorder::types
