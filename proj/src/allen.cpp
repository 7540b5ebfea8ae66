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

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dlorder::allen {
namespace {

constexpr std::array<std::string_view, kNumBasic> kNames = {
    "p", "m", "o", "d", "s", "f", "eq", "pi", "mi", "oi", "di", "si", "fi"};

// Endpoint of the first (x) or second (y) interval.
struct End {
  int interval;  // 0 = x, 1 = y
  bool hi;
};

struct EndAtom {
  End lhs;
  bool equal;  // '=' when true, '<' otherwise
  End rhs;
};

constexpr End XL{0, false}, XH{0, true}, YL{1, false}, YH{1, true};

// Endpoint conjunctions of the seven base relations; converses swap x, y.
std::vector<EndAtom> base_conjunction(int b) {
  switch (b) {
    case 0: return {{XH, false, YL}};
    case 1: return {{XH, true, YL}};
    case 2: return {{XL, false, YL}, {YL, false, XH}, {XH, false, YH}};
    case 3: return {{YL, false, XL}, {XH, false, YH}};
    case 4: return {{XL, true, YL}, {XH, false, YH}};
    case 5: return {{YL, false, XL}, {XH, true, YH}};
    default: return {{XL, true, YL}, {XH, true, YH}};
  }
}

std::vector<EndAtom> conjunction(Basic b) {
  int i = static_cast<int>(b);
  if (i <= 6) return base_conjunction(i);
  auto atoms = base_conjunction(i - 7);
  for (auto& a : atoms) {
    a.lhs.interval ^= 1;
    a.rhs.interval ^= 1;
  }
  return atoms;
}

std::int64_t value(const Endpoints& e, End end) {
  if (end.interval == 0) return end.hi ? e.x_hi : e.x_lo;
  return end.hi ? e.y_hi : e.y_lo;
}

const CompositionTable& table() {
  static const CompositionTable t = enumerate_composition_table();
  return t;
}

Basic classify(const Endpoints& e) {
  for (Basic b : all_basics()) {
    if (holds(b, e)) return b;
  }
  throw std::logic_error("no basic relation holds");
}

void require_interval_program(const Program& p) {
  if (!p.constants.empty() || p.has_constant_occurrences()) {
    throw UsageError("constants are not supported in interval mode");
  }
  if (p.has_order_atoms()) throw UsageError("interval program contains order atoms");
}

class RuleLowering {
 public:
  explicit RuleLowering(const Rule& r) : rule_(r), vars_(r.variables()) {
    std::set<std::string> taken(vars_.begin(), vars_.end());
    auto fresh = [&](std::string name) {
      while (taken.count(name)) name += "_";
      taken.insert(name);
      return name;
    };
    for (const auto& v : vars_) {
      names_.push_back(fresh(v + "m"));
      names_.push_back(fresh(v + "p"));
    }
    for (const Atom& a : r.body) {
      if (const auto* iv = a.interval()) {
        std::vector<Basic> choices;
        for (Basic b : all_basics()) {
          if (Relation(iv->relations).contains(b)) choices.push_back(b);
        }
        options_.push_back(std::move(choices));
      }
    }
  }

  std::size_t count() const {
    std::size_t n = 1;
    for (const auto& o : options_) {
      n *= o.size();
      if (n > kMaxSplitRules) return kMaxSplitRules + 1;
    }
    return n;
  }

  void emit(std::vector<Rule>& out) {
    std::vector<Basic> pick(options_.size());
    emit_from(0, pick, out);
  }

 private:
  int index(const Term& t) const {
    return static_cast<int>(std::find(vars_.begin(), vars_.end(), t.name) - vars_.begin());
  }

  void emit_from(std::size_t i, std::vector<Basic>& pick, std::vector<Rule>& out) {
    if (i < options_.size()) {
      for (Basic b : options_[i]) {
        pick[i] = b;
        emit_from(i + 1, pick, out);
      }
      return;
    }
    const int n = static_cast<int>(names_.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    auto node = [&](const Term& x, const Term& y, End e) {
      return 2 * index(e.interval == 0 ? x : y) + (e.hi ? 1 : 0);
    };
    // Per body atom: the order atoms it contributes, as node pairs.
    std::vector<std::vector<std::pair<int, int>>> less(rule_.body.size());
    std::vector<std::pair<int, int>> validity;
    for (int v = 0; v < static_cast<int>(vars_.size()); ++v) validity.emplace_back(2 * v, 2 * v + 1);
    std::size_t k = 0;
    for (std::size_t j = 0; j < rule_.body.size(); ++j) {
      const auto* iv = rule_.body[j].interval();
      if (!iv) continue;
      for (const EndAtom& a : conjunction(pick[k++])) {
        int l = node(iv->left, iv->right, a.lhs), r = node(iv->left, iv->right, a.rhs);
        if (a.equal) {
          int x = find(l), y = find(r);
          if (x != y) parent[std::max(x, y)] = std::min(x, y);
        } else {
          less[j].emplace_back(l, r);
        }
      }
    }
    auto term = [&](int node_id) { return Term::Var(names_[find(node_id)]); };
    auto lift = [&](const IdbAtom& a) {
      IdbAtom out_atom{a.symbol, {}};
      for (const Term& t : a.args) {
        out_atom.args.push_back(term(2 * index(t)));
        out_atom.args.push_back(term(2 * index(t) + 1));
      }
      return out_atom;
    };
    Rule r;
    r.pos = rule_.pos;
    r.head = lift(rule_.head);
    std::set<std::pair<int, int>> seen;
    auto add_less = [&](int a, int b, SourcePos pos) {
      a = find(a);
      b = find(b);
      if (seen.insert({a, b}).second) r.body.push_back({OrderAtom{term(a), term(b)}, pos});
    };
    for (const auto& [a, b] : validity) add_less(a, b, rule_.pos);
    for (std::size_t j = 0; j < rule_.body.size(); ++j) {
      const Atom& atom = rule_.body[j];
      if (const auto* idb = atom.idb()) {
        r.body.push_back({lift(*idb), atom.pos});
      } else {
        for (const auto& [a, b] : less[j]) add_less(a, b, atom.pos);
      }
    }
    out.push_back(std::move(r));
  }

  const Rule& rule_;
  std::vector<std::string> vars_;
  std::vector<std::string> names_;  // 2v = lower endpoint, 2v+1 = upper
  std::vector<std::vector<Basic>> options_;
};

}  // namespace

std::array<Basic, kNumBasic> all_basics() {
  std::array<Basic, kNumBasic> out{};
  for (int i = 0; i < kNumBasic; ++i) out[i] = static_cast<Basic>(i);
  return out;
}

std::string_view name(Basic b) { return kNames[static_cast<int>(b)]; }

std::optional<Basic> basic_from_name(std::string_view n) {
  for (int i = 0; i < kNumBasic; ++i) {
    if (kNames[i] == n) return static_cast<Basic>(i);
  }
  return std::nullopt;
}

Basic converse(Basic b) {
  int i = static_cast<int>(b);
  if (i == 6) return b;
  return static_cast<Basic>(i < 6 ? i + 7 : i - 7);
}

bool holds(Basic b, const Endpoints& e) {
  for (const EndAtom& a : conjunction(b)) {
    std::int64_t l = value(e, a.lhs), r = value(e, a.rhs);
    if (a.equal ? l != r : l >= r) return false;
  }
  return true;
}

int Relation::size() const { return std::popcount(static_cast<unsigned>(bits_)); }

Relation converse(Relation r) {
  RelationBits out = 0;
  for (Basic b : all_basics()) {
    if (r.contains(b)) out |= Relation::bit(converse(b));
  }
  return Relation(out);
}

Relation intersect(Relation r, Relation s) {
  return Relation(static_cast<RelationBits>(r.bits() & s.bits()));
}

Relation compose(Basic r, Basic s) {
  return table()[static_cast<int>(r)][static_cast<int>(s)];
}

Relation compose(Relation r, Relation s) {
  RelationBits out = 0;
  for (Basic a : all_basics()) {
    if (!r.contains(a)) continue;
    for (Basic b : all_basics()) {
      if (s.contains(b)) out |= compose(a, b).bits();
    }
  }
  return Relation(out);
}

CompositionTable enumerate_composition_table() {
  CompositionTable t{};
  constexpr int kValues = 6;
  for (int xl = 0; xl < kValues; ++xl)
    for (int xh = xl + 1; xh < kValues; ++xh)
      for (int yl = 0; yl < kValues; ++yl)
        for (int yh = yl + 1; yh < kValues; ++yh)
          for (int zl = 0; zl < kValues; ++zl)
            for (int zh = zl + 1; zh < kValues; ++zh) {
              Basic r = classify({xl, xh, yl, yh});
              Basic s = classify({yl, yh, zl, zh});
              Basic u = classify({xl, xh, zl, zh});
              auto& cell = t[static_cast<int>(r)][static_cast<int>(s)];
              cell = Relation(static_cast<RelationBits>(cell.bits() | Relation::bit(u)));
            }
  return t;
}

std::string to_string(Relation r) {
  std::string out = "{";
  bool first = true;
  for (Basic b : all_basics()) {
    if (!r.contains(b)) continue;
    if (!first) out += ",";
    out += name(b);
    first = false;
  }
  return out + "}";
}

Program interval_to_order(const Program& p) {
  require_interval_program(p);
  std::size_t total = 0;
  std::vector<RuleLowering> lowerings;
  for (const Rule& r : p.rules) {
    lowerings.emplace_back(r);
    total += lowerings.back().count();
    if (total > kMaxSplitRules) {
      throw UsageError("interval program splits into more than " +
                       std::to_string(kMaxSplitRules) + " rules");
    }
  }
  Program out;
  for (auto& l : lowerings) l.emit(out.rules);
  for (const auto& [sym, k] : p.idb_arity) out.idb_arity[sym] = 2 * k;
  return out;
}

Program order_to_interval(const Program& p) {
  if (!p.constants.empty() || p.has_constant_occurrences()) {
    throw UsageError("constants cannot be expressed in interval mode");
  }
  if (p.has_interval_atoms()) throw UsageError("program already contains interval atoms");
  Program out = p;
  for (Rule& r : out.rules) {
    for (Atom& a : r.body) {
      if (const auto* o = a.order()) {
        a.value = IntervalAtom{Relation::bit(Basic::kPrecedes), o->left, o->right};
      }
    }
  }
  return out;
}

}  // namespace dlorder::allen
