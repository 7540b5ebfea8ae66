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

#include "dlorder/engine.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string_view>

#include "dlorder/allen.hpp"
#include "dlorder/transform.hpp"

#ifdef DLORDER_HAVE_OPENMP
#include <omp.h>
#endif

namespace dlorder {
namespace {

using types::CompleteType;
using types::HeadType;
using types::OrderType;
using types::RuleShape;

constexpr std::uint64_t kDefaultStepCap = 1000000;
constexpr std::size_t kChunk = 4096;

struct Candidate {
  const CompleteType* type;
  std::uint64_t id;
};

// Owned copies of the body candidates of one rule application.
struct Snapshot {
  std::vector<CompleteType> storage;
  std::vector<std::vector<Candidate>> per_atom;
};

class Saturator {
 public:
  Saturator(const Program& p, const SaturationOptions& options) : options_(options) {
    if (p.has_interval_atoms()) throw UsageError("saturation needs an order-mode program");
    if (!p.constants.empty() || p.has_constant_occurrences()) {
      throw UsageError("eliminate constants before saturation");
    }
    symbols_ = p.idb_symbols();
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < symbols_.size(); ++i) index[symbols_[i]] = static_cast<int>(i);
    for (const Rule& r : p.rules) {
      shapes_.push_back(RuleShape::compile(r, index));
      keep_.push_back(shared_positions(shapes_.back()));
      for (std::size_t i = 0; i < keep_.back().size(); ++i) {
        auto& args = shapes_.back().body[i].args;
        std::vector<int> kept;
        for (int p : keep_.back()[i]) kept.push_back(args[p]);
        args = std::move(kept);
      }
    }
    m_r_ = params(p).max_rule_vars;
    watermark_.assign(shapes_.size(), 0);
  }

  SaturationResult run() {
    bool changed = true;
    while (changed && !capped_) {
      changed = false;
      for (std::size_t r = 0; r < shapes_.size() && !capped_; ++r) {
        if (apply(r)) {
          changed = true;
          ++result_.stats.steps;
          const Rank prev = result_.stats.max_rank_per_step.empty()
                                ? -1
                                : result_.stats.max_rank_per_step.back();
          const Rank now = result_.types.max_rank();
          if (options_.check_invariants && prev >= 0 && now > m_r_ * std::max<Rank>(1, prev)) {
            throw std::logic_error("rank growth bound violated");
          }
          result_.stats.max_rank_per_step.push_back(now);
          if (options_.on_step) options_.on_step(result_.types, result_.stats);
        }
      }
    }
    result_.stats.fixpoint_reached = !capped_;
    return std::move(result_);
  }

 private:
  // Body positions whose variable occurs elsewhere in the rule (head, order
  // atoms, other body atoms, or twice in the same atom). The others are
  // existential to a single atom and only matter through the gaps they
  // span, which projection keeps.
  static std::vector<std::vector<int>> shared_positions(const RuleShape& rule) {
    std::vector<int> uses(rule.num_vars, 0);
    for (int v : rule.head) ++uses[v];
    for (const auto& [l, r] : rule.less) ++uses[l], ++uses[r];
    for (const auto& atom : rule.body) {
      for (int v : atom.args) ++uses[v];
    }
    std::vector<std::vector<int>> keep;
    for (const auto& atom : rule.body) {
      keep.emplace_back();
      for (std::size_t p = 0; p < atom.args.size(); ++p) {
        if (uses[atom.args[p]] > 1) keep.back().push_back(static_cast<int>(p));
      }
    }
    return keep;
  }

  // Projected body candidates, minimal per atom. A projection is as old as
  // the oldest entry producing it, so old combinations stay skipped.
  Snapshot snapshot(std::size_t r) const {
    const RuleShape& rule = shapes_[r];
    Snapshot s;
    std::vector<std::vector<std::pair<CompleteType, std::uint64_t>>> found(rule.body.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
      const auto* fam = result_.types.find(symbols_[rule.body[i].symbol]);
      if (!fam) continue;
      const std::vector<int>& keep = keep_[r][i];
      std::map<std::pair<OrderType, std::vector<Rank>>, std::uint64_t> seen;
      for (const auto& [order, chain] : *fam) {
        const bool whole = static_cast<int>(keep.size()) == order.arity();
        for (const TypeEntry& e : chain.entries()) {
          CompleteType t{order, e.gaps};
          if (!whole) t = types::project(t, keep);
          auto [it, fresh] = seen.try_emplace({t.order, t.gaps}, e.id);
          if (!fresh) it->second = std::min(it->second, e.id);
        }
      }
      for (auto it = seen.begin(); it != seen.end(); ++it) {
        bool dominated = false;
        for (auto jt = seen.lower_bound({it->first.first, {}});
             jt != seen.end() && jt->first.first == it->first.first && !dominated; ++jt) {
          dominated = jt != it && leq(jt->first.second, it->first.second);
        }
        if (!dominated) found[i].push_back({{it->first.first, it->first.second}, it->second});
      }
      total += found[i].size();
    }
    s.storage.reserve(total);
    for (auto& list : found) {
      s.per_atom.emplace_back();
      for (auto& [t, id] : list) {
        s.storage.push_back(std::move(t));
        s.per_atom.back().push_back({&s.storage.back(), id});
      }
    }
    return s;
  }

  // Next batch of combinations (one candidate index per body atom, in
  // odometer order) with at least one member newer than the previous
  // application of the rule.
  static std::vector<std::vector<std::uint32_t>> fresh_combos(const Snapshot& s,
                                                              std::uint64_t mark,
                                                              std::vector<std::uint32_t>& odo,
                                                              bool& done) {
    std::vector<std::vector<std::uint32_t>> out;
    const std::size_t k = s.per_atom.size();
    while (!done && out.size() < kChunk) {
      bool fresh = k == 0 && mark == 0;
      for (std::size_t i = 0; i < k && !fresh; ++i) fresh = s.per_atom[i][odo[i]].id >= mark;
      if (fresh) out.push_back(odo);
      done = true;
      for (std::size_t i = k; i-- > 0;) {
        if (++odo[i] < s.per_atom[i].size()) {
          done = false;
          break;
        }
        odo[i] = 0;
      }
    }
    return out;
  }

  std::vector<std::vector<HeadType>> evaluate(const RuleShape& rule, const Snapshot& s,
                                              const std::vector<std::vector<std::uint32_t>>& combos) {
    std::vector<std::vector<HeadType>> results(combos.size());
    const std::size_t k = rule.body.size();
    auto one = [&](std::size_t c) {
      std::vector<const CompleteType*> body(k);
      for (std::size_t i = 0; i < k; ++i) body[i] = s.per_atom[i][combos[c][i]].type;
      results[c] = types::combine(rule, body);
    };
#ifdef DLORDER_HAVE_OPENMP
    if (options_.parallel && combos.size() > 1) {
      std::exception_ptr error;
      const long n = static_cast<long>(combos.size());
#pragma omp parallel for schedule(dynamic, 8)
      for (long c = 0; c < n; ++c) {
        try {
          one(static_cast<std::size_t>(c));
        } catch (...) {
#pragma omp critical(dlorder_saturate_error)
          if (!error) error = std::current_exception();
        }
      }
      if (error) std::rethrow_exception(error);
      return results;
    }
#endif
    for (std::size_t c = 0; c < combos.size(); ++c) one(c);
    return results;
  }

  bool insert(const RuleShape& rule, int rule_index, HeadType&& h) {
    if (options_.dense) {
      for (Rank& g : h.type.gaps) g = std::min<Rank>(g, 1);
    }
    if (options_.check_invariants && !types::well_formed(h.type)) {
      throw std::logic_error("combine produced an ill-formed type");
    }
    const std::string& sym = symbols_[rule.head_symbol];
    const std::uint64_t id = next_id_;
    const bool added = result_.types.insert(
        sym, h.type.order, TypeEntry{h.type.gaps, std::move(h.witness), id, rule_index});
    if (!added) return false;
    ++next_id_;
    if (options_.check_invariants) {
      auto& hist = history_[{sym, h.type.order}];
      for (const auto& old : hist) {
        if (leq(old, h.type.gaps)) throw std::logic_error("antichain insertion sequence dominates");
      }
      hist.push_back(h.type.gaps);
    }
    if (++result_.stats.insertions > options_.max_insertions) capped_ = true;
    return true;
  }

  bool apply(std::size_t r) {
    const RuleShape& rule = shapes_[r];
    ++result_.stats.applications;
    const std::uint64_t mark = watermark_[r];
    watermark_[r] = next_id_;
    Snapshot s = snapshot(r);
    for (const auto& c : s.per_atom) {
      if (c.empty()) return false;
    }
    bool changed = false;
    std::vector<std::uint32_t> odo(rule.body.size(), 0);
    bool done = false;
    while (!done && !capped_) {
      auto combos = fresh_combos(s, mark, odo, done);
      auto results = evaluate(rule, s, combos);
      for (auto& heads : results) {
        for (auto& h : heads) {
          if (insert(rule, static_cast<int>(r), std::move(h))) changed = true;
          if (capped_) return changed;
        }
      }
    }
    return changed;
  }

  SaturationOptions options_;
  std::vector<std::string> symbols_;
  std::vector<RuleShape> shapes_;  // body atoms restricted to shared positions
  std::vector<std::vector<std::vector<int>>> keep_;
  Rank m_r_ = 0;
  std::vector<std::uint64_t> watermark_;
  std::uint64_t next_id_ = 1;
  bool capped_ = false;
  std::map<std::pair<std::string, OrderType>, std::vector<std::vector<Rank>>> history_;
  SaturationResult result_;
};

// Required gap sum between two anchors against what the model offers.
bool fits(Rank required, Rank available) { return available >= required; }

}  // namespace

std::uint64_t default_step_cap() {
  if (const char* env = std::getenv("DLORDER_MAX_STEPS")) {
    std::uint64_t v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  return kDefaultStepCap;
}

Rank SaturationStats::max_rank() const {
  Rank r = 0;
  for (Rank x : max_rank_per_step) r = std::max(r, x);
  return r;
}

bool TypeSet::insert(const std::string& symbol, const OrderType& order, TypeEntry e) {
  return sets_[symbol][order].insert(std::move(e));
}

const TypeSet::Family* TypeSet::find(const std::string& symbol) const {
  auto it = sets_.find(symbol);
  return it == sets_.end() ? nullptr : &it->second;
}

bool TypeSet::empty(const std::string& symbol) const {
  const Family* f = find(symbol);
  if (!f) return true;
  return std::all_of(f->begin(), f->end(), [](const auto& kv) { return kv.second.empty(); });
}

std::vector<CompleteType> TypeSet::types_of(const std::string& symbol) const {
  std::vector<CompleteType> out;
  if (const Family* f = find(symbol)) {
    for (const auto& [order, chain] : *f) {
      for (const TypeEntry& e : chain.entries()) out.push_back({order, e.gaps});
    }
  }
  return out;
}

std::vector<std::string> TypeSet::symbols() const {
  std::vector<std::string> out;
  for (const auto& [sym, fam] : sets_) {
    if (!empty(sym)) out.push_back(sym);
  }
  return out;
}

std::size_t TypeSet::size() const {
  std::size_t n = 0;
  for (const auto& [sym, fam] : sets_) {
    for (const auto& [order, chain] : fam) n += chain.size();
  }
  return n;
}

Rank TypeSet::max_rank() const {
  Rank r = 0;
  for (const auto& [sym, fam] : sets_) {
    for (const auto& [order, chain] : fam) {
      for (const TypeEntry& e : chain.entries()) r = std::max(r, types::rank({order, e.gaps}));
    }
  }
  return r;
}

bool operator==(const TypeSet& a, const TypeSet& b) {
  if (a.symbols() != b.symbols()) return false;
  for (const auto& sym : a.symbols()) {
    auto ta = a.types_of(sym), tb = b.types_of(sym);
    auto key = [](const CompleteType& t) { return std::make_pair(t.order, t.gaps); };
    std::vector<std::pair<OrderType, std::vector<Rank>>> ka, kb;
    for (const auto& t : ta) ka.push_back(key(t));
    for (const auto& t : tb) kb.push_back(key(t));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return false;
  }
  return true;
}

SaturationResult saturate(const Program& p, const SaturationOptions& options) {
  return Saturator(p, options).run();
}

InitSequence init_sequence(const Program& p) {
  InitSequence seq;
  const std::size_t passes = std::max<std::size_t>(1, p.idb_symbols().size());
  for (std::size_t pass = 0; pass < passes; ++pass) {
    bool progress = false;
    for (std::size_t r = 0; r < p.rules.size(); ++r) {
      const Rule& rule = p.rules[r];
      if (seq.nonempty.count(rule.head.symbol)) continue;
      bool ready = std::all_of(rule.body.begin(), rule.body.end(), [&](const Atom& a) {
        return !a.idb() || seq.nonempty.count(a.idb()->symbol);
      });
      if (!ready) continue;
      seq.rules.push_back(r);
      seq.nonempty.insert(rule.head.symbol);
      progress = true;
    }
    if (!progress) break;
  }
  return seq;
}

bool satisfiable_in_model(const CompleteType& t, const OrderModel& m,
                          const std::map<int, Element>& bindings) {
  if (!types::well_formed(t)) throw std::invalid_argument("malformed complete type");
  if (t.arity() == 0) return fits(t.gaps[0], m.span(t.gaps[0]));
  const int k = t.order.num_classes();
  std::vector<std::optional<Element>> value(k);
  for (const auto& [pos, e] : bindings) {
    if (pos < 0 || pos >= t.arity()) throw std::out_of_range("binding outside the type");
    if (!m.contains(e)) return false;
    auto& slot = value[t.order.class_of(pos)];
    if (slot && m.compare(*slot, e) != Cmp::kEqual) return false;
    slot = e;
  }
  // Walk the anchors MIN, bound classes, MAX; -1 and k stand for MIN/MAX.
  int prev = -1;
  Rank required = 0;
  for (int c = 0; c <= k; ++c) {
    required += t.gaps[c];
    if (c < k && !value[c]) continue;
    Rank available;
    if (prev < 0 && c == k) {
      available = m.span(required);
    } else if (prev < 0) {
      available = m.boundary_distance(*value[c], Side::kBelowToMin, required);
    } else if (c == k) {
      available = m.boundary_distance(*value[prev], Side::kAboveToMax, required);
    } else {
      if (m.compare(*value[prev], *value[c]) != Cmp::kLess) return false;
      available = m.distance(*value[prev], *value[c], required);
    }
    if (!fits(required, available)) return false;
    prev = c;
    required = 0;
  }
  return true;
}

// ---------------------------------------------------------------------------

Analysis::Analysis(const Program& p, SaturationOptions options)
    : source_(p), options_(std::move(options)) {
  require_valid(p);
  lowered_ = p.has_interval_atoms() ? allen::interval_to_order(p) : p;
  if (!p.constants.empty()) lowered_ = eliminate_constants(lowered_, p.constants);
}

std::string Analysis::lowered_goal(const std::string& goal) const {
  if (!source_.arity(goal)) throw UsageError("unknown goal '" + goal + "'");
  return source_.constants.empty() ? goal : lifted_symbol(source_, goal);
}

std::vector<Element> Analysis::constant_values(const OrderModel& m) const {
  std::vector<Element> out;
  for (const auto& c : source_.constants) {
    if (auto it = m.bindings().find(c); it != m.bindings().end()) {
      out.push_back(it->second);
      continue;
    }
    auto b = std::find_if(source_.bindings.begin(), source_.bindings.end(),
                          [&](const ConstantBinding& cb) { return cb.constant == c; });
    if (b == source_.bindings.end()) throw UsageError("unbound declared constant '" + c + "'");
    out.push_back(m.parse_element(b->element));
  }
  return out;
}

const SaturationResult& Analysis::saturation(bool dense) {
  auto& slot = cache_[dense];
  if (!slot) {
    SaturationOptions o = options_;
    o.dense = dense;
    slot = std::make_unique<SaturationResult>(saturate(lowered_, o));
  }
  if (!slot->stats.fixpoint_reached) {
    throw StepCapExceeded("saturation stopped after " + std::to_string(slot->stats.insertions) +
                          " insertions without reaching a fixpoint");
  }
  return *slot;
}

std::vector<CompleteType> Analysis::goal_types(const std::string& goal, const OrderModel& m) {
  const std::string g = lowered_goal(goal);
  const auto& sat = saturation(m.is_dense());
  std::vector<CompleteType> out;
  if (source_.constants.empty()) return sat.types.types_of(g);
  const auto values = constant_values(m);
  const int r = static_cast<int>(values.size());
  std::map<int, Element> bind;
  for (int i = 0; i < r; ++i) bind[i] = values[i];
  for (const auto& t : sat.types.types_of(g)) {
    if (!satisfiable_in_model(t, m, bind)) continue;
    std::vector<int> keep(t.arity() - r);
    std::iota(keep.begin(), keep.end(), r);
    out.push_back(types::project(t, keep));
  }
  return out;
}

bool Analysis::nonempty_by_saturation(const std::string& goal, const OrderModel& m) {
  const std::string g = lowered_goal(goal);
  const auto& sat = saturation(m.is_dense());
  std::map<int, Element> bind;
  const auto values = source_.constants.empty() ? std::vector<Element>{} : constant_values(m);
  for (std::size_t i = 0; i < values.size(); ++i) bind[static_cast<int>(i)] = values[i];
  for (const auto& t : sat.types.types_of(g)) {
    if (satisfiable_in_model(t, m, bind)) return true;
  }
  return false;
}

std::optional<bool> Analysis::nonempty_by_init_sequence(const std::string& goal,
                                                        const OrderModel& m) {
  if (m.is_finite() || !source_.constants.empty()) return std::nullopt;
  const std::string g = lowered_goal(goal);
  std::pair<Program, TransformReport> td;
  try {
    td = to_type_disjoint(lowered_);
  } catch (const UsageError&) {
    return std::nullopt;
  }
  const InitSequence seq = init_sequence(td.first);
  for (const auto& [name, tag] : td.second.copies.at(g)) {
    if (seq.nonempty.count(name)) return true;
  }
  return false;
}

bool Analysis::nonempty(const std::string& goal, const OrderModel& m) {
  if (auto fast = nonempty_by_init_sequence(goal, m)) return *fast;
  return nonempty_by_saturation(goal, m);
}

bool Analysis::contains(const std::string& goal, std::span<const Element> tuple,
                        const OrderModel& m) {
  const std::string g = lowered_goal(goal);
  const int k = *lowered_.arity(g) - static_cast<int>(source_.constants.size());
  if (static_cast<int>(tuple.size()) != k) {
    throw UsageError("goal '" + goal + "' expects " + std::to_string(k) + " elements, got " +
                     std::to_string(tuple.size()));
  }
  std::vector<Element> full =
      source_.constants.empty() ? std::vector<Element>{} : constant_values(m);
  for (const Element& e : tuple) {
    if (!m.contains(e)) throw ModelError("element " + e.str() + " is not in " + m.spec());
    full.push_back(e);
  }
  const auto& sat = saturation(m.is_dense());
  for (const auto& t : sat.types.types_of(g)) {
    if (types::satisfies(m, full, t)) return true;
  }
  return false;
}

bool decide_nonempty(const Program& p, const std::string& goal, const OrderModel& m) {
  return Analysis(p).nonempty(goal, m);
}

bool decide_tuple(const Program& p, const std::string& goal, std::span<const Element> tuple,
                  const OrderModel& m) {
  return Analysis(p).contains(goal, tuple, m);
}

}  // namespace dlorder
