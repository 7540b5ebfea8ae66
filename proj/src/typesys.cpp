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

#include "dlorder/typesys.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dlorder::types {
namespace {

constexpr std::string_view kClassDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

Rank sum_range(const std::vector<Rank>& g, std::size_t lo, std::size_t hi) {
  Rank s = 0;
  for (std::size_t i = lo; i < hi; ++i) s += g[i];
  return s;
}

// Class-level additive ranks: below(c), above(c) and between(i, j).
struct ClassRanks {
  const std::vector<Rank>& g;
  Rank below(int c) const { return sum_range(g, 0, c + 1); }
  Rank above(int c) const { return sum_range(g, c + 1, g.size()); }
  Rank between(int i, int j) const { return sum_range(g, i + 1, j + 1); }
};

void check_shape(const CompleteType& t) {
  if (t.gaps.size() != static_cast<std::size_t>(t.order.num_classes() + 1)) {
    throw std::invalid_argument("gap vector does not match the order type");
  }
}

class WeakOrderBuilder {
 public:
  WeakOrderBuilder(int n, const std::function<bool(int, int, Cmp)>& ok) : n_(n), ok_(ok) {}

  std::vector<OrderType> run() {
    extend(0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  // Whether position i may join class `slot` or open a new class before it.
  bool fits(int i, std::size_t slot, bool joins) const {
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      Cmp rel;  // relation of member p to i
      if (c == slot && joins) {
        rel = Cmp::kEqual;
      } else {
        rel = c < slot ? Cmp::kLess : Cmp::kGreater;
      }
      for (int p : classes_[c]) {
        if (!ok_(p, i, rel)) return false;
      }
    }
    return true;
  }

  void extend(int i) {
    if (i == n_) {
      std::vector<int> class_of(n_);
      for (std::size_t c = 0; c < classes_.size(); ++c) {
        for (int p : classes_[c]) class_of[p] = static_cast<int>(c);
      }
      out_.push_back(OrderType::from_class_of(std::move(class_of)));
      return;
    }
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (!fits(i, c, true)) continue;
      classes_[c].push_back(i);
      extend(i + 1);
      classes_[c].pop_back();
    }
    for (std::size_t c = 0; c <= classes_.size(); ++c) {
      if (!fits(i, c, false)) continue;
      classes_.insert(classes_.begin() + c, std::vector<int>{i});
      extend(i + 1);
      classes_.erase(classes_.begin() + c);
    }
  }

  int n_;
  const std::function<bool(int, int, Cmp)>& ok_;
  std::vector<std::vector<int>> classes_;
  std::vector<OrderType> out_;
};

}  // namespace

OrderType OrderType::from_class_of(std::vector<int> class_of) {
  int k = 0;
  for (int c : class_of) {
    if (c < 0) throw std::invalid_argument("negative class index");
    k = std::max(k, c + 1);
  }
  std::vector<bool> used(k, false);
  for (int c : class_of) used[c] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw std::invalid_argument("class indices must be contiguous");
  }
  OrderType t;
  t.class_of_ = std::move(class_of);
  t.num_classes_ = k;
  return t;
}

OrderType OrderType::from_classes(const std::vector<std::vector<int>>& classes) {
  int n = 0;
  for (const auto& c : classes) n += static_cast<int>(c.size());
  std::vector<int> class_of(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw std::invalid_argument("empty class");
    for (int p : classes[c]) {
      if (p < 0 || p >= n || class_of[p] != -1) {
        throw std::invalid_argument("classes must partition 0..n-1");
      }
      class_of[p] = static_cast<int>(c);
    }
  }
  return from_class_of(std::move(class_of));
}

std::vector<std::vector<int>> OrderType::classes() const {
  std::vector<std::vector<int>> out(num_classes_);
  for (int p = 0; p < arity(); ++p) out[class_of_[p]].push_back(p);
  return out;
}

std::string OrderType::code() const {
  std::string s;
  for (int c : class_of_) {
    if (c >= static_cast<int>(kClassDigits.size())) {
      throw std::out_of_range("order type too wide for a class code");
    }
    s += kClassDigits[c];
  }
  return s;
}

std::vector<OrderType> enumerate_order_types(int arity) {
  return enumerate_order_types(arity, [](int, int, Cmp) { return true; });
}

std::vector<OrderType> enumerate_order_types(
    int arity, const std::function<bool(int, int, Cmp)>& admissible) {
  return WeakOrderBuilder(arity, admissible).run();
}

bool well_formed(const CompleteType& t) {
  if (t.gaps.size() != static_cast<std::size_t>(t.order.num_classes() + 1)) return false;
  for (std::size_t j = 0; j < t.gaps.size(); ++j) {
    bool interior = j > 0 && j + 1 < t.gaps.size();
    if (t.gaps[j] < (interior ? 1 : 0)) return false;
  }
  return true;
}

Rank DistanceType::rank() const {
  Rank r = 0;
  for (const DistanceAtom& a : atoms) r = std::max(r, a.rank);
  return r;
}

DistanceType atoms_of(const CompleteType& t) {
  check_shape(t);
  ClassRanks cr{t.gaps};
  DistanceType d;
  d.num_vars = t.arity();
  for (int p = 0; p < t.arity(); ++p) {
    int c = t.order.class_of(p);
    d.atoms.push_back({Endpoint::MinusInf(), Endpoint::Var(p), cr.below(c)});
    d.atoms.push_back({Endpoint::Var(p), Endpoint::PlusInf(), cr.above(c)});
  }
  for (int p = 0; p < t.arity(); ++p) {
    for (int q = 0; q < t.arity(); ++q) {
      int cp = t.order.class_of(p), cq = t.order.class_of(q);
      if (p == q || cp > cq) continue;
      d.atoms.push_back({Endpoint::Var(p), Endpoint::Var(q), cr.between(cp, cq)});
    }
  }
  if (t.arity() == 0) {
    d.atoms.push_back({Endpoint::MinusInf(), Endpoint::PlusInf(), t.gaps[0]});
  }
  return d;
}

Rank rank(const CompleteType& t) {
  check_shape(t);
  if (t.arity() == 0) return t.gaps[0];
  ClassRanks cr{t.gaps};
  int k = t.order.num_classes();
  return std::max(cr.below(k - 1), cr.above(0));
}

std::vector<Rank> rank_vector(const CompleteType& t) {
  check_shape(t);
  if (t.arity() == 0) return {t.gaps[0]};
  ClassRanks cr{t.gaps};
  int k = t.order.num_classes();
  std::vector<Rank> v;
  for (int c = 0; c < k; ++c) v.push_back(cr.below(c));
  for (int c = 0; c < k; ++c) v.push_back(cr.above(c));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) v.push_back(cr.between(i, j));
  }
  return v;
}

bool satisfies(const OrderModel& m, std::span<const Element> assignment, const DistanceType& d) {
  auto value = [&](const Endpoint& e) -> const Element& {
    if (e.var < 0 || static_cast<std::size_t>(e.var) >= assignment.size()) {
      throw ModelError("distance atom names an unassigned variable");
    }
    return assignment[e.var];
  };
  using K = Endpoint::Kind;
  for (const DistanceAtom& a : d.atoms) {
    Rank got = 0;
    if (a.left.kind == K::kVar && a.right.kind == K::kVar) {
      const Element& x = value(a.left);
      const Element& y = value(a.right);
      if (m.compare(x, y) == Cmp::kGreater) return false;
      got = m.distance(x, y, a.rank);
    } else if (a.left.kind == K::kMinusInf && a.right.kind == K::kVar) {
      got = m.boundary_distance(value(a.right), Side::kBelowToMin, a.rank);
    } else if (a.left.kind == K::kVar && a.right.kind == K::kPlusInf) {
      got = m.boundary_distance(value(a.left), Side::kAboveToMax, a.rank);
    } else if (a.left.kind == K::kMinusInf && a.right.kind == K::kPlusInf) {
      got = m.span(a.rank);
    } else if (a.left.kind == a.right.kind) {
      got = 0;
    } else {
      return false;  // +inf <= x or x <= -inf style atoms
    }
    if (got < a.rank) return false;
  }
  return true;
}

bool satisfies(const OrderModel& m, std::span<const Element> tuple, const CompleteType& t) {
  check_shape(t);
  if (tuple.size() != static_cast<std::size_t>(t.arity())) {
    throw ModelError("tuple arity does not match the type");
  }
  if (t.arity() == 0) return m.span(t.gaps[0]) >= t.gaps[0];
  const auto classes = t.order.classes();
  std::vector<const Element*> rep;
  for (const auto& cls : classes) {
    for (int p : cls) {
      if (m.compare(tuple[cls.front()], tuple[p]) != Cmp::kEqual) return false;
    }
    rep.push_back(&tuple[cls.front()]);
  }
  const std::size_t k = rep.size();
  if (m.boundary_distance(*rep[0], Side::kBelowToMin, t.gaps[0]) < t.gaps[0]) return false;
  for (std::size_t j = 1; j < k; ++j) {
    if (m.compare(*rep[j - 1], *rep[j]) != Cmp::kLess) return false;
    if (m.distance(*rep[j - 1], *rep[j], t.gaps[j]) < t.gaps[j]) return false;
  }
  return m.boundary_distance(*rep[k - 1], Side::kAboveToMax, t.gaps[k]) >= t.gaps[k];
}

CompleteType tp(const OrderModel& m, std::span<const Element> tuple, Rank d) {
  if (d < 0) throw std::invalid_argument("negative rank");
  if (tuple.empty()) return {OrderType(), {m.span(d)}};
  std::vector<int> idx(tuple.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return m.compare(tuple[a], tuple[b]) == Cmp::kLess;
  });
  std::vector<int> class_of(tuple.size());
  std::vector<int> reps{idx[0]};
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (m.compare(tuple[reps.back()], tuple[idx[i]]) != Cmp::kEqual) reps.push_back(idx[i]);
    class_of[idx[i]] = static_cast<int>(reps.size()) - 1;
  }
  CompleteType t{OrderType::from_class_of(std::move(class_of)), {}};
  const Rank interior_cap = std::max<Rank>(d, 1);
  t.gaps.push_back(m.boundary_distance(tuple[reps.front()], Side::kBelowToMin, d));
  for (std::size_t j = 1; j < reps.size(); ++j) {
    t.gaps.push_back(m.distance(tuple[reps[j - 1]], tuple[reps[j]], interior_cap));
  }
  t.gaps.push_back(m.boundary_distance(tuple[reps.back()], Side::kAboveToMax, d));
  return t;
}

namespace {

// Distance types as constraint systems: -inf is MIN, +inf is MAX.
ConstraintSystem as_constraints(const DistanceType& d) {
  ConstraintSystem cs;
  cs.num_vars = d.num_vars;
  auto node = [&](const Endpoint& e) {
    switch (e.kind) {
      case Endpoint::Kind::kMinusInf: return cs.min_node();
      case Endpoint::Kind::kPlusInf: return cs.max_node();
      case Endpoint::Kind::kVar: break;
    }
    if (e.var < 0 || e.var >= d.num_vars) throw std::out_of_range("atom variable out of range");
    return cs.var_node(e.var);
  };
  for (int v = 0; v < d.num_vars; ++v) {
    cs.bounds.push_back({cs.min_node(), cs.var_node(v), 0});
    cs.bounds.push_back({cs.var_node(v), cs.max_node(), 0});
  }
  cs.bounds.push_back({cs.min_node(), cs.max_node(), 0});
  for (const DistanceAtom& a : d.atoms) cs.bounds.push_back({node(a.left), node(a.right), a.rank});
  return cs;
}

}  // namespace

bool implies(const DistanceType& gamma, const DistanceType& delta) {
  DistanceType g = gamma;
  g.num_vars = std::max(gamma.num_vars, delta.num_vars);
  ConstraintSystem cs = as_constraints(g);
  auto closure = close(cs);
  if (!closure) return true;
  auto node = [&](const Endpoint& e) {
    switch (e.kind) {
      case Endpoint::Kind::kMinusInf: return cs.min_node();
      case Endpoint::Kind::kPlusInf: return cs.max_node();
      case Endpoint::Kind::kVar: break;
    }
    return cs.var_node(e.var);
  };
  for (const DistanceAtom& a : delta.atoms) {
    if ((*closure)[node(a.left)][node(a.right)] < a.rank) return false;
  }
  return true;
}

bool dominates(const CompleteType& stronger, const CompleteType& weaker) {
  if (stronger.order != weaker.order) return false;
  check_shape(stronger);
  check_shape(weaker);
  for (std::size_t j = 0; j < weaker.gaps.size(); ++j) {
    if (weaker.gaps[j] > stronger.gaps[j]) return false;
  }
  return true;
}

bool is_satisfiable(const DistanceType& d) { return close(as_constraints(d)).has_value(); }

CompleteType project(const CompleteType& t, std::span<const int> positions) {
  check_shape(t);
  std::vector<int> kept;  // source classes, ascending
  for (int p : positions) {
    if (p < 0 || p >= t.arity()) throw std::out_of_range("projection position out of range");
    kept.push_back(t.order.class_of(p));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<int> class_of;
  for (int p : positions) {
    class_of.push_back(static_cast<int>(
        std::lower_bound(kept.begin(), kept.end(), t.order.class_of(p)) - kept.begin()));
  }
  CompleteType out{OrderType::from_class_of(std::move(class_of)), {}};
  std::size_t lo = 0;
  for (int c : kept) {
    out.gaps.push_back(sum_range(t.gaps, lo, c + 1));
    lo = c + 1;
  }
  out.gaps.push_back(sum_range(t.gaps, lo, t.gaps.size()));
  return out;
}

std::string to_string(const CompleteType& t, std::span<const std::string> names) {
  check_shape(t);
  std::string out = "[-inf]";
  const auto classes = t.order.classes();
  for (std::size_t c = 0; c <= classes.size(); ++c) {
    out += " <=" + std::to_string(t.gaps[c]) + " ";
    if (c == classes.size()) break;
    out += "{";
    for (std::size_t i = 0; i < classes[c].size(); ++i) {
      int p = classes[c][i];
      if (i) out += ",";
      out += static_cast<std::size_t>(p) < names.size() ? names[p] : "X" + std::to_string(p + 1);
    }
    out += "}";
  }
  return out + "[+inf]";
}

}  // namespace dlorder::types
