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

#include <gtest/gtest.h>

#include <random>

#include "dlorder/typesys.hpp"
#include "support/reference.hpp"

namespace dlorder::types {
namespace {

using testing::all_weak_orders;

Element I(std::int64_t v) { return Element::integer(v); }

CompleteType chain(std::vector<Rank> gaps) {
  std::vector<int> cls;
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) cls.push_back(static_cast<int>(i));
  return {OrderType::from_class_of(cls), std::move(gaps)};
}

DistanceAtom atom(int x, int y, Rank d) { return {Endpoint::Var(x), Endpoint::Var(y), d}; }

TEST(OrderTypes, CountsMatchBruteForce) {
  for (int k = 0; k <= 5; ++k) {
    auto fast = enumerate_order_types(k);
    auto brute = all_weak_orders(k);
    std::set<std::vector<int>> a, b;
    for (const auto& t : fast) a.insert(t.class_of());
    for (const auto& t : brute) b.insert(t.class_of());
    EXPECT_EQ(a.size(), fast.size()) << "duplicates at arity " << k;
    EXPECT_EQ(a, b) << "arity " << k;
  }
  EXPECT_EQ(enumerate_order_types(1).size(), 1u);
  EXPECT_EQ(enumerate_order_types(2).size(), 3u);
}

TEST(OrderTypes, FilteredEnumerationMatchesFilter) {
  auto admissible = [](int p, int q, Cmp c) { return (p + q) % 2 == 0 ? c != Cmp::kGreater : true; };
  std::set<std::vector<int>> want;
  for (const auto& t : all_weak_orders(4)) {
    bool ok = true;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        const int a = t.class_of(p), b = t.class_of(q);
        ok = ok && admissible(p, q, a < b ? Cmp::kLess : a == b ? Cmp::kEqual : Cmp::kGreater);
      }
    if (ok) want.insert(t.class_of());
  }
  std::set<std::vector<int>> got;
  for (const auto& t : enumerate_order_types(4, admissible)) got.insert(t.class_of());
  EXPECT_EQ(got, want);
}

TEST(OrderTypes, CodeNamesClasses) {
  EXPECT_EQ(OrderType::from_class_of({0, 1}).code(), "01");
  EXPECT_EQ(OrderType::from_class_of({1, 0, 1}).code(), "101");
  EXPECT_EQ(OrderType().code(), "");
  EXPECT_THROW(OrderType::from_class_of({0, 2}), std::invalid_argument);
}

TEST(Satisfies, DistanceTypeExamples) {
  const auto m = OrderModel::finite(10);
  DistanceType d{2, {atom(0, 1, 3)}};
  std::vector<Element> good{I(2), I(5)}, bad{I(2), I(4)};
  EXPECT_TRUE(satisfies(m, good, d));
  EXPECT_FALSE(satisfies(m, bad, d));
  EXPECT_TRUE(satisfies(m, good, DistanceType{2, {}}));
}

TEST(Tp, Examples) {
  std::vector<Element> a{I(2), I(5)};
  CompleteType t = tp(OrderModel::finite(10), a, 5);
  EXPECT_EQ(t.order, OrderType::from_class_of({0, 1}));
  EXPECT_EQ(t.gaps, (std::vector<Rank>{2, 3, 4}));

  std::vector<Element> b{I(-1), I(4)};
  EXPECT_EQ(tp(OrderModel::integers(), b, 3).gaps, (std::vector<Rank>{3, 3, 3}));

  std::vector<Element> c{Element::fraction(1, 2), Element::fraction(1, 2)};
  CompleteType e = tp(OrderModel::rationals(), c, 4);
  EXPECT_EQ(e.order, OrderType::from_class_of({0, 0}));
  EXPECT_EQ(e.gaps, (std::vector<Rank>{4, 4}));
}

// A tuple satisfies tp_d(a) iff it has a's order pattern and every
// pairwise and boundary distance, capped at d, is at least a's.
TEST(Tp, SatisfactionMatchesPairwiseDistances) {
  const int n = 7;
  const auto m = OrderModel::finite(n);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int trial = 0; trial < 3000; ++trial) {
    const int k = 1 + trial % 3;
    const Rank d = 1 + trial % 4;
    std::vector<Element> a, b;
    for (int i = 0; i < k; ++i) a.push_back(I(pick(rng)));
    for (int i = 0; i < k; ++i) b.push_back(I(pick(rng)));
    auto cap = [&](std::int64_t x) { return std::min<std::int64_t>(x, d); };
    bool want = true;
    for (int i = 0; i < k; ++i) {
      want = want && cap(b[i].num) >= cap(a[i].num);
      want = want && cap(n - 1 - b[i].num) >= cap(n - 1 - a[i].num);
      for (int j = 0; j < k; ++j) {
        const auto da = a[j].num - a[i].num, db = b[j].num - b[i].num;
        want = want && ((da > 0) == (db > 0)) && ((da == 0) == (db == 0));
        if (da > 0) want = want && cap(db) >= cap(da);
      }
    }
    EXPECT_EQ(satisfies(m, b, tp(m, a, d)), want);
    EXPECT_TRUE(satisfies(m, a, tp(m, a, d)));
    EXPECT_TRUE(satisfies(m, a, atoms_of(tp(m, a, d))));
  }
}

TEST(Implies, Examples) {
  DistanceType x3{2, {atom(0, 1, 3)}}, x2{2, {atom(0, 1, 2)}}, none{2, {}};
  EXPECT_TRUE(implies(x3, x2));
  EXPECT_FALSE(implies(x2, x3));
  EXPECT_TRUE(implies(x2, none));
}

TEST(Implies, AgreesWithDominationOnOneOrderType) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> g(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Rank> a{g(rng), 1 + g(rng), 1 + g(rng), g(rng)}, b{g(rng), 1 + g(rng), 1 + g(rng), g(rng)};
    CompleteType ta = chain(a), tb = chain(b);
    bool le = true;
    for (int i = 0; i < 4; ++i) le = le && b[i] <= a[i];
    EXPECT_EQ(dominates(ta, tb), le);
    EXPECT_EQ(implies(atoms_of(ta), atoms_of(tb)), le);
  }
}

TEST(Dominates, Examples) {
  const auto lt = OrderType::from_class_of({0, 1}), gt = OrderType::from_class_of({1, 0});
  EXPECT_TRUE(dominates({lt, {0, 3, 0}}, {lt, {0, 2, 0}}));
  EXPECT_FALSE(dominates({lt, {0, 3, 0}}, {gt, {0, 2, 0}}));
  CompleteType g{lt, {1, 2, 3}};
  EXPECT_TRUE(dominates(g, g));
}

TEST(IsSatisfiable, Examples) {
  EXPECT_TRUE(is_satisfiable({3, {atom(0, 1, 3), atom(1, 2, 2)}}));
  EXPECT_FALSE(is_satisfiable({2, {atom(0, 1, 1), atom(1, 0, 1)}}));
  EXPECT_TRUE(is_satisfiable({2, {atom(0, 1, 0), atom(1, 0, 0)}}));
}

TEST(Project, Examples) {
  // x < z1 < z2 < y, keep (x, y).
  const std::vector<int> xy{0, 3};
  EXPECT_EQ(project(chain({0, 1, 1, 1, 0}), xy).gaps, (std::vector<Rank>{0, 3, 0}));
  const CompleteType g = chain({2, 1, 1, 0});
  EXPECT_EQ(project(g, std::vector<int>{0, 1, 2}), g);
  EXPECT_EQ(project(g, std::vector<int>{0, 2}).gaps, (std::vector<Rank>{2, 2, 0}));
  EXPECT_THROW(project(g, std::vector<int>{3}), std::out_of_range);
}

TEST(Project, CommutesWithTp) {
  const auto m = OrderModel::finite(9);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> pick(0, 8);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Element> a{I(pick(rng)), I(pick(rng)), I(pick(rng))};
    const std::vector<int> keep{2, 0};
    std::vector<Element> sub{a[2], a[0]};
    EXPECT_EQ(project(tp(m, a, kUnbounded), keep), tp(m, sub, kUnbounded));
  }
}

TEST(Rank, TwoRuleGoalType) {
  const CompleteType q = chain({0, 3, 2, 0});
  EXPECT_EQ(rank(q), 5);
  EXPECT_EQ(rank(CompleteType{OrderType(), {4}}), 4);
  EXPECT_EQ(rank_vector(q).size(), 2u * 3 + 3);
  Rank mx = 0;
  for (const auto& a : atoms_of(q).atoms) mx = std::max(mx, a.rank);
  EXPECT_EQ(rank(q), mx);
}

TEST(WellFormed, InteriorGapsArePositive) {
  EXPECT_TRUE(well_formed(chain({0, 1, 0})));
  EXPECT_FALSE(well_formed(chain({0, 0, 0})));
  EXPECT_FALSE(well_formed(CompleteType{OrderType::from_class_of({0, 1}), {0, 1}}));
}

TEST(ToString, TwoRuleGoalType) {
  const std::vector<std::string> names{"X", "Y", "Z"};
  EXPECT_EQ(to_string(chain({0, 3, 2, 0}), names), "[-inf] <=0 {X} <=3 {Y} <=2 {Z} <=0 [+inf]");
}

}  // namespace
}  // namespace dlorder::types
