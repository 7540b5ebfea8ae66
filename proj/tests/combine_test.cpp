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

#include "dlorder/core.hpp"
#include "dlorder/typesys.hpp"
#include "support/random_programs.hpp"
#include "support/reference.hpp"

namespace dlorder::types {
namespace {

using testing::box_combine;
using testing::box_combine_all;
using testing::keys;

std::map<std::string, int> index_of(const Program& p) {
  std::map<std::string, int> idx;
  for (const auto& s : p.idb_symbols()) idx.emplace(s, static_cast<int>(idx.size()));
  return idx;
}

std::vector<CompleteType> heads(const std::vector<HeadType>& hs) {
  std::vector<CompleteType> out;
  for (const auto& h : hs) out.push_back(h.type);
  return out;
}

CompleteType random_type(std::mt19937_64& rng, int arity, Rank max_gap) {
  auto orders = enumerate_order_types(arity);
  const OrderType& o = orders[std::uniform_int_distribution<std::size_t>(0, orders.size() - 1)(rng)];
  std::vector<Rank> gaps;
  for (int j = 0; j <= o.num_classes(); ++j) {
    const Rank lo = (j == 0 || j == o.num_classes()) ? 0 : 1;
    gaps.push_back(std::uniform_int_distribution<Rank>(lo, max_gap)(rng));
  }
  return {o, gaps};
}

TEST(Combine, TwoRuleQWithFixedSigma) {
  Program p = parse(testing::two_rule_text());
  RuleShape q = RuleShape::compile(p.rules[1], index_of(p));
  // Variables in order of first occurrence: X, Y, Z, W.
  ASSERT_EQ(q.var_names, (std::vector<std::string>{"X", "Y", "Z", "W"}));
  const CompleteType theta_p{OrderType::from_class_of({0, 1}), {0, 3, 0}};
  const CompleteType* body[] = {&theta_p};
  const OrderType sigma = OrderType::from_class_of({0, 1, 3, 2});  // x < y < w < z
  auto out = combine(q, body, &sigma);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].type.order, OrderType::from_class_of({0, 1, 2}));
  EXPECT_EQ(out[0].type.gaps, (std::vector<Rank>{0, 3, 2, 0}));
  // The witness places every variable and satisfies all constraints.
  const auto& w = out[0].witness;
  EXPECT_LT(w[0], w[1]);
  EXPECT_GE(w[1] - w[0], 3);
  EXPECT_LT(w[1], w[3]);
  EXPECT_LT(w[3], w[2]);
}

TEST(Combine, DiscrrunRho2SumsChains) {
  Program p = parse(testing::discrrun_text());
  RuleShape r2 = RuleShape::compile(p.rules[1], index_of(p));
  // Any type with x1<_c1 x2 and x4<_c2 x5; here all five positions form one
  // chain x4 < x5 < x1 < x2 < x3 with the pairs at distance 2.
  const CompleteType first{OrderType::from_class_of({2, 3, 4, 0, 1}), {0, 2, 1, 2, 2, 0}};
  const CompleteType second{OrderType::from_class_of({2, 3, 4, 0, 1}), {0, 2, 1, 1, 2, 0}};
  const CompleteType* body[] = {&first, &second};
  bool found = false;
  for (const auto& h : combine(r2, body)) {
    EXPECT_GE(testing::pair_distance(h.type, 3, 4), 7);
    found = found || testing::pair_distance(h.type, 3, 4) == 7;
  }
  EXPECT_TRUE(found);
}

TEST(MinimalSplits, SingleConstraint) {
  std::vector<std::vector<Rank>> need(3, std::vector<Rank>(3, 0));
  need[0][2] = 2;
  auto got = minimal_splits(need);
  std::set<std::vector<Rank>> s(got.begin(), got.end());
  EXPECT_EQ(s, (std::set<std::vector<Rank>>{{2, 0}, {1, 1}, {0, 2}}));
}

TEST(MinimalSplits, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int nodes = 2 + trial % 4;
    std::vector<std::vector<Rank>> need(nodes, std::vector<Rank>(nodes, 0));
    Rank hi = 0;
    for (int s = 0; s < nodes; ++s)
      for (int t = s + 1; t < nodes; ++t) {
        need[s][t] = std::uniform_int_distribution<Rank>(-1, 3)(rng);
        hi = std::max(hi, need[s][t]);
      }
    // Brute force over [0, hi]^(nodes-1), then keep the minimal vectors.
    std::vector<std::vector<Rank>> ok;
    std::vector<Rank> h(nodes - 1, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == nodes - 1) {
        for (int s = 0; s < nodes; ++s)
          for (int t = s + 1; t < nodes; ++t) {
            Rank sum = 0;
            for (int j = s; j < t; ++j) sum += h[j];
            if (sum < need[s][t]) return;
          }
        ok.push_back(h);
        return;
      }
      for (Rank v = 0; v <= hi; ++v) {
        h[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    std::set<std::vector<Rank>> want;
    for (const auto& a : ok) {
      bool beaten = false;
      for (const auto& b : ok) {
        bool le = b != a;
        for (std::size_t j = 0; j < a.size() && le; ++j) le = b[j] <= a[j];
        beaten = beaten || le;
      }
      if (!beaten) want.insert(a);
    }
    auto got = minimal_splits(need);
    EXPECT_EQ(std::set<std::vector<Rank>>(got.begin(), got.end()), want);
    EXPECT_EQ(got.size(), want.size());
  }
}

// combine against placement enumeration, per sigma and over all sigma.
TEST(Combine, MatchesBoxEnumeration) {
  std::mt19937_64 rng(23);
  testing::GenParams g;
  g.max_vars = 4;
  g.max_arity = 3;
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Program p = testing::random_program(rng, g);
    const auto idx = index_of(p);
    for (const Rule& rule : p.rules) {
      RuleShape shape = RuleShape::compile(rule, idx);
      std::vector<CompleteType> storage;
      storage.reserve(shape.body.size());
      for (const auto& a : shape.body) storage.push_back(random_type(rng, static_cast<int>(a.args.size()), 2));
      std::vector<const CompleteType*> body;
      for (const auto& t : storage) body.push_back(&t);
      const Rank bound = std::max<Rank>(1, build_constraints(shape, body).max_bound());
      EXPECT_EQ(keys(heads(combine(shape, body))), keys(box_combine_all(shape, body, bound)))
          << print(rule);
      const auto sigmas = testing::all_weak_orders(shape.num_vars);
      const OrderType& sigma = sigmas[trial % sigmas.size()];
      EXPECT_EQ(keys(heads(combine(shape, body, &sigma))), keys(box_combine(shape, body, sigma, bound)))
          << print(rule) << " sigma " << sigma.code();
      ++checked;
    }
  }
  EXPECT_GT(checked, 150);
}

TEST(Combine, OutputsAreWellFormedAndWitnessed) {
  std::mt19937_64 rng(29);
  testing::GenParams g;
  g.max_vars = 5;
  for (int trial = 0; trial < 200; ++trial) {
    Program p = testing::random_program(rng, g);
    const auto idx = index_of(p);
    for (const Rule& rule : p.rules) {
      RuleShape shape = RuleShape::compile(rule, idx);
      std::vector<CompleteType> storage;
      storage.reserve(shape.body.size());
      for (const auto& a : shape.body) storage.push_back(random_type(rng, static_cast<int>(a.args.size()), 3));
      std::vector<const CompleteType*> body;
      for (const auto& t : storage) body.push_back(&t);
      for (const auto& h : combine(shape, body)) {
        ASSERT_TRUE(well_formed(h.type));
        // The witness, read on the chain 0..MAX, satisfies the order atoms,
        // every body type, and realises the head type exactly.
        const auto& w = h.witness;
        const Rank top = w.back();
        const auto m = OrderModel::finite(top + 1);
        auto elems = [&](const std::vector<int>& vars) {
          std::vector<Element> e;
          for (int v : vars) e.push_back(Element::integer(w[v]));
          return e;
        };
        for (const auto& [l, r] : shape.less) EXPECT_LT(w[l], w[r]);
        for (std::size_t a = 0; a < shape.body.size(); ++a) {
          EXPECT_TRUE(satisfies(m, elems(shape.body[a].args), *body[a])) << print(rule);
        }
        EXPECT_EQ(tp(m, elems(shape.head), kUnbounded), h.type) << print(rule);
      }
    }
  }
}

}  // namespace
}  // namespace dlorder::types
