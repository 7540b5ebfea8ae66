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

#include "dlorder/oracle.hpp"
#include "support/random_programs.hpp"

namespace dlorder {
namespace {

using Set = std::set<GroundTuple>;

TEST(NaiveEval, TwoRuleProgram) {
  const Program p = parse(testing::two_rule_text());
  const auto s = naive_eval(p, OrderModel::finite(6));
  EXPECT_EQ(s.relation("P"), (Set{{0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 5}}));
  EXPECT_EQ(s.relation("Q"), (Set{{0, 3, 5}}));
  EXPECT_EQ(dump(p, s), "P(0,3)\nP(0,4)\nP(0,5)\nP(1,4)\nP(1,5)\nP(2,5)\nQ(0,3,5)\n");
}

TEST(NaiveEval, ZeroAry) {
  const Program g = parse("G() :- X<Y.");
  EXPECT_TRUE(naive_eval(g, OrderModel::finite(1)).relation("G").empty());
  EXPECT_EQ(naive_eval(g, OrderModel::finite(2)).relation("G"), (Set{{}}));
  EXPECT_EQ(dump(g, naive_eval(g, OrderModel::finite(2))), "G()\n");
}

TEST(NaiveNonempty, Examples) {
  const Program p = parse(testing::two_rule_text());
  EXPECT_FALSE(naive_nonempty(p, OrderModel::finite(5), {}, "Q"));
  EXPECT_TRUE(naive_nonempty(p, OrderModel::finite(6), {}, "Q"));
  const Program r = parse("A(X) :- B(X).");
  EXPECT_FALSE(naive_nonempty(r, OrderModel::finite(4), {}, "B"));
}

TEST(NaiveTuple, Examples) {
  const Program p = parse(testing::two_rule_text());
  const auto m = OrderModel::finite(6);
  const std::int64_t a[] = {0, 3, 5}, b[] = {0, 3, 4}, c[] = {2, 5};
  EXPECT_TRUE(naive_tuple(p, m, {}, "Q", a));
  EXPECT_FALSE(naive_tuple(p, m, {}, "Q", b));
  EXPECT_TRUE(naive_tuple(p, m, {}, "P", c));
  EXPECT_THROW(naive_tuple(p, m, {}, "P", a), UsageError);
}

TEST(NaiveEval, Constants) {
  const Program p = parse("@const c.\nP(X) :- c < X.");
  const auto s = naive_eval(p, OrderModel::finite(4), {{"c", Element::integer(1)}});
  EXPECT_EQ(s.relation("P"), (Set{{2}, {3}}));
  EXPECT_THROW(naive_eval(p, OrderModel::finite(4)), ModelError);
}

TEST(NaiveEval, Errors) {
  EXPECT_THROW(naive_eval(parse("G() :- X<Y."), OrderModel::integers()), ModelError);
  EXPECT_THROW(naive_eval(parse("R(X,Y) :- p(X,Y)."), OrderModel::finite(3)), UsageError);
}

TEST(NaiveEval, FixpointIsStable) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 50; ++i) {
    const Program p = testing::random_program(rng);
    const auto m = OrderModel::finite(4);
    const auto s = naive_eval(p, m);
    // One more stage over the result adds nothing: every rule instance with
    // a satisfied body already has its head in the store.
    for (const Rule& r : p.rules) {
      const auto vars = r.variables();
      std::vector<std::int64_t> val(vars.size(), 0);
      auto v = [&](const Term& t) { return val[std::find(vars.begin(), vars.end(), t.name) - vars.begin()]; };
      bool more = true;
      while (more) {
        bool body = true;
        for (const Atom& a : r.body) {
          if (const auto* o = a.order()) body = body && v(o->left) < v(o->right);
          if (const auto* idb = a.idb()) {
            GroundTuple t;
            for (const Term& x : idb->args) t.push_back(v(x));
            body = body && s.contains(idb->symbol, t);
          }
        }
        if (body) {
          GroundTuple h;
          for (const Term& x : r.head.args) h.push_back(v(x));
          EXPECT_TRUE(s.contains(r.head.symbol, h));
        }
        std::size_t i = 0;
        while (i < val.size() && ++val[i] == 4) val[i++] = 0;
        more = i < val.size();
      }
    }
  }
}

}  // namespace
}  // namespace dlorder
