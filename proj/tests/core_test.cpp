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
#include <set>

#include "dlorder/core.hpp"
#include "support/random_programs.hpp"

namespace dlorder {
namespace {

// Distinct variable names per rule, counted from the printed text.
int count_vars(const Rule& r) {
  std::set<std::string> names;
  auto add = [&](const IdbAtom& a) {
    for (const Term& t : a.args)
      if (t.is_var()) names.insert(t.name);
  };
  add(r.head);
  for (const Atom& a : r.body) {
    if (a.idb()) add(*a.idb());
    if (const auto* o = a.order()) {
      if (o->left.is_var()) names.insert(o->left.name);
      if (o->right.is_var()) names.insert(o->right.name);
    }
  }
  return static_cast<int>(names.size());
}

TEST(Parse, ChainRule) {
  Program p = parse("P(X,Y) :- X < Z1, Z1 < Z2, Z2 < Y.");
  ASSERT_EQ(p.rules.size(), 1u);
  EXPECT_EQ(p.arity("P"), 2);
  EXPECT_EQ(p.rules[0].variables().size(), 4u);
  EXPECT_EQ(p.mode(), ProgramMode::kOrder);
}

TEST(Parse, ZeroAryHead) {
  Program p = parse("A() :- X < Y.");
  EXPECT_EQ(p.arity("A"), 0);
  EXPECT_TRUE(validate(p).empty());
}

TEST(Parse, ArityMismatchIsAnError) {
  EXPECT_THROW(require_valid(parse("Q(X,Y) :- X<Y.\nP(X) :- Q(X,X,Y).")), ParseError);
}

TEST(Parse, SyntaxErrorsCarryPositions) {
  try {
    parse("P(X) :- X < .");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().line, 1);
    EXPECT_GT(e.pos().column, 1);
  }
}

TEST(Parse, IntervalAtomsAndUnions) {
  Program p = parse("R(X,Y) :- [p,m](X,Y), o(Y,Z).");
  EXPECT_EQ(p.mode(), ProgramMode::kInterval);
  ASSERT_NE(p.rules[0].body[0].interval(), nullptr);
  EXPECT_EQ(p.rules[0].body[0].interval()->relations, 0b11);
}

TEST(Parse, ConstantsAndBindings) {
  Program p = parse("@const c, d.\n@bind c = 3.\nP(X) :- c < X, X < d.");
  EXPECT_EQ(p.constants, (std::vector<std::string>{"c", "d"}));
  ASSERT_EQ(p.bindings.size(), 1u);
  EXPECT_EQ(p.bindings[0].element, "3");
  EXPECT_TRUE(p.has_constant_occurrences());
}

TEST(Validate, TwoRuleProgramIsClean) {
  EXPECT_TRUE(validate(parse(testing::two_rule_text())).empty());
}

TEST(Validate, ReservedHead) {
  auto d = validate(parse("p(X,Y) :- X < Y."));
  ASSERT_FALSE(d.empty());
  EXPECT_NE(d[0].message.find("reserved EDB used as IDB"), std::string::npos);
}

TEST(Validate, MixedModes) {
  auto d = validate(parse("R(X,Y) :- X < Y, p(X,Y)."));
  ASSERT_FALSE(d.empty());
  EXPECT_NE(d[0].message.find("mixed atom modes"), std::string::npos);
}

TEST(Validate, UndeclaredConstant) {
  Program p = parse("P(X) :- X < Y.");
  p.rules[0].body.push_back({OrderAtom{Term::Const("c"), Term::Var("X")}, {}});
  EXPECT_FALSE(validate(p).empty());
}

TEST(Params, TwoRuleProgram) {
  Program p = parse(testing::two_rule_text());
  ProgramParams q = params(p);
  EXPECT_EQ(q.n_idb, 2);
  EXPECT_EQ(q.n_rules, 2);
  EXPECT_EQ(q.max_arity, 3);
  EXPECT_EQ(q.max_body_idbs, 1);
  int m_r = 0;
  for (const Rule& r : p.rules) m_r = std::max(m_r, count_vars(r));
  EXPECT_EQ(q.max_rule_vars, m_r);
}

TEST(Params, EmptyProgram) { EXPECT_EQ(params(Program{}), ProgramParams{}); }

TEST(Params, Discrrun) {
  Program p = parse(testing::discrrun_text());
  ProgramParams q = params(p);
  EXPECT_EQ(q.n_idb, 1);
  EXPECT_EQ(q.n_rules, 3);
  EXPECT_EQ(q.max_arity, 5);
  EXPECT_EQ(q.max_body_idbs, 2);
  int m_r = 0;
  for (const Rule& r : p.rules) m_r = std::max(m_r, count_vars(r));
  EXPECT_EQ(q.max_rule_vars, m_r);
}

TEST(Print, RoundTripsRandomPrograms) {
  std::mt19937_64 rng(11);
  testing::GenParams g;
  g.num_constants = 2;
  for (int i = 0; i < 200; ++i) {
    Program p = testing::random_program(rng, g);
    Program q = parse(print(p));
    EXPECT_EQ(p.rules, q.rules) << print(p);
    EXPECT_EQ(print(p), print(q));
  }
  for (int i = 0; i < 100; ++i) {
    Program p = testing::random_interval_program(rng);
    EXPECT_EQ(print(p), print(parse(print(p))));
  }
}

TEST(Print, CorpusRoundTrips) {
  for (const auto& text : testing::fixed_corpus()) {
    Program p = parse(text);
    EXPECT_EQ(print(parse(print(p))), print(p));
  }
}

}  // namespace
}  // namespace dlorder
