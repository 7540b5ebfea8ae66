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

#include "support/random_programs.hpp"

#include "dlorder/allen.hpp"

namespace dlorder::testing {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

struct Skeleton {
  std::vector<std::string> names;
  std::vector<int> arity;
};

Skeleton symbols(std::mt19937_64& rng, const GenParams& g) {
  Skeleton s;
  const int n = uniform(rng, 1, g.max_idbs);
  for (int i = 0; i < n; ++i) {
    s.names.push_back("P" + std::to_string(i));
    s.arity.push_back(uniform(rng, 0, g.max_arity));
  }
  return s;
}

Term pick_term(std::mt19937_64& rng, int vars, int constants, double const_prob) {
  if (constants > 0 && coin(rng, const_prob)) {
    return Term::Const("c" + std::to_string(uniform(rng, 0, constants - 1)));
  }
  return Term::Var("X" + std::to_string(uniform(rng, 0, vars - 1)));
}

IdbAtom atom_for(std::mt19937_64& rng, const Skeleton& s, int sym, int vars, int constants) {
  IdbAtom a{s.names[sym], {}};
  for (int i = 0; i < s.arity[sym]; ++i) a.args.push_back(pick_term(rng, vars, constants, 0.2));
  return a;
}

}  // namespace

Program random_program(std::mt19937_64& rng, const GenParams& g) {
  const Skeleton s = symbols(rng, g);
  Program p;
  for (int c = 0; c < g.num_constants; ++c) p.constants.push_back("c" + std::to_string(c));
  const int n_rules = std::max<int>(uniform(rng, 1, g.max_rules), static_cast<int>(s.names.size()));
  for (int r = 0; r < n_rules; ++r) {
    Rule rule;
    // Every symbol heads at least one rule; the first rule is a base case.
    const int head = r < static_cast<int>(s.names.size()) ? r : uniform(rng, 0, s.names.size() - 1);
    const int vars = uniform(rng, 1, g.max_vars);
    rule.head = atom_for(rng, s, head, vars, g.num_constants);
    const int idbs = r == 0 ? 0 : uniform(rng, 0, g.max_body_idbs);
    for (int i = 0; i < idbs; ++i) {
      rule.body.push_back({atom_for(rng, s, uniform(rng, 0, s.names.size() - 1), vars,
                                    g.num_constants),
                           {}});
    }
    const int orders = uniform(rng, 0, g.max_order_atoms);
    for (int i = 0; i < orders; ++i) {
      Term l = pick_term(rng, vars, g.num_constants, 0.25);
      Term rr = pick_term(rng, vars, g.num_constants, 0.25);
      if (l == rr && coin(rng, 0.8)) continue;
      rule.body.push_back({OrderAtom{l, rr}, {}});
    }
    p.rules.push_back(std::move(rule));
  }
  for (std::size_t i = 0; i < s.names.size(); ++i) p.idb_arity[s.names[i]] = s.arity[i];
  return p;
}

Program random_interval_program(std::mt19937_64& rng, const GenParams& g) {
  const Skeleton s = symbols(rng, g);
  Program p;
  const int n_rules = std::max<int>(uniform(rng, 1, g.max_rules), static_cast<int>(s.names.size()));
  for (int r = 0; r < n_rules; ++r) {
    Rule rule;
    const int head = r < static_cast<int>(s.names.size()) ? r : uniform(rng, 0, s.names.size() - 1);
    const int vars = uniform(rng, 1, g.max_vars);
    rule.head = atom_for(rng, s, head, vars, 0);
    const int idbs = r == 0 ? 0 : uniform(rng, 0, g.max_body_idbs);
    for (int i = 0; i < idbs; ++i) {
      rule.body.push_back({atom_for(rng, s, uniform(rng, 0, s.names.size() - 1), vars, 0), {}});
    }
    const int rels = uniform(rng, 0, g.max_order_atoms);
    for (int i = 0; i < rels; ++i) {
      auto b = static_cast<allen::Basic>(uniform(rng, 0, allen::kNumBasic - 1));
      rule.body.push_back({IntervalAtom{allen::Relation::bit(b), pick_term(rng, vars, 0, 0),
                                        pick_term(rng, vars, 0, 0)},
                           {}});
    }
    p.rules.push_back(std::move(rule));
  }
  for (std::size_t i = 0; i < s.names.size(); ++i) p.idb_arity[s.names[i]] = s.arity[i];
  return p;
}

std::vector<std::string> fixed_corpus() {
  return {
      two_rule_text(),
      "G() :- X<Y.\n",
      "P(X,Y) :- X<Z, Z<Y.\n",
      "E(X,Y) :- X<Y.\nT(X,Y) :- E(X,Y).\nT(X,Z) :- T(X,Y), T(Y,Z).\n",
      "A() :- X<Y.\nC() :- A().\nB() :- A(), C().\n",
      "P(X,Y) :- P(X,Y).\n",
      "R(X,X) :- X<Y.\nS(X,Y) :- R(X,X), R(Y,Y), X<Y.\n",
      "H(X,Y) :- Z<X.\nK(X) :- H(X,X), H(Y,X), Y<X.\n",
      "L(X,Y) :- X<Y.\nL(X,Z) :- L(X,Y), Y<Z, L(Y,Z).\nM(X) :- L(X,Y), L(Y,X).\n",
      "Q() :- P(X).\nP(X) :- Y<X, X<Z.\nP(X) :- P(Y), Y<X.\n",
  };
}

std::string discrrun_text() {
  return "P(X1,X2,X3,X4,X5) :- X1<A, A<X2, X2<B, B<X3, X4<C, C<X5.\n"
         "P(X1,X2,X3,X4,X5) :- X1<X2, X4<Z2, Z3<Y4, Y5<X5, P(X2,X3,Z1,Z2,Z3), "
         "P(Y1,Y2,Y3,Y4,Y5).\n"
         "P(X1,X2,X3,X4,X5) :- P(X1,X2,X3,Z1,Z2), P(Y1,X4,X5,Y2,Y3).\n";
}

std::string two_rule_text() {
  return "P(X,Y) :- X<Z1, Z1<Z2, Z2<Y.\n"
         "Q(X,Y,Z) :- P(X,Y), Y<W, W<Z.\n";
}

}  // namespace dlorder::testing
