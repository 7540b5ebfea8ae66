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

#include "dlorder/orders.hpp"

namespace dlorder {
namespace {

Element I(std::int64_t v) { return Element::integer(v); }

TEST(Compare, Examples) {
  EXPECT_EQ(OrderModel::integers().compare(I(-1), I(4)), Cmp::kLess);
  EXPECT_EQ(OrderModel::finite(10).compare(I(5), I(5)), Cmp::kEqual);
  EXPECT_EQ(OrderModel::rationals().compare(Element::fraction(1, 3), Element::fraction(1, 4)),
            Cmp::kGreater);
}

TEST(Compare, OutOfDomain) {
  EXPECT_THROW(OrderModel::finite(3).compare(I(0), I(3)), ModelError);
  EXPECT_THROW(OrderModel::naturals().compare(I(-1), I(0)), ModelError);
  EXPECT_THROW(OrderModel::integers().compare(Element::fraction(1, 2), I(0)), ModelError);
}

TEST(Distance, Examples) {
  EXPECT_EQ(OrderModel::finite(10).distance(I(2), I(5), 5), 3);
  EXPECT_EQ(OrderModel::integers().distance(I(-1), I(4), 3), 3);
  EXPECT_EQ(OrderModel::rationals().distance(I(0), Element::fraction(1, 1000), 7), 7);
  EXPECT_EQ(OrderModel::rationals().distance(I(1), I(1), 7), 0);
}

TEST(Distance, MatchesChainCountOnFiniteOrders) {
  const auto m = OrderModel::finite(8);
  for (int a = 0; a < 8; ++a) {
    for (int b = a; b < 8; ++b) {
      int chain = 0;
      for (int x = a; x < b; ++x) ++chain;  // a < a+1 < ... < b
      for (int cap = 0; cap < 10; ++cap) EXPECT_EQ(m.distance(I(a), I(b), cap), std::min(chain, cap));
    }
  }
}

TEST(Distance, RequiresOrderedArguments) {
  EXPECT_THROW(OrderModel::integers().distance(I(4), I(1), 3), ModelError);
}

TEST(BoundaryDistance, Examples) {
  EXPECT_EQ(OrderModel::finite(10).boundary_distance(I(2), Side::kBelowToMin, 5), 2);
  EXPECT_EQ(OrderModel::naturals().boundary_distance(I(3), Side::kBelowToMin, 9), 3);
  EXPECT_EQ(OrderModel::integers().boundary_distance(I(3), Side::kBelowToMin, 9), 9);
  EXPECT_EQ(OrderModel::finite(10).boundary_distance(I(2), Side::kAboveToMax, 50), 7);
  EXPECT_EQ(OrderModel::naturals().boundary_distance(I(3), Side::kAboveToMax, 9), 9);
  EXPECT_EQ(OrderModel::rationals().boundary_distance(I(0), Side::kBelowToMin, 4), 4);
}

TEST(Span, Models) {
  EXPECT_EQ(OrderModel::finite(1).span(10), 0);
  EXPECT_EQ(OrderModel::finite(6).span(10), 5);
  EXPECT_EQ(OrderModel::finite(6).span(3), 3);
  EXPECT_EQ(OrderModel::integers().span(10), 10);
}

TEST(ParseElement, Examples) {
  EXPECT_EQ(OrderModel::finite(6).parse_element("5"), I(5));
  EXPECT_EQ(OrderModel::rationals().parse_element("2/4"), Element::fraction(1, 2));
  EXPECT_EQ(OrderModel::rationals().parse_element("-3/6").str(), "-1/2");
  EXPECT_THROW(OrderModel::finite(6).parse_element("6"), ModelError);
  EXPECT_THROW(OrderModel::integers().parse_element("1/2"), ModelError);
  EXPECT_THROW(OrderModel::integers().parse_element("x"), ModelError);
}

TEST(ParseModel, Specs) {
  EXPECT_EQ(OrderModel::parse("finite:4").size(), 4);
  EXPECT_EQ(OrderModel::parse("nat").kind(), OrderModel::Kind::kNaturals);
  EXPECT_EQ(OrderModel::parse("int").kind(), OrderModel::Kind::kIntegers);
  EXPECT_TRUE(OrderModel::parse("rat").is_dense());
  EXPECT_EQ(OrderModel::parse("finite:4").spec(), "finite:4");
  EXPECT_THROW(OrderModel::parse("finite:0"), ModelError);
  EXPECT_THROW(OrderModel::parse("real"), ModelError);
}

}  // namespace
}  // namespace dlorder
