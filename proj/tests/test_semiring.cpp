//  Copyright 2026 The aisr Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <catch_amalgamated.hpp>

#include "aisr/semiring.hpp"
#include "aisr/tables.hpp"

using namespace aisr;

namespace {

TableRows constant(int n, int v) {
  return TableRows(static_cast<std::size_t>(n),
                   std::vector<int>(static_cast<std::size_t>(n), v));
}

TableRows chain_add(int n) {
  TableRows t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t[a][b] = std::max(a, b);
    }
  }
  return t;
}

}  // namespace

TEST_CASE("validate accepts height-one tables", "[semiring]") {
  auto add = tables::zero_based(tables::height_one_add);
  CHECK(validate(add, constant(4, 0)).valid);
  CHECK(validate(add, tables::zero_based(tables::height_one_mul[3])).valid);
}

TEST_CASE("validate reports associativity with a witness", "[semiring]") {
  // 0·0 = 1, everything else 0.
  auto report = validate({{0, 1}, {1, 1}}, {{1, 0}, {0, 0}});
  REQUIRE_FALSE(report.valid);
  bool found = false;
  for (auto const& v : report.violations) {
    if (v.law == "multiplicative associativity") {
      found = true;
      REQUIRE(v.witness.size() == 3);
      // (0·0)·1 = 0 but 0·(0·1) = 1: the first failing triple in lex order.
      CHECK(v.witness == std::vector<Element>{0, 0, 1});
    }
  }
  CHECK(found);
}

TEST_CASE("validate keeps one witness per law", "[semiring]") {
  auto report = validate({{0, 1}, {0, 1}}, {{1, 0}, {0, 0}});
  REQUIRE_FALSE(report.valid);
  std::set<std::string> laws;
  for (auto const& v : report.violations) {
    CHECK(laws.insert(v.law).second);
  }
}

TEST_CASE("malformed tables are a distinct error", "[semiring]") {
  CHECK_THROWS_AS(validate({{0, 1}, {1}}, {{0, 0}, {0, 0}}), MalformedTable);
  CHECK_THROWS_AS(validate({{0, 2}, {2, 1}}, {{0, 0}, {0, 0}}),
                  MalformedTable);
  CHECK_THROWS_AS(validate({{0, 1}, {1, 1}}, {{0, 0, 0}, {0, 0, 0}}),
                  MalformedTable);
  CHECK_THROWS_AS(
      FiniteAiSemiring::from_rows("bad", {}, {{0, 1}, {1, 1}}, {{1, 0}, {0, 0}}),
      InvalidSemiring);
}

TEST_CASE("natural order of height-one algebras", "[semiring]") {
  for (int k = 1; k <= 58; ++k) {
    auto s = tables::height_one(k);
    auto o = natural_order(s);
    CHECK(o.top == 0);
    CHECK(s.element_name(o.top) == "1");
    for (Element a = 1; a < 4; ++a) {
      CHECK(o.less(a, 0));
      for (Element b = 1; b < 4; ++b) {
        CHECK(o.leq(a, b) == (a == b));
      }
    }
    CHECK(is_compatible(s, o));
    CHECK(additive_height(s) == 1);
  }
}

TEST_CASE("natural order of L2 and trivial algebra", "[semiring]") {
  auto l2 = tables::order_two("L2");
  auto o = natural_order(l2);
  CHECK(o.leq(0, 1));
  CHECK_FALSE(o.leq(1, 0));
  CHECK(o.top == 1);
  auto one = FiniteAiSemiring::from_rows("1", {}, {{0}}, {{0}});
  CHECK(natural_order(one).top == 0);
  CHECK(additive_height(one) == 0);
}

TEST_CASE("height of a chain", "[semiring]") {
  auto s = FiniteAiSemiring::from_rows("chain4", {}, chain_add(4), constant(4, 3));
  CHECK(additive_height(s) == 3);
  // Oracle: longest chain by brute force over element sequences.
  auto o = natural_order(s);
  std::size_t best = 0;
  std::vector<Element> perm{0, 1, 2, 3};
  do {
    std::size_t len = 0;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
      if (!o.less(perm[i], perm[i + 1])) {
        break;
      }
      ++len;
    }
    best = std::max(best, len);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(best == 3);
}

TEST_CASE("dual is an involution and swaps factors", "[semiring]") {
  for (int k = 1; k <= 58; ++k) {
    auto s = tables::height_one(k);
    auto d = dual(s);
    for (Element a = 0; a < 4; ++a) {
      for (Element b = 0; b < 4; ++b) {
        CHECK(d.mul(a, b) == s.mul(b, a));
        CHECK(d.add(a, b) == s.add(a, b));
      }
    }
    CHECK(dual(d) == s);
  }
}

TEST_CASE("direct product is componentwise", "[semiring]") {
  auto t2 = tables::order_two("T2");
  auto m2 = tables::order_two("M2");
  auto p = direct_product(t2, m2);
  REQUIRE(p.order() == 4);
  CHECK(p.element_name(1) == "(0,1)");
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) {
      Element const a1 = x / 2, b1 = x % 2, a2 = y / 2, b2 = y % 2;
      CHECK(p.mul(x, y) == t2.mul(a1, a2) * 2 + m2.mul(b1, b2));
      CHECK(p.add(x, y) == t2.add(a1, a2) * 2 + m2.add(b1, b2));
    }
  }
  auto s7 = tables::s7();
  auto sq = direct_product(s7, s7);
  CHECK(sq.order() == 9);
  CHECK(validate(sq.add_rows(), sq.mul_rows()).valid);
}

TEST_CASE("generated subalgebras", "[semiring]") {
  auto s = tables::height_one(20);
  // 3 is idempotent and 4·4 = 3, so {3} is closed and 4 generates {1,3,4}.
  CHECK(generated_subalgebra(s, {2}).algebra.elements() ==
        std::vector<std::string>{"3"});
  auto sub = generated_subalgebra(s, {3});
  CHECK(sub.algebra.elements() == std::vector<std::string>{"1", "3", "4"});
  CHECK(sub.inclusion.is_homomorphism());
  CHECK(sub.inclusion.is_injective());
  CHECK(validate(sub.algebra.add_rows(), sub.algebra.mul_rows()).valid);

  auto whole = generated_subalgebra(s, {0, 1, 2, 3});
  CHECK(whole.algebra == s);
  CHECK_THROWS_AS(generated_subalgebra(s, {}), ConstructionError);
}

TEST_CASE("every two-generated subalgebra of a catalog table is valid",
          "[semiring][property]") {
  for (int k = 1; k <= 58; ++k) {
    auto s = tables::height_one(k);
    for (Element a = 0; a < 4; ++a) {
      for (Element b = a; b < 4; ++b) {
        auto sub = generated_subalgebra(s, {a, b});
        CHECK(validate(sub.algebra.add_rows(), sub.algebra.mul_rows()).valid);
        CHECK(sub.inclusion.is_homomorphism());
      }
    }
  }
}
