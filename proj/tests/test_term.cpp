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

#include <random>

#include "aisr/parse.hpp"
#include "aisr/term.hpp"

using namespace aisr;

namespace {

Variable const x('x'), y('y'), z('z');

Term T(std::string_view s) { return parse_term(s); }

Term random_term(std::mt19937& rng) {
  std::uniform_int_distribution<int> nwords(1, 3), len(1, 3), letter(0, 3);
  std::vector<Word> words;
  for (int i = nwords(rng); i > 0; --i) {
    std::vector<Variable> v;
    for (int j = len(rng); j > 0; --j) {
      v.emplace_back(static_cast<char>('a' + letter(rng)));
    }
    words.emplace_back(std::move(v));
  }
  return Term(std::move(words));
}

}  // namespace

TEST_CASE("variables order by letter then subscript", "[term]") {
  CHECK(Variable('x') < Variable('x', 0));
  CHECK(Variable('x', 1) < Variable('x', 2));
  CHECK(Variable('x', 12) < Variable('y'));
  CHECK(Variable('x', 12).str() == "x12");
}

TEST_CASE("parse terms", "[parse]") {
  auto t = T("x1x2x3 + x4");
  REQUIRE(t.size() == 2);
  CHECK(t.words()[0].length() == 3);
  CHECK(t.words()[0].letters()[1] == Variable('x', 2));
  CHECK(t.words()[1] == Word{Variable('x', 4)});

  CHECK(T("x^2") == Term(Word{x, x}));
  CHECK(T("xy + yz + xz").size() == 3);
  CHECK(T("x*y") == T("xy"));
  CHECK(T(" x  y ") == T("xy"));
  CHECK(T("(x+y)z") == T("xz + yz"));
  CHECK(T("(xy)^2") == T("xyxy"));
  CHECK(T("x01") == T("x1"));
  CHECK(T("x + x") == T("x"));
}

TEST_CASE("parse identities", "[parse]") {
  auto id = parse_identity("x^4 \xE2\x89\x88 x^2");
  CHECK(id.lhs == Term(Word{x, x, x, x}));
  CHECK(id.rhs == Term(Word{x, x}));
  CHECK(parse_identity("xy = yx") == parse_identity("xy ≈ yx"));
}

TEST_CASE("parse errors carry a position", "[parse]") {
  try {
    parse_term("x + ");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_term("x^0"), ParseError);
  CHECK_THROWS_AS(parse_term("x^"), ParseError);
  CHECK_THROWS_AS(parse_term("(x"), ParseError);
  CHECK_THROWS_AS(parse_term("x)"), ParseError);
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_identity("x + y"), ParseError);
  CHECK_THROWS_AS(parse_identity("x = y = z"), ParseError);
  CHECK_THROWS_AS(parse_term("3x"), ParseError);
}

TEST_CASE("printing round-trips", "[parse][property]") {
  CHECK(to_string(T("xxyx")) == "x^2yx");
  CHECK(to_string(T("x1x1x2")) == "x1^2x2");
  CHECK(to_string(parse_identity("xy=yx")) == "xy \xE2\x89\x88 yx");
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    auto t = random_term(rng);
    CHECK(parse_term(to_string(t)) == t);
  }
  auto sub = T("x1^2x2 + x12x1 + y3^3");
  CHECK(parse_term(to_string(sub)) == sub);
}

TEST_CASE("word measures", "[term]") {
  auto m = word_measures(Word{x, y, x});
  CHECK(m.h == x);
  CHECK(m.t == x);
  CHECK(m.c == std::set<Variable>{x, y});
  CHECK(m.length == 3);
  CHECK(m.m.at(x) == 2);
  CHECK(m.m.at(y) == 1);
  CHECK(m.p == Word{x, y});
  CHECK(m.s == Word{y, x});
  CHECK(m.r == std::set<Variable>{y});

  auto one = word_measures(Word{x});
  CHECK_FALSE(one.p.has_value());
  CHECK_FALSE(one.s.has_value());
  CHECK(one.r == std::set<Variable>{x});

  CHECK(Word{x, y, y}.odd_letters() == std::set<Variable>{x});
  CHECK_THROWS_AS(Word(std::vector<Variable>{}), EmptyWord);
}

TEST_CASE("term measures", "[term]") {
  auto m = term_measures(T("x + xy + zzz"));
  CHECK(m.h == std::set<Variable>{x, z});
  CHECK(m.t == std::set<Variable>{x, y, z});
  CHECK(m.L(1) == std::vector<Word>{Word{x}});
  CHECK(m.L(2) == std::vector<Word>{Word{x, y}});
  CHECK(m.L(3) == std::vector<Word>{Word{z, z, z}});
  CHECK(m.L(4).empty());

  auto s = term_measures(T("x"));
  CHECK(s.h.size() == 1);
  CHECK(s.t.size() == 1);
  CHECK(s.c.size() == 1);

  CHECK(term_measures(parse_identity("x^2 = x^2 + y").lhs).L(2) ==
        std::vector<Word>{Word{x, x}});
}

TEST_CASE("normalize identities", "[term]") {
  auto n = normalize_identity(parse_identity("a = b"));
  REQUIRE(n.size() == 2);
  CHECK(n[0] == SimpleIdentity{T("a"), Word{Variable('b')}});
  CHECK(n[1] == SimpleIdentity{T("b"), Word{Variable('a')}});

  auto m = normalize_identity(parse_identity("xy = x^2 + y^2"));
  REQUIRE(m.size() == 3);
  CHECK(m[0] == SimpleIdentity{T("xy"), Word{x, x}});
  CHECK(m[1] == SimpleIdentity{T("xy"), Word{y, y}});
  CHECK(m[2] == SimpleIdentity{T("x^2 + y^2"), Word{x, y}});
  CHECK_FALSE(m[0].trivial());

  for (auto const& si : normalize_identity(parse_identity("xy + z = xy + z"))) {
    CHECK(si.trivial());
  }
}

TEST_CASE("simple identity recognition", "[term]") {
  auto s = as_simple(parse_identity("xy + x = xy + x + x^3"));
  REQUIRE(s);
  CHECK(s->base == T("xy + x"));
  CHECK(s->extra == Word{x, x, x});
  CHECK(as_simple(parse_identity("x + y^3 = x")));
  CHECK_FALSE(as_simple(parse_identity("xy = yx")));
  CHECK_FALSE(as_simple(parse_identity("x = x + y + z")));
}

TEST_CASE("sum and product", "[term]") {
  CHECK(term_product(T("x + y"), T("z")) == T("xz + yz"));
  CHECK(term_sum(term_product(T("x"), T("y + z")), T("w")) ==
        T("xy + xz + w"));
  CHECK(term_sum(T("x"), T("x")) == T("x"));
}

TEST_CASE("sum and product obey the ai-semiring laws", "[term][property]") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto a = random_term(rng), b = random_term(rng), c = random_term(rng);
    CHECK(term_sum(a, b) == term_sum(b, a));
    CHECK(term_sum(a, a) == a);
    CHECK(term_sum(term_sum(a, b), c) == term_sum(a, term_sum(b, c)));
    CHECK(term_product(term_product(a, b), c) ==
          term_product(a, term_product(b, c)));
    CHECK(term_product(a, term_sum(b, c)) ==
          term_sum(term_product(a, b), term_product(a, c)));
    CHECK(term_product(term_sum(a, b), c) ==
          term_sum(term_product(a, c), term_product(b, c)));
  }
}

TEST_CASE("substitution", "[term]") {
  Substitution sigma{{x, T("a + b")}, {y, T("c")}};
  CHECK(substitute(T("xy"), sigma) == T("ac + bc"));
  Substitution id{{x, T("x")}, {y, T("y")}};
  CHECK(substitute(T("xy + yx + x"), id) == T("xy + yx + x"));
  CHECK(substitute(T("x^2"), Substitution{{x, T("y + z")}}) ==
        T("yy + yz + zy + zz"));
  CHECK_THROWS_AS(substitute(T("xz"), sigma), MissingVariable);
}

TEST_CASE("substitution is a homomorphism", "[term][property]") {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    Substitution sigma;
    for (char c = 'a'; c <= 'd'; ++c) {
      sigma.emplace(Variable(c), random_term(rng));
    }
    auto a = random_term(rng), b = random_term(rng);
    CHECK(substitute(term_product(a, b), sigma) ==
          term_product(substitute(a, sigma), substitute(b, sigma)));
    CHECK(substitute(term_sum(a, b), sigma) ==
          term_sum(substitute(a, sigma), substitute(b, sigma)));
  }
}

TEST_CASE("reversal and commutative view", "[term]") {
  CHECK(T("xyz + x").reversed() == T("zyx + x"));
  CHECK(T("yxz + zyx").sorted() == T("xyz"));
  CHECK(SimpleIdentity{T("xy"), Word{y, z}}.reversed() ==
        SimpleIdentity{T("yx"), Word{z, y}});
}
