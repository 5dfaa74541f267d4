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

#include "aisr/catalog.hpp"
#include "aisr/criteria.hpp"

using namespace aisr;

namespace {

SimpleIdentity si(std::string_view u, std::string_view q) {
  return {parse_term(u), parse_word(q)};
}

Variable const x('x'), y('y'), z('z');

/// Criterion verdict and oracle verdict, checked to agree.
bool decide(Criterion c, SimpleIdentity const& s) {
  bool const syn = holds(c, s).holds;
  CHECK(syn == satisfies(criterion_algebra(c), s));
  return syn;
}

}  // namespace

TEST_CASE("criterion names", "[criteria]") {
  for (auto c : all_criteria) {
    CHECK(parse_criterion(criterion_name(c)) == c);
  }
  CHECK_FALSE(parse_criterion("S3"));
}

TEST_CASE("two-element rules", "[criteria]") {
  auto v = holds(Criterion::L2, si("xy + z", "xw"));
  CHECK(v.holds);
  CHECK(v.rule == "head match");
  CHECK(decide(Criterion::L2, si("xy + z", "xw")));
  CHECK_FALSE(decide(Criterion::L2, si("xy + z", "yx")));
  CHECK(decide(Criterion::R2, si("xy + z", "zy")));
  CHECK(decide(Criterion::M2, si("xy", "x")));
  CHECK_FALSE(decide(Criterion::M2, si("xy", "z")));
  CHECK_FALSE(decide(Criterion::T2, si("x + y", "z")));
  CHECK(decide(Criterion::T2, si("xy + z", "w")));
  CHECK_FALSE(decide(Criterion::T2, si("x + y", "xyz")));
  CHECK(decide(Criterion::N2, si("x", "yz")));
  CHECK_FALSE(decide(Criterion::N2, si("xy", "z")));
  CHECK(decide(Criterion::D2, si("xy", "xyx")));
  CHECK_FALSE(decide(Criterion::D2, si("xy", "x")));
}

TEST_CASE("S2 clauses", "[criteria]") {
  auto a = holds_S2(si("xyz", "w"));
  CHECK(a.holds);
  CHECK(a.rule == "clause 1: some l(u_i) >= 3");
  auto b = holds_S2(si("x + xy", "zzz"));
  CHECK(b.holds);
  CHECK(b.rule == "clause 2: L1 and L2 share a variable");
  CHECK_FALSE(holds_S2(si("xy + z", "w")).holds);
  CHECK(decide(Criterion::S2, si("xyz", "w")));
  CHECK(decide(Criterion::S2, si("x + xy", "w")));
  CHECK_FALSE(decide(Criterion::S2, si("xy + z", "w")));
}

TEST_CASE("properties T and H", "[criteria]") {
  CHECK(property_T(parse_term("xy")));
  CHECK(property_T(parse_term("xy + zxw")));
  CHECK_FALSE(property_T(parse_term("xx")));
  CHECK(property_H(parse_term("xy")));
  CHECK_FALSE(property_H(parse_term("xx")));
  CHECK(property_H(parse_term("xy")) ==
        property_T(parse_term("xy").reversed()));
}

TEST_CASE("delta families", "[criteria]") {
  auto d = delta(parse_term("xy + zy"));
  CHECK(std::find(d.begin(), d.end(), std::set<Variable>{y}) != d.end());
  CHECK(std::find(d.begin(), d.end(), std::set<Variable>{x, z}) != d.end());
  CHECK(delta(parse_term("xx")).empty());
  CHECK(delta(parse_term("x")) == DeltaFamily{{x}});
}

TEST_CASE("S4 and S6", "[criteria]") {
  CHECK(decide(Criterion::S4, si("xy + x", "xxx")));
  CHECK_FALSE(decide(Criterion::S4, si("xy", "x")));
  CHECK(decide(Criterion::S4, si("xy", "y")));
  CHECK(decide(Criterion::S6, si("xy", "x")));
  CHECK_FALSE(decide(Criterion::S6, si("xy", "y")));
  CHECK(holds_S4(si("xy", "xy")).rule == "trivial");
  CHECK(holds_S4(si("xy", "z")).rule == "c(q) not within c(u)");
}

TEST_CASE("S10", "[criteria]") {
  CHECK(decide(Criterion::S10, si("xyy", "x")));
  CHECK(decide(Criterion::S10, si("xy", "yx")));
  CHECK_FALSE(decide(Criterion::S10, si("xx", "x")));
  CHECK(decide(Criterion::S10, si("x + y + z", "xyz")));
  CHECK_FALSE(decide(Criterion::S10, si("x + y", "xy")));
  CHECK(holds_S10(si("xy", "z")).rule == "c(q) not within c(u)");
}

TEST_CASE("word family", "[criteria]") {
  auto ws = all_words(3, 3);
  CHECK(ws.size() == 3 + 9 + 27);
  CHECK(ws.front() == Word{x});
  CHECK(ws.back() == Word{z, z, z});
  std::size_t n = 0;
  for_each_simple_identity(2, 2, 2, [&](SimpleIdentity const&) { ++n; });
  // 6 words; 6 + 15 sums; 6 choices of q.
  CHECK(n == (6 + 15) * 6);
}

TEST_CASE("criteria agree with the oracle exhaustively",
          "[criteria][oracle]") {
  std::vector<FiniteAiSemiring> algebras;
  for (auto c : all_criteria) {
    algebras.push_back(criterion_algebra(c));
  }
  std::array<std::size_t, 10> disagreements{};
  std::size_t total = 0;
  for_each_simple_identity(3, 3, 3, [&](SimpleIdentity const& s) {
    ++total;
    for (std::size_t i = 0; i < 10; ++i) {
      if (holds(all_criteria[i], s).holds != satisfies(algebras[i], s)) {
        if (disagreements[i]++ == 0) {
          UNSCOPED_INFO(criterion_name(all_criteria[i]) << ": "
                                                        << to_string(s));
        }
      }
    }
  });
  CHECK(total == (39 + 741 + 9139) * 39);
  for (std::size_t i = 0; i < 10; ++i) {
    INFO(criterion_name(all_criteria[i]));
    CHECK(disagreements[i] == 0);
  }
}
