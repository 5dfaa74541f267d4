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

using namespace aisr;

namespace {

std::vector<int> row(FiniteAiSemiring const& s, std::string const& a) {
  std::vector<int> out;
  auto i = static_cast<Element>(s.find_element(a));
  for (Element b = 0; b < s.order(); ++b) {
    out.push_back(std::stoi(s.element_name(s.mul(i, b))));
  }
  return out;
}

std::set<std::string> generated(std::string const& parent,
                                std::vector<std::string> const& seed) {
  auto const& p = catalog().get(parent).algebra;
  auto sub = generated_subalgebra(p, elements_named(p, seed)).algebra;
  return {sub.elements().begin(), sub.elements().end()};
}

}  // namespace

TEST_CASE("lookup", "[catalog]") {
  auto const& c = catalog();
  CHECK(row(c.get("S_(4,37)").algebra, "3") == std::vector<int>{1, 3, 4, 2});
  CHECK(c.get("S_(4, 37)").name == "S_(4,37)");
  CHECK(c.get("S7").algebra == tables::s7());
  CHECK_THROWS_AS(c.get("S_(4,59)"), UnknownName);
  CHECK_THROWS_AS(c.get("S3"), UnknownName);
  CHECK(c.entries().size() == 58 + 1 + 6 + 9);
}

TEST_CASE("order-four entries", "[catalog]") {
  auto hs = catalog().list({.height_one = true});
  REQUIRE(hs.size() == 58);
  for (auto const* e : hs) {
    INFO(e->name);
    CHECK(e->algebra.order() == 4);
    CHECK(validate(e->algebra.add_rows(), e->algebra.mul_rows()).valid);
    CHECK(additive_height(e->algebra) == 1);
    CHECK(e->algebra.element_name(natural_order(e->algebra).top) == "1");
    CHECK(e->algebra.add_rows() ==
          tables::zero_based(tables::height_one_add));
  }
}

TEST_CASE("status lists", "[catalog]") {
  auto nfb = catalog().list(
      {.order = 4, .status = BasisStatus::nonfinitely_based});
  std::vector<std::string> names;
  for (auto const* e : nfb) {
    names.push_back(e->name);
  }
  CHECK(names == std::vector<std::string>{"S_(4,11)", "S_(4,13)", "S_(4,24)",
                                          "S_(4,25)", "S_(4,26)", "S_(4,28)",
                                          "S_(4,31)", "S_(4,49)", "S_(4,50)"});
  CHECK(catalog()
            .list({.order = 4, .status = BasisStatus::finitely_based})
            .size() == 49);
  for (auto const& e : catalog().entries()) {
    if (e.basis) {
      CHECK(e.status == BasisStatus::finitely_based);
    }
    if (!e.height_one) {
      CHECK(e.status == BasisStatus::external);
    }
  }
  CHECK(parse_status("external") == BasisStatus::external);
  CHECK_FALSE(parse_status("finite"));
}

TEST_CASE("flat filter", "[catalog]") {
  for (auto const* e : catalog().list({.flat = true})) {
    CHECK(is_flat(e->algebra));
  }
  CHECK(catalog().get("S7").flat);
  CHECK(catalog().get("T2").flat);
  CHECK_FALSE(catalog().get("L2").flat);
}

TEST_CASE("the ten bases hold", "[catalog][basis]") {
  std::vector<std::string> with_basis;
  for (auto const& e : catalog().entries()) {
    if (!e.basis) {
      continue;
    }
    with_basis.push_back(e.name);
    auto r = check_basis(e.algebra, *e.basis);
    for (auto const& v : r.verdicts) {
      INFO(e.name << ": " << to_string(v.identity));
      CHECK(v.holds);
    }
  }
  std::sort(with_basis.begin(), with_basis.end());
  CHECK(with_basis ==
        std::vector<std::string>{"S_(4,12)", "S_(4,14)", "S_(4,15)",
                                 "S_(4,20)", "S_(4,30)", "S_(4,4)",
                                 "S_(4,41)", "S_(4,42)", "S_(4,47)",
                                 "S_(4,48)"});
}

TEST_CASE("a basis is not satisfied by unrelated algebras", "[catalog][basis]") {
  auto const& b4 = *catalog().get("S_(4,4)").basis;
  CHECK_FALSE(check_basis(catalog().get("S_(4,8)").algebra, b4).all_hold);
  CHECK_FALSE(check_basis(catalog().get("L2").algebra, b4).all_hold);
}

TEST_CASE("optional variables expand into instances", "[catalog][basis]") {
  auto id = parse_identity("x1^2x2 + x3x4^2 ≈ x1^2x2^2x3^2x4^2");
  auto inst = expand_optional(id, {Variable('x', 2), Variable('x', 3)});
  REQUIRE(inst.size() == 4);
  CHECK(inst[0] == id);
  CHECK(std::find(inst.begin(), inst.end(),
                  parse_identity("x1^2 + x4^2 ≈ x1^2x4^2")) != inst.end());
  // x alone would become empty.
  CHECK(expand_optional(parse_identity("x + xy ≈ xy^2"), {Variable('x')})
            .size() == 1);
  CHECK(expand_optional(parse_identity("x1x2 ≈ x2x1"),
                        {Variable('x', 1), Variable('x', 2)})
            .size() == 3);
  auto const& b12 = *catalog().get("S_(4,12)").basis;
  // 15 plain identities and 4 + 4 + 4 + 16 + 16 scheme instances.
  CHECK(b12.size() == 59);
  CHECK(std::find(b12.begin(), b12.end(),
                  parse_identity("x^2y + z ≈ x^2y + xz")) != b12.end());
  CHECK(std::find(b12.begin(), b12.end(),
                  parse_identity("x1 + x1 ≈ x1 + x1 + x1^2")) == b12.end());
}

TEST_CASE("derived order-3 entries come from their seeds", "[catalog]") {
  auto const& c = catalog();
  CHECK(generated("S_(4,15)", {"1", "2", "3"}) ==
        std::set<std::string>{"1", "2", "3"});
  CHECK(is_isomorphic(c.get("S2").algebra,
                      c.resolve("@gen:S_(4,15){1,2,3}")));
  CHECK(is_isomorphic(c.get("S4").algebra,
                      c.resolve("@gen:S_(4,47){1,2,3}")));
  CHECK(is_isomorphic(c.get("S10").algebra,
                      c.resolve("@gen:S_(4,20){1,3,4}")));
  CHECK(is_isomorphic(c.get("S6").algebra, dual(c.get("S4").algebra)));
  for (auto const* n : {"S2", "S4", "S5", "S6", "S9", "S10", "S13", "S14",
                        "S15"}) {
    CHECK(c.get(n).algebra.order() == 3);
  }
}

TEST_CASE("seed corrections are recorded as facts", "[catalog]") {
  auto const& c = catalog();
  // {1,2,3} of S_(4,12) has all products equal to 1.
  auto n12 = c.resolve("@gen:S_(4,12){1,2,3}");
  for (Element a = 0; a < 3; ++a) {
    for (Element b = 0; b < 3; ++b) {
      CHECK(n12.element_name(n12.mul(a, b)) == "1");
    }
  }
  CHECK(is_isomorphic(c.resolve("@gen:S_(4,12){1,2,4}"),
                      dual(c.get("S4").algebra)));
  CHECK(generated("S_(4,20)", {"3"}) == std::set<std::string>{"3"});
  CHECK(generated("S_(4,20)", {"4"}) == std::set<std::string>{"1", "3", "4"});
  CHECK(generated("S_(4,20)", {"1", "4"}) ==
        std::set<std::string>{"1", "3", "4"});
}

TEST_CASE("pinned order-3 entries are unique", "[catalog]") {
  auto const census = enumerate_ai_semirings(3);
  auto const& c = catalog();
  struct Pin {
    const char* name;
    const char* whole;
    const char* known;
  };
  for (auto p : {Pin{"S5", "S_(4,41)", "S2"}, Pin{"S9", "S_(4,47)", "S4"},
                 Pin{"S13", "S_(4,42)", "S2"}, Pin{"S14", "S_(4,30)", "S4"},
                 Pin{"S15", "S_(4,48)", "S4"}}) {
    INFO(p.name);
    auto cand = Catalog::pin_candidates(census, c.get(p.whole).algebra,
                                        c.get(p.known).algebra);
    REQUIRE(cand.size() == 1);
    CHECK(is_isomorphic(census.members[cand[0]], c.get(p.name).algebra));
  }
}

TEST_CASE("classify", "[catalog]") {
  auto const& c = catalog();
  CHECK(c.classify(c.resolve("@sc:ab")) == "S_(4,8)");
  CHECK(c.classify(tables::height_one(5)) == "S_(4,5)");
  CHECK(c.classify(dual(tables::height_one(48))) == "S_(4,46)");
  CHECK_FALSE(c.classify(direct_product(tables::s7(), tables::s7())));
  for (auto const& e : c.entries()) {
    INFO(e.name);
    CHECK(c.classify_all(e.algebra) == std::vector<std::string>{e.name});
  }
}

TEST_CASE("references", "[catalog]") {
  auto const& c = catalog();
  CHECK(c.resolve("@sc:ab").order() == 4);
  CHECK(c.resolve("@mc:a").order() == 3);
  CHECK(c.resolve("@prod:S_(4,8),T2").order() == 8);
  CHECK(c.resolve("@prod:@dual:S_(4,41),L2").order() == 8);
  CHECK(c.resolve("@ne:S7").order() == 4);
  CHECK(c.resolve("@ie:S2").order() == 4);
  CHECK(c.resolve("@flatext:z3").order() == 4);
  CHECK(c.resolve("@gen:S_(4,20){4}").order() == 3);
  CHECK_THROWS_AS(c.resolve("@nope:x"), UnknownName);
  CHECK_THROWS_AS(c.resolve("@prod:S7"), ConstructionError);
  CHECK_THROWS_AS(c.resolve("@flatext:q3"), ConstructionError);
  CHECK_THROWS_AS(c.resolve("@ne:L2"), ConstructionError);
  CHECK_THROWS_AS(c.resolve("@gen:S7{z}"), UnknownName);
}

TEST_CASE("structural claims", "[catalog][claims]") {
  auto rep = catalog().verify_all_claims();
  for (auto const& r : rep.results) {
    INFO(r.entry << ": " << r.claim.str() << " (" << r.detail << ")");
    CHECK(r.pass);
  }
  CHECK(rep.all_pass);
  CHECK(rep.results.size() >= 40);
  auto smoke = catalog().check(
      "S_(4,14)", Claim{ClaimKind::isomorphic, {"S_(4,14)", "S_(4,14)"}, ""});
  CHECK(smoke.pass);
  auto bad = catalog().check(
      "S_(4,14)", Claim{ClaimKind::isomorphic, {"S_(4,14)", "S_(4,15)"}, ""});
  CHECK_FALSE(bad.pass);
  auto broken = catalog().check(
      "S_(4,14)", Claim{ClaimKind::isomorphic, {"S_(4,14)", "nothing"}, ""});
  CHECK_FALSE(broken.pass);
  CHECK(broken.detail.find("nothing") != std::string::npos);
}
