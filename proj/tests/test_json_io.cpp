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
#include "aisr/json_io.hpp"

using namespace aisr;

namespace {

std::filesystem::path temp_file(std::string const& name) {
  return std::filesystem::temp_directory_path() / ("aisr_json_" + name);
}

}  // namespace

TEST_CASE("semiring round trip", "[json]") {
  for (auto const& e : catalog().entries()) {
    INFO(e.name);
    auto j = to_json(e.algebra);
    CHECK(j["name"] == e.name);
    auto back = semiring_from_json(Json::parse(j.dump()));
    CHECK(back == e.algebra);
    CHECK(back.name() == e.name);
  }
}

TEST_CASE("semiring files", "[json]") {
  auto p = temp_file("s7.json");
  write_json_file(p, to_json(tables::s7()));
  CHECK(load_semiring(p) == tables::s7());
  std::filesystem::remove(p);
  CHECK_THROWS_AS(load_semiring(p), IoError);
}

TEST_CASE("semiring decoding errors", "[json]") {
  CHECK_THROWS_AS(semiring_from_json(Json::array()), IoError);
  CHECK_THROWS_AS(semiring_from_json(Json{{"add", {{0}}}}), IoError);
  CHECK_THROWS_AS(semiring_from_json(Json::parse(
                      R"({"add": [[0, 1], [1, 1]], "mul": [[0, 1]]})")),
                  MalformedTable);
  CHECK_THROWS_AS(semiring_from_json(Json::parse(
                      R"({"add": [[0, 1], [1, 1]], "mul": [["a", 0], [0, 0]]})")),
                  MalformedTable);
  CHECK_THROWS_AS(semiring_from_json(Json::parse(
                      R"({"add": [[0, 0], [1, 1]], "mul": [[0, 0], [0, 0]]})")),
                  InvalidSemiring);
  auto s = semiring_from_json(
      Json::parse(R"({"add": [[0, 1], [1, 1]], "mul": [[0, 0], [0, 0]]})"));
  CHECK(s.name() == "unnamed");
  CHECK(s.elements() == std::vector<std::string>{"0", "1"});

  auto p = temp_file("broken.json");
  {
    std::ofstream out(p);
    out << "{not json";
  }
  CHECK_THROWS_AS(load_semiring(p), IoError);
  std::filesystem::remove(p);
}

TEST_CASE("verdicts and reports", "[json]") {
  auto const& s4 = catalog().get("S_(4,4)").algebra;
  auto r = check_basis(s4, {parse_identity("xy = yx")});
  auto j = to_json(s4, r.verdicts[0]);
  CHECK(j["holds"] == false);
  CHECK(j["witness"]["x"] == "3");
  CHECK(j["witness"]["y"] == "4");
  CHECK(j["identity"] == "xy ≈ yx");

  auto ok = check_basis(s4, {parse_identity("x = x")});
  CHECK(to_json(s4, ok.verdicts[0])["witness"].is_null());

  auto v = to_json(validate({{0, 0}, {1, 1}}, {{0, 0}, {0, 0}}));
  CHECK(v["valid"] == false);
  CHECK(v["violations"].size() >= 1);
  CHECK(v["violations"][0].contains("law"));
}

TEST_CASE("morphisms", "[json]") {
  auto m = find_isomorphism(catalog().resolve("@sc:ab"),
                            catalog().get("S_(4,8)").algebra);
  REQUIRE(m);
  auto j = to_json(*m);
  CHECK(j["homomorphism"] == true);
  CHECK(j["injective"] == true);
  CHECK(j["surjective"] == true);
  CHECK(j["map"].size() == 4);
  CHECK(j["images"]["0"] == "1");
}

TEST_CASE("certificate round trip", "[json]") {
  auto c = load_certificate(std::filesystem::path(AISR_CERTIFICATE_DIR) /
                            "commutation_in_context.json");
  auto back = certificate_from_json(Json::parse(to_json(c).dump()));
  CHECK(back.axioms == c.axioms);
  CHECK(back.chain == c.chain);
  REQUIRE(back.steps.size() == 1);
  CHECK(back.steps[0].left == c.steps[0].left);
  CHECK(back.steps[0].right == c.steps[0].right);
  CHECK(back.steps[0].remainder == c.steps[0].remainder);
  CHECK(back.steps[0].substitution == c.steps[0].substitution);
  CHECK(verify_certificate(back).valid);
}

TEST_CASE("certificate decoding errors", "[json]") {
  CHECK_THROWS_AS(certificate_from_json(Json::object()), MalformedCertificate);
  auto base = Json::parse(
      R"({"axioms": ["xy = yx"], "chain": ["ab", "ba"],
          "steps": [{"axiom": 0, "subst": {"x": "a", "y": "b"}}]})");
  CHECK(verify_certificate(certificate_from_json(base)).valid);

  auto bad_dir = base;
  bad_dir["steps"][0]["dir"] = "up";
  CHECK_THROWS_AS(certificate_from_json(bad_dir), MalformedCertificate);
  auto bad_axiom = base;
  bad_axiom["steps"][0]["axiom"] = -1;
  CHECK_THROWS_AS(certificate_from_json(bad_axiom), MalformedCertificate);
  auto bad_term = base;
  bad_term["chain"][0] = "a +";
  CHECK_THROWS_AS(certificate_from_json(bad_term), MalformedCertificate);
  auto bad_key = base;
  bad_key["steps"][0]["subst"]["xy"] = "a";
  CHECK_THROWS_AS(certificate_from_json(bad_key), MalformedCertificate);
  auto bad_identity = base;
  bad_identity["axioms"][0] = "xy";
  CHECK_THROWS_AS(certificate_from_json(bad_identity), MalformedCertificate);

  auto p = temp_file("cert.json");
  {
    std::ofstream out(p);
    out << "[";
  }
  CHECK_THROWS_AS(load_certificate(p), MalformedCertificate);
  std::filesystem::remove(p);
}
