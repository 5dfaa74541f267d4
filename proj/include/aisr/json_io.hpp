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

/// @file json_io.hpp
/// JSON encodings of semirings, verdicts, morphisms and derivation
/// certificates.
///
/// Semiring files look like
///
///     {"name": "S7", "elements": ["1", "a", "∞"],
///      "add": [[0, 2, 2], [2, 1, 2], [2, 2, 2]],
///      "mul": [[0, 1, 2], [1, 2, 2], [2, 2, 2]]}
///
/// with 0-based indices into "elements".

#ifndef INCLUDE_AISR_JSON_IO_HPP_
#define INCLUDE_AISR_JSON_IO_HPP_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "aisr/derivation.hpp"
#include "aisr/evaluator.hpp"
#include "aisr/parse.hpp"
#include "aisr/semiring.hpp"

namespace aisr {

using Json = nlohmann::ordered_json;

inline Json to_json(FiniteAiSemiring const& s) {
  return Json{{"name", s.name()},
              {"elements", s.elements()},
              {"add", s.add_rows()},
              {"mul", s.mul_rows()}};
}

namespace detail {

  inline TableRows table_from_json(Json const& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
      throw IoError(std::string("missing array \"") + key + "\"");
    }
    TableRows rows;
    for (auto const& r : j[key]) {
      if (!r.is_array()) {
        throw MalformedTable(std::string("\"") + key + "\" rows must be arrays");
      }
      std::vector<int> row;
      for (auto const& v : r) {
        if (!v.is_number_integer()) {
          throw MalformedTable(std::string("\"") + key +
                               "\" entries must be integers");
        }
        row.push_back(v.get<int>());
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  inline Json parse_json_text(std::string const& text, std::string const& where) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw IoError(where + ": invalid JSON: " + e.what());
    }
  }

  inline std::string read_text(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw IoError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

}  // namespace detail

/// Builds and validates a semiring from its JSON encoding.
inline FiniteAiSemiring semiring_from_json(Json const& j) {
  if (!j.is_object()) {
    throw IoError("semiring JSON must be an object");
  }
  auto add = detail::table_from_json(j, "add");
  auto mul = detail::table_from_json(j, "mul");
  std::vector<std::string> elements;
  if (j.contains("elements")) {
    if (!j["elements"].is_array()) {
      throw IoError("\"elements\" must be an array");
    }
    for (auto const& e : j["elements"]) {
      elements.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    }
  }
  std::string name = j.contains("name") && j["name"].is_string()
                         ? j["name"].get<std::string>()
                         : std::string("unnamed");
  return FiniteAiSemiring::from_rows(std::move(name), std::move(elements), add,
                                     mul);
}

inline Json read_json_file(std::filesystem::path const& path) {
  return detail::parse_json_text(detail::read_text(path), path.string());
}

inline FiniteAiSemiring load_semiring(std::filesystem::path const& path) {
  return semiring_from_json(read_json_file(path));
}

inline void write_json_file(std::filesystem::path const& path, Json const& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << j.dump(2) << "\n";
}

inline Json to_json(ValidationReport const& r) {
  Json v = Json::array();
  for (auto const& x : r.violations) {
    v.push_back(Json{{"law", x.law}, {"witness", x.witness}});
  }
  return Json{{"valid", r.valid}, {"violations", v}};
}

inline Json witness_json(FiniteAiSemiring const& s,
                         std::optional<Assignment> const& a) {
  if (!a) {
    return nullptr;
  }
  Json w = Json::object();
  for (auto const& [x, e] : *a) {
    w[x.str()] = s.element_name(e);
  }
  return w;
}

inline Json to_json(FiniteAiSemiring const& s, IdentityVerdict const& v) {
  return Json{{"identity", to_string(v.identity)},
              {"holds", v.holds},
              {"witness", witness_json(s, v.witness)}};
}

inline Json to_json(Morphism const& m) {
  Json images = Json::object();
  for (std::size_t a = 0; a < m.map.size(); ++a) {
    images[m.source.elements()[a]] = m.target.elements()[m.map[a]];
  }
  return Json{{"source", m.source.name()},
              {"target", m.target.name()},
              {"map", m.map},
              {"images", images},
              {"homomorphism", m.is_homomorphism()},
              {"injective", m.is_injective()},
              {"surjective", m.is_surjective()}};
}

namespace detail {

  inline Term term_field(Json const& j, std::string const& where) {
    if (!j.is_string()) {
      throw MalformedCertificate(where + " must be a term string");
    }
    try {
      return parse_term(j.get<std::string>());
    } catch (ParseError const& e) {
      throw MalformedCertificate(where + ": " + e.what());
    }
  }

  inline std::optional<Term> optional_term(Json const& step, const char* key,
                                           std::string const& where) {
    if (!step.contains(key) || step[key].is_null()) {
      return std::nullopt;
    }
    return term_field(step[key], where + "." + key);
  }

}  // namespace detail

inline DerivationCertificate certificate_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("axioms") || !j.contains("chain") ||
      !j.contains("steps") || !j["axioms"].is_array() ||
      !j["chain"].is_array() || !j["steps"].is_array()) {
    throw MalformedCertificate(
        "certificate needs arrays \"axioms\", \"chain\" and \"steps\"");
  }
  DerivationCertificate c;
  for (auto const& a : j["axioms"]) {
    if (!a.is_string()) {
      throw MalformedCertificate("axioms must be identity strings");
    }
    try {
      c.axioms.push_back(parse_identity(a.get<std::string>()));
    } catch (ParseError const& e) {
      throw MalformedCertificate(std::string("axiom: ") + e.what());
    }
  }
  for (std::size_t i = 0; i < j["chain"].size(); ++i) {
    c.chain.push_back(
        detail::term_field(j["chain"][i], "chain[" + std::to_string(i) + "]"));
  }
  for (std::size_t i = 0; i < j["steps"].size(); ++i) {
    auto const& s = j["steps"][i];
    std::string const where = "steps[" + std::to_string(i) + "]";
    if (!s.is_object() || !s.contains("axiom") ||
        !s["axiom"].is_number_integer() || s["axiom"].get<long>() < 0) {
      throw MalformedCertificate(where + " needs a nonnegative \"axiom\" index");
    }
    DerivationStep step;
    step.axiom = s["axiom"].get<std::size_t>();
    std::string dir = s.value("dir", std::string("LR"));
    if (dir != "LR" && dir != "RL") {
      throw MalformedCertificate(where + ".dir must be \"LR\" or \"RL\"");
    }
    step.left_to_right = dir == "LR";
    if (s.contains("subst")) {
      if (!s["subst"].is_object()) {
        throw MalformedCertificate(where + ".subst must be an object");
      }
      for (auto const& [var, t] : s["subst"].items()) {
        Word v = [&] {
          try {
            return parse_word(var);
          } catch (ParseError const& e) {
            throw MalformedCertificate(where + ".subst key: " + e.what());
          }
        }();
        if (v.length() != 1) {
          throw MalformedCertificate(where + ".subst key " + var +
                                     " is not a variable");
        }
        step.substitution.emplace(v.head(),
                                  detail::term_field(t, where + ".subst." + var));
      }
    }
    step.left = detail::optional_term(s, "left", where);
    step.right = detail::optional_term(s, "right", where);
    step.remainder = detail::optional_term(s, "remainder", where);
    c.steps.push_back(std::move(step));
  }
  return c;
}

inline Json to_json(DerivationCertificate const& c) {
  Json axioms = Json::array(), chain = Json::array(), steps = Json::array();
  for (auto const& a : c.axioms) {
    axioms.push_back(to_string(a));
  }
  for (auto const& t : c.chain) {
    chain.push_back(to_string(t));
  }
  auto opt = [](std::optional<Term> const& t) -> Json {
    return t ? Json(to_string(*t)) : Json(nullptr);
  };
  for (auto const& s : c.steps) {
    Json subst = Json::object();
    for (auto const& [v, t] : s.substitution) {
      subst[v.str()] = to_string(t);
    }
    steps.push_back(Json{{"axiom", s.axiom},
                         {"dir", s.left_to_right ? "LR" : "RL"},
                         {"subst", subst},
                         {"left", opt(s.left)},
                         {"right", opt(s.right)},
                         {"remainder", opt(s.remainder)}});
  }
  return Json{{"axioms", axioms}, {"chain", chain}, {"steps", steps}};
}

inline DerivationCertificate load_certificate(std::filesystem::path const& path) {
  auto text = detail::read_text(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw MalformedCertificate(path.string() + ": invalid JSON: " + e.what());
  }
  return certificate_from_json(j);
}

}  // namespace aisr

#endif  // INCLUDE_AISR_JSON_IO_HPP_
