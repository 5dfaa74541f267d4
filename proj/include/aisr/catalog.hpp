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

/// @file catalog.hpp
/// Named algebras: the 58 height-one algebras of order four, S7, the six
/// two-element algebras and the order-3 algebras S2 .. S15, with their
/// basis and status data and a list of machine-checked structural claims.
///
/// Algebras can also be referred to by constructor expressions:
///
///     @sc:ab,a   @s:ab   @mc:a   @m:a     word semirings
///     @dual:X    @ne:X   @ie:X            dual, null and idempotent extension
///     @prod:X,Y                           direct product
///     @flatext:z3                         flat extension of Z_3
///     @gen:X{1,3,4}                       subalgebra generated by elements

#ifndef INCLUDE_AISR_CATALOG_HPP_
#define INCLUDE_AISR_CATALOG_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aisr/constructions.hpp"
#include "aisr/criteria.hpp"
#include "aisr/enumeration.hpp"
#include "aisr/evaluator.hpp"
#include "aisr/morphism_search.hpp"
#include "aisr/parse.hpp"
#include "aisr/tables.hpp"

namespace aisr {

enum class BasisStatus { finitely_based, nonfinitely_based, external };

inline std::string_view status_name(BasisStatus s) {
  switch (s) {
    case BasisStatus::finitely_based: return "finitely-based";
    case BasisStatus::nonfinitely_based: return "nonfinitely-based";
    case BasisStatus::external: return "external";
  }
  return "?";
}

inline std::optional<BasisStatus> parse_status(std::string_view s) {
  for (auto st : {BasisStatus::finitely_based, BasisStatus::nonfinitely_based,
                  BasisStatus::external}) {
    if (s == status_name(st)) {
      return st;
    }
  }
  return std::nullopt;
}

enum class ClaimKind {
  isomorphic,   // args[0] ≅ args[1]
  subdirect,    // args[0] is a subdirect product of args[1] and args[2]
  embeds,       // args[0] embeds in args[1]
  flat_group,   // args[0] is the flat extension of an abelian group
  not_flat,     // args[0] is not flat
};

/// A structural assertion over algebra references.
struct Claim {
  ClaimKind kind;
  std::vector<std::string> args;
  std::string context;  // where the assertion is used

  std::string str() const {
    switch (kind) {
      case ClaimKind::isomorphic: return args[0] + " ≅ " + args[1];
      case ClaimKind::subdirect:
        return args[0] + " subdirect in " + args[1] + " x " + args[2];
      case ClaimKind::embeds: return args[0] + " embeds in " + args[1];
      case ClaimKind::flat_group:
        return args[0] + " is a flat extension of an abelian group";
      case ClaimKind::not_flat: return args[0] + " is not flat";
    }
    return "?";
  }
};

struct CatalogEntry {
  std::string name;
  FiniteAiSemiring algebra;
  BasisStatus status = BasisStatus::external;
  std::optional<std::vector<Identity>> basis;
  std::vector<Claim> claims;
  std::string source;
  bool flat = false;
  bool height_one = false;
};

struct CatalogFilter {
  std::optional<std::size_t> order{};
  std::optional<bool> height_one{};
  std::optional<BasisStatus> status{};
  std::optional<bool> flat{};

  bool accepts(CatalogEntry const& e) const {
    return (!order || e.algebra.order() == *order) &&
           (!height_one || e.height_one == *height_one) &&
           (!status || e.status == *status) && (!flat || e.flat == *flat);
  }
};

struct ClaimResult {
  std::string entry;
  Claim claim;
  bool pass = false;
  std::string detail;
};

struct ClaimReport {
  std::vector<ClaimResult> results;
  bool all_pass = true;
};

/// Instances of a scheme in which each variable of `optional` may be
/// deleted; instances that would need an empty word are dropped.
inline std::vector<Identity> expand_optional(
    Identity const& scheme, std::vector<Variable> const& optional) {
  std::vector<Identity> out;
  std::size_t const k = optional.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::set<Variable> gone;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        gone.insert(optional[i]);
      }
    }
    bool empty = false;
    auto strip = [&](Term const& t) {
      std::vector<Word> words;
      for (auto const& w : t.words()) {
        std::vector<Variable> v;
        for (auto x : w.letters()) {
          if (!gone.count(x)) {
            v.push_back(x);
          }
        }
        if (v.empty()) {
          empty = true;
          return t;
        }
        words.emplace_back(std::move(v));
      }
      return Term(std::move(words));
    };
    Identity id{strip(scheme.lhs), strip(scheme.rhs)};
    if (!empty && std::find(out.begin(), out.end(), id) == out.end()) {
      out.push_back(std::move(id));
    }
  }
  return out;
}

namespace detail {

  inline constexpr int nonfinitely_based_height_one[] = {11, 13, 24, 25, 26,
                                                         28, 31, 49, 50};

  struct BasisText {
    int index;
    std::vector<const char*> identities;
  };

  inline std::vector<BasisText> const& basis_texts() {
    static std::vector<BasisText> const texts = {
        {4,
         {"x1x2x3 ≈ x1x2x3 + x4", "x^2 ≈ x^2 + y", "x + xy ≈ x^2",
          "x + yx ≈ x^2", "x1x2 + x3x4 ≈ x1x2 + x3x4 + x1x4"}},
        {14,
         {"xy ≈ yx", "xy ≈ xy + x^2", "x + xy ≈ x^3", "x1x2x3 ≈ x1x2x3 + x4",
          "xy + yz ≈ xy + yz + xz"}},
        {20,
         {"x^4 ≈ x^2", "xy ≈ yx", "xy^2 ≈ xy^2 + x",
          "x1x2 + x3 + x4 ≈ x1x2 + x3 + x4 + x1x2x3x4"}},
        {15,
         {"xy ≈ yx", "xy ≈ x^2 + y^2", "xyz ≈ xyz + x", "x^2 + x ≈ x^3",
          "x1x2x3 + x4 ≈ x1x2x3x4"}},
        {41,
         {"xy + x ≈ xy + x^3", "yx + x ≈ yx + x^3",
          "x1y1z1 + x2y2 ≈ x1y1z1 + x2", "x1y1z1 + x2 ≈ x1y1z1 + x2 + x2y2",
          "x1y1 + x2y2 ≈ x1y1 + x2y2 + x1x2",
          "x1y1 + x2y2 ≈ x1y1 + x2y2 + x1y2"}},
        {42,
         {"x^4 ≈ x^3", "xy ≈ yx", "x^3 ≈ x + xy", "x^2 + yz ≈ x^2 + yz + xy",
          "x1x2x3 + x4 ≈ x1x2x3 + x4 + x4x5"}},
        {30,
         {"x^2y ≈ xy", "xyz ≈ yxz", "x + y^2 ≈ x + y^2 + y^2x^2",
          "x + yz ≈ x + yz + yx", "xy ≈ xy + y"}},
        {47,
         {"x^2y ≈ xy", "x1x2x3x4 ≈ x1x3x2x4", "x^2 ≈ x^2 + x",
          "x^2y^2 ≈ x^2y^2 + x^2", "x + y^2 ≈ x + y^2 + x^2y^2",
          "x + y^2 ≈ x + y^2 + y^2x^2", "x + yz ≈ x + yz + yx",
          "xy + zx ≈ zy + x^2"}},
        {48,
         {"x^2y ≈ xy", "xyz ≈ yxz", "x^2 ≈ x^2 + x",
          "x + y^2 ≈ x + y^2 + x^2y^2", "x + yz ≈ x + yz + yx",
          "x + xyz ≈ x + xyz + xy", "z + xyz ≈ z + xyz + yz"}},
    };
    return texts;
  }

  /// The S_(4,12) basis; schemes carry their optional variables.
  inline std::vector<Identity> basis_12() {
    struct Scheme {
      const char* text;
      std::vector<const char*> optional;
    };
    static std::vector<Scheme> const schemes = {
        {"x^2 ≈ x^4", {}},
        {"x^2y^2 ≈ (xy)^2", {}},
        {"x^2y^2 ≈ y^2x^2", {}},
        {"x^2 ≈ x^2 + x", {}},
        {"x^2y^2 ≈ x^2y^2 + x^2", {}},
        {"x + yx ≈ y^2x", {}},
        {"x + xy ≈ xy^2", {}},
        {"x + y^2 ≈ x + y^2 + y^2x^2", {}},
        {"xy^2 + z ≈ xy^2 + zy", {}},
        {"x^2y + z ≈ x^2y + xz", {}},
        {"x1^2x2 + x3x4^2 ≈ x1^2x2^2x3^2x4^2", {"x2", "x3"}},
        {"x1x2 + y1y2 ≈ x1x2 + y1y2 + x1y2", {}},
        {"x1x2 + x3x2x4 ≈ x1x2 + x3x2x4 + x1", {}},
        {"x1x2 + x3x1x4 ≈ x1x2 + x3x1x4 + x2", {}},
        {"x1x2 + y1x2y2 ≈ x1x2 + y1x2y2 + x1x2y2^2", {"x1", "y1"}},
        {"x1x2 + y1x1y2 ≈ x1x2 + y1x1y2 + y1^2x1x2", {"x2", "y2"}},
        {"x1x2 + x3x2x4 + x5 ≈ x1x2 + x3x2x4 + x5x2", {}},
        {"x1x2 + x3x1x4 + x5 ≈ x1x2 + x3x1x4 + x1x5", {}},
        {"x1x2 + y1x1y2x1y3 ≈ x1x2 + y1x1y2x1y3 + x1^2x2",
         {"x2", "y1", "y2", "y3"}},
        {"x1x2 + y1x2y2x2y3 ≈ x1x2 + y1x2y2x2y3 + x1x2^2",
         {"x1", "y1", "y2", "y3"}},
    };
    std::vector<Identity> out;
    for (auto const& s : schemes) {
      std::vector<Variable> opt;
      for (auto const* v : s.optional) {
        opt.push_back(parse_word(v).head());
      }
      for (auto& id : expand_optional(parse_identity(s.text), opt)) {
        out.push_back(std::move(id));
      }
    }
    return out;
  }

  /// Splits at commas outside parentheses and braces.
  inline std::vector<std::string> split_top(std::string const& s) {
    std::vector<std::string> out(1);
    int depth = 0;
    for (char c : s) {
      if (c == '(' || c == '{') {
        ++depth;
      } else if (c == ')' || c == '}') {
        --depth;
      }
      if (c == ',' && depth == 0) {
        out.emplace_back();
      } else {
        out.back() += c;
      }
    }
    return out;
  }

  inline std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s) {
      if (c != ' ' && c != '\t') {
        out += c;
      }
    }
    return out;
  }

}  // namespace detail

class Catalog {
 public:
  static Catalog const& instance() {
    static Catalog const c;
    return c;
  }

  std::vector<CatalogEntry> const& entries() const { return entries_; }

  /// Throws UnknownName.
  CatalogEntry const& get(std::string_view name) const {
    auto it = index_.find(detail::strip_spaces(name));
    if (it == index_.end()) {
      throw UnknownName("no catalog entry named '" + std::string(name) + "'");
    }
    return entries_[it->second];
  }

  bool contains(std::string_view name) const {
    return index_.count(detail::strip_spaces(name)) > 0;
  }

  std::vector<CatalogEntry const*> list(CatalogFilter const& f = {}) const {
    std::vector<CatalogEntry const*> out;
    for (auto const& e : entries_) {
      if (f.accepts(e)) {
        out.push_back(&e);
      }
    }
    return out;
  }

  /// Name of the entry isomorphic to `s`. The first in catalog order wins
  /// when several entries are isomorphic.
  std::optional<std::string> classify(FiniteAiSemiring const& s) const {
    if (s.order() > max_canonical_order) {
      return std::nullopt;
    }
    auto key = canonical_form(s);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (keys_[i] == key) {
        return entries_[i].name;
      }
    }
    return std::nullopt;
  }

  /// All entries isomorphic to `s`.
  std::vector<std::string> classify_all(FiniteAiSemiring const& s) const {
    std::vector<std::string> out;
    if (s.order() > max_canonical_order) {
      return out;
    }
    auto key = canonical_form(s);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (keys_[i] == key) {
        out.push_back(entries_[i].name);
      }
    }
    return out;
  }

  /// A catalog name or a constructor expression; throws UnknownName or
  /// ConstructionError.
  FiniteAiSemiring resolve(std::string_view ref) const {
    std::string const r = detail::strip_spaces(ref);
    if (r.empty() || r[0] != '@') {
      return get(r).algebra;
    }
    auto colon = r.find(':');
    if (colon == std::string::npos) {
      throw UnknownName("malformed reference '" + r + "'");
    }
    std::string const op = r.substr(1, colon - 1), arg = r.substr(colon + 1);
    if (op == "sc" || op == "s" || op == "mc" || op == "m") {
      WordSemiringSpec spec;
      spec.commutative = op == "sc" || op == "mc";
      spec.monoid = op == "mc" || op == "m";
      for (auto const& w : detail::split_top(arg)) {
        try {
          spec.words.push_back(parse_word(w));
        } catch (ParseError const& e) {
          throw ConstructionError("bad word '" + w + "': " + e.what());
        }
      }
      return word_semiring(spec);
    }
    if (op == "dual") {
      return dual(resolve(arg));
    }
    if (op == "ne") {
      return null_extension(resolve(arg));
    }
    if (op == "ie") {
      return idempotent_extension(resolve(arg));
    }
    if (op == "prod") {
      auto parts = detail::split_top(arg);
      if (parts.size() != 2) {
        throw ConstructionError("@prod needs two factors");
      }
      return direct_product(resolve(parts[0]), resolve(parts[1]));
    }
    if (op == "flatext") {
      if (arg.size() < 2 || (arg[0] != 'z' && arg[0] != 'Z') ||
          arg.find_first_not_of("0123456789", 1) != std::string::npos) {
        throw ConstructionError("@flatext expects zN");
      }
      auto n = std::stoul(arg.substr(1));
      return flat_from_semigroup(cyclic_group_with_zero(n),
                                 "flat(Z" + std::to_string(n) + ")");
    }
    if (op == "gen") {
      auto brace = arg.find('{');
      if (brace == std::string::npos || arg.back() != '}') {
        throw ConstructionError("@gen expects NAME{a,b,...}");
      }
      auto parent = resolve(arg.substr(0, brace));
      auto names =
          detail::split_top(arg.substr(brace + 1, arg.size() - brace - 2));
      return generated_subalgebra(parent, elements_named(parent, names))
          .algebra;
    }
    throw UnknownName("unknown constructor '@" + op + "'");
  }

  ClaimResult check(std::string const& entry, Claim const& c) const {
    ClaimResult r{entry, c, false, ""};
    try {
      std::vector<FiniteAiSemiring> a;
      for (auto const& ref : c.args) {
        a.push_back(resolve(ref));
      }
      switch (c.kind) {
        case ClaimKind::isomorphic:
          r.pass = find_isomorphism(a[0], a[1]).has_value();
          break;
        case ClaimKind::subdirect:
          r.pass = is_subdirect_embedding(a[0], a[1], a[2]).has_value();
          break;
        case ClaimKind::embeds:
          r.pass = find_embedding(a[0], a[1]).has_value();
          break;
        case ClaimKind::flat_group:
          r.pass = is_flat(a[0]) &&
                   is_abelian_group_with_zero(multiplicative_reduct(a[0]));
          break;
        case ClaimKind::not_flat:
          r.pass = !is_flat(a[0]);
          break;
      }
      r.detail = r.pass ? "holds" : "fails";
    } catch (Error const& e) {
      r.detail = e.what();
    }
    return r;
  }

  ClaimReport verify_all_claims() const {
    ClaimReport rep;
    for (auto const& e : entries_) {
      for (auto const& c : e.claims) {
        rep.results.push_back(check(e.name, c));
        rep.all_pass = rep.all_pass && rep.results.back().pass;
      }
    }
    return rep;
  }

  /// Order-3 census members satisfying a subdirect claim with the
  /// unknown factor in position 2; used to pin S5, S9, S13, S14, S15.
  static std::vector<std::size_t> pin_candidates(CensusResult const& census,
                                                 FiniteAiSemiring const& whole,
                                                 FiniteAiSemiring const& known) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < census.members.size(); ++i) {
      if (is_subdirect_embedding(whole, known, census.members[i])) {
        out.push_back(i);
      }
    }
    return out;
  }

 private:
  Catalog() {
    for (int k = 1; k <= 58; ++k) {
      bool nfb = std::find(std::begin(detail::nonfinitely_based_height_one),
                           std::end(detail::nonfinitely_based_height_one),
                           k) != std::end(detail::nonfinitely_based_height_one);
      add(tables::height_one(k),
          nfb ? BasisStatus::nonfinitely_based : BasisStatus::finitely_based,
          "height-one table of order four");
      entries_.back().height_one = true;
    }
    for (auto const& b : detail::basis_texts()) {
      std::vector<Identity> ids;
      for (auto const* t : b.identities) {
        ids.push_back(parse_identity(t));
      }
      entries_[static_cast<std::size_t>(b.index - 1)].basis = std::move(ids);
    }
    entries_[11].basis = detail::basis_12();

    add(tables::s7(), BasisStatus::external, "three-element flat semiring");
    for (auto const& t : tables::two_element) {
      add(tables::order_two(t), BasisStatus::external, "two-element table");
    }

    derive("S2", "S_(4,15)", {"1", "2", "3"});
    derive("S4", "S_(4,47)", {"1", "2", "3"});
    derive("S6", "S_(4,12)", {"2", "4"});
    derive("S10", "S_(4,20)", {"4"});

    auto const census = enumerate_ai_semirings(3, 1);
    pin(census, "S5", "S_(4,41)", "S2");
    pin(census, "S9", "S_(4,47)", "S4");
    pin(census, "S13", "S_(4,42)", "S2");
    pin(census, "S14", "S_(4,30)", "S4");
    pin(census, "S15", "S_(4,48)", "S4");

    add_claims();
    for (auto const& e : entries_) {
      keys_.push_back(canonical_form(e.algebra));
    }
  }

  void add(FiniteAiSemiring s, BasisStatus status, std::string source) {
    CatalogEntry e{s.name(), std::move(s), status, std::nullopt, {},
                   std::move(source)};
    e.flat = is_flat(e.algebra);
    e.height_one = false;
    index_[detail::strip_spaces(e.name)] = entries_.size();
    entries_.push_back(std::move(e));
  }

  void derive(std::string const& name, std::string const& parent,
              std::vector<std::string> const& seed) {
    auto const& p = get(parent).algebra;
    auto sub = generated_subalgebra(p, elements_named(p, seed)).algebra;
    std::string src = "subalgebra of " + parent + " generated by {";
    for (std::size_t i = 0; i < seed.size(); ++i) {
      src += (i ? "," : "") + seed[i];
    }
    add(sub.renamed(name), BasisStatus::external, src + "}");
  }

  void pin(CensusResult const& census, std::string const& name,
           std::string const& whole, std::string const& known) {
    auto c = pin_candidates(census, get(whole).algebra, get(known).algebra);
    if (c.size() != 1) {
      throw ConstructionError(name + ": " + std::to_string(c.size()) +
                              " order-3 candidates for " + whole +
                              " subdirect in " + known + " x " + name);
    }
    add(census.members[c[0]].renamed(name), BasisStatus::external,
        "order-3 census member " + census.members[c[0]].name() +
            ", the unique factor with " + whole + " subdirect in " + known +
            " x " + name);
  }

  void claim(std::string const& entry, ClaimKind kind,
             std::vector<std::string> args, std::string context) {
    entries_[index_.at(detail::strip_spaces(entry))].claims.push_back(
        Claim{kind, std::move(args), std::move(context)});
  }

  void add_claims() {
    using K = ClaimKind;
    claim("S_(4,14)", K::isomorphic, {"S_(4,14)", "S_(4,14)"}, "smoke test");

    claim("S7", K::isomorphic, {"S7", "@mc:a"}, "word semirings");
    claim("S7", K::isomorphic, {"S7", "@m:a"}, "word semirings");
    claim("S7", K::not_flat, {"@prod:S7,S7"}, "flat semirings");
    claim("T2", K::isomorphic, {"T2", "@s:a"}, "word semirings");

    claim("S_(4,4)", K::isomorphic, {"S_(4,4)", "@s:ab"}, "S_(4,4) basis");
    claim("S_(4,8)", K::isomorphic, {"S_(4,8)", "@sc:ab"}, "flat algebras");
    claim("S_(4,9)", K::isomorphic, {"S_(4,9)", "@sc:aaa"}, "flat algebras");
    claim("S_(4,37)", K::isomorphic, {"S_(4,37)", "@flatext:z3"},
          "flat algebras");
    claim("S_(4,37)", K::flat_group, {"S_(4,37)"}, "flat algebras");
    claim("S_(4,6)", K::subdirect, {"S_(4,6)", "S6", "S6"}, "flat algebras");

    claim("S_(4,20)", K::subdirect, {"S_(4,20)", "S10", "T2"},
          "S_(4,20) basis");
    // {1,4} is not closed (4·4 = 3); {1,2} is the copy of T2.
    claim("S_(4,20)", K::isomorphic, {"@gen:S_(4,20){1,2}", "T2"},
          "S_(4,20) basis");
    claim("S_(4,20)", K::isomorphic, {"@gen:S_(4,20){1,3,4}", "S10"},
          "S_(4,20) basis");

    claim("S_(4,15)", K::isomorphic, {"S_(4,15)", "@ie:S2"},
          "S_(4,15) basis");
    claim("S_(4,15)", K::isomorphic, {"@gen:S_(4,15){1,4}", "M2"},
          "S_(4,15) basis");
    claim("S_(4,15)", K::isomorphic, {"@gen:S_(4,15){1,2,3}", "S2"},
          "S_(4,15) basis");

    claim("S_(4,41)", K::subdirect, {"S_(4,41)", "S2", "S5"},
          "S_(4,41) basis");
    claim("S_(4,41)", K::isomorphic, {"@gen:S_(4,41){1,4}", "L2"},
          "S_(4,41) basis");
    claim("S_(4,41)", K::isomorphic, {"@gen:S_(4,41){1,2,3}", "S2"},
          "S_(4,41) basis");
    claim("S5", K::embeds, {"L2", "S5"}, "S_(4,41) basis");
    claim("S5", K::embeds, {"T2", "S5"}, "S_(4,41) basis");
    claim("S2", K::embeds, {"T2", "S2"}, "S_(4,41) basis");
    claim("S_(4,16)", K::isomorphic, {"@dual:S_(4,16)", "S_(4,41)"},
          "dual pairs");

    claim("S_(4,42)", K::subdirect, {"S_(4,42)", "S2", "S13"},
          "S_(4,42) basis");
    claim("S_(4,42)", K::isomorphic, {"@gen:S_(4,42){1,4}", "D2"},
          "S_(4,42) basis");
    claim("S_(4,42)", K::isomorphic, {"@gen:S_(4,42){1,2,3}", "S2"},
          "S_(4,42) basis");
    claim("S13", K::embeds, {"D2", "S13"}, "S_(4,42) basis");
    claim("S13", K::embeds, {"T2", "S13"}, "S_(4,42) basis");

    claim("S_(4,30)", K::subdirect, {"S_(4,30)", "S4", "S14"},
          "S_(4,30) basis");
    claim("S_(4,30)", K::isomorphic, {"@gen:S_(4,30){1,3}", "R2"},
          "S_(4,30) basis");
    claim("S_(4,30)", K::isomorphic, {"@gen:S_(4,30){1,2,4}", "S4"},
          "S_(4,30) basis");
    claim("S4", K::embeds, {"M2", "S4"}, "S_(4,30) basis");
    claim("S4", K::embeds, {"T2", "S4"}, "S_(4,30) basis");
    claim("S14", K::embeds, {"R2", "S14"}, "S_(4,30) basis");
    claim("S14", K::embeds, {"M2", "S14"}, "S_(4,30) basis");
    claim("S_(4,45)", K::isomorphic, {"S_(4,45)", "@dual:S_(4,30)"},
          "dual pairs");

    claim("S_(4,47)", K::subdirect, {"S_(4,47)", "S4", "S9"},
          "S_(4,47) basis");
    claim("S_(4,47)", K::isomorphic, {"@gen:S_(4,47){1,4}", "L2"},
          "S_(4,47) basis");
    claim("S_(4,47)", K::isomorphic, {"@gen:S_(4,47){1,2,3}", "S4"},
          "S_(4,47) basis");
    claim("S9", K::embeds, {"L2", "S9"}, "S_(4,47) basis");
    claim("S9", K::embeds, {"M2", "S9"}, "S_(4,47) basis");
    claim("S_(4,21)", K::isomorphic, {"@dual:S_(4,21)", "S_(4,47)"},
          "dual pairs");

    claim("S_(4,48)", K::subdirect, {"S_(4,48)", "S4", "S15"},
          "S_(4,48) basis");
    claim("S_(4,48)", K::isomorphic, {"@gen:S_(4,48){1,4}", "D2"},
          "S_(4,48) basis");
    claim("S_(4,48)", K::isomorphic, {"@gen:S_(4,48){1,2,3}", "S4"},
          "S_(4,48) basis");
    claim("S15", K::embeds, {"M2", "S15"}, "S_(4,48) basis");
    claim("S15", K::embeds, {"D2", "S15"}, "S_(4,48) basis");
    claim("S_(4,46)", K::isomorphic, {"@dual:S_(4,46)", "S_(4,48)"},
          "dual pairs");

    claim("S_(4,12)", K::subdirect, {"S_(4,12)", "S4", "S6"},
          "S_(4,12) basis");
    claim("S6", K::isomorphic, {"S6", "@dual:S4"}, "S_(4,12) basis");
  }

  std::vector<CatalogEntry> entries_;
  std::vector<CanonicalKey> keys_;
  std::map<std::string, std::size_t> index_;
};

inline Catalog const& catalog() { return Catalog::instance(); }

/// The algebra whose identities a criterion decides.
inline FiniteAiSemiring const& criterion_algebra(Criterion c) {
  return catalog().get(criterion_name(c)).algebra;
}

}  // namespace aisr

#endif  // INCLUDE_AISR_CATALOG_HPP_
