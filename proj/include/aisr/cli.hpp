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

/// @file cli.hpp
/// The `aisr` command line. Exit codes: 0 success or "holds", 1 checked and
/// false, 2 usage or input error.
///
/// Wherever a semiring is expected, the argument is a path to a semiring
/// JSON file, a catalog name such as S_(4,20), or a constructor reference
/// such as @sc:ab (see catalog.hpp).

#ifndef INCLUDE_AISR_CLI_HPP_
#define INCLUDE_AISR_CLI_HPP_

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "aisr/catalog.hpp"
#include "aisr/constructions.hpp"
#include "aisr/criteria.hpp"
#include "aisr/derivation.hpp"
#include "aisr/enumeration.hpp"
#include "aisr/evaluator.hpp"
#include "aisr/json_io.hpp"
#include "aisr/morphism_search.hpp"

namespace aisr::cli {

enum ExitCode : int { ok = 0, no = 1, usage = 2 };

namespace detail {

  inline bool looks_like_file(std::string const& ref) {
    if (ref.empty() || ref[0] == '@') {
      return false;
    }
    std::error_code ec;
    return std::filesystem::is_regular_file(ref, ec) ||
           std::filesystem::path(ref).extension() == ".json";
  }

  inline FiniteAiSemiring load(std::string const& ref) {
    return looks_like_file(ref) ? load_semiring(ref) : catalog().resolve(ref);
  }

  inline std::vector<Identity> read_identities(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw IoError("cannot read " + path);
    }
    std::vector<Identity> out;
    std::string line;
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      out.push_back(parse_identity(line));
    }
    return out;
  }

  inline Json names_json(FiniteAiSemiring const& s,
                         std::vector<Element> const& v) {
    Json a = Json::array();
    for (auto e : v) {
      a.push_back(s.element_name(e));
    }
    return a;
  }

  inline void print_table(std::ostream& out, FiniteAiSemiring const& s,
                          bool mul, const char* symbol) {
    std::size_t w = 1;
    for (auto const& e : s.elements()) {
      w = std::max(w, e.size());
    }
    auto const width = static_cast<int>(w + 1);
    out << std::setw(width) << symbol << " |";
    for (auto const& e : s.elements()) {
      out << std::setw(width) << e;
    }
    out << "\n" << std::string(w + 3 + s.order() * (w + 1), '-') << "\n";
    for (Element a = 0; a < s.order(); ++a) {
      out << std::setw(width) << s.element_name(a) << " |";
      for (Element b = 0; b < s.order(); ++b) {
        out << std::setw(width)
            << s.element_name(mul ? s.mul(a, b) : s.add(a, b));
      }
      out << "\n";
    }
  }

  inline Json entry_json(CatalogEntry const& e) {
    return Json{{"name", e.name},
                {"order", e.algebra.order()},
                {"status", status_name(e.status)},
                {"height_one", e.height_one},
                {"flat", e.flat},
                {"has_basis", e.basis.has_value()},
                {"source", e.source}};
  }

  inline Json claim_json(ClaimResult const& r) {
    return Json{{"entry", r.entry},
                {"claim", r.claim.str()},
                {"context", r.claim.context},
                {"pass", r.pass},
                {"detail", r.detail}};
  }

  /// Holds the parsed options of every subcommand.
  struct Options {
    bool json = false;
    std::string a, b, c;
    std::vector<std::string> identities;
    std::string basis_file;
    bool catalog_basis = false;
    std::size_t order = 0;
    bool height1 = false;
    bool count_only = false;
    std::string out_dir;
    std::size_t workers = 0;
    std::string kind;
    std::vector<std::string> args;
    std::string words, group, table, name, out_file;
    std::string criterion;
    bool oracle = false;
    std::string status;
    bool flat = false;
    std::optional<std::size_t> list_order;
  };

}  // namespace detail

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int validate(detail::Options const& o) {
    TableRows add, mul;
    std::string name = o.a;
    if (detail::looks_like_file(o.a)) {
      auto j = read_json_file(o.a);
      if (!j.is_object()) {
        throw IoError("semiring JSON must be an object");
      }
      add = aisr::detail::table_from_json(j, "add");
      mul = aisr::detail::table_from_json(j, "mul");
      name = j.value("name", o.a);
    } else {
      auto s = catalog().resolve(o.a);
      add = s.add_rows();
      mul = s.mul_rows();
      name = s.name();
    }
    auto r = aisr::validate(add, mul);
    if (o.json) {
      auto j = to_json(r);
      j["name"] = name;
      j["order"] = add.size();
      out_ << j.dump(2) << "\n";
    } else if (r.valid) {
      out_ << name << ": valid ai-semiring of order " << add.size() << "\n";
    } else {
      out_ << name << ": invalid: " << aisr::detail::describe(r) << "\n";
    }
    return r.valid ? ok : no;
  }

  int enumerate(detail::Options const& o) {
    if (o.order < 1 || o.order > 5) {
      throw UnknownName("--order must be in 1..5");
    }
    auto c = enumerate_ai_semirings(o.order, o.workers);
    std::size_t const count = o.height1 ? c.height_one.size() : c.total();
    if (!o.out_dir.empty()) {
      write_census(c, o.out_dir, o.height1);
    }
    if (o.json) {
      Json j{{"order", c.order},
             {"count", count},
             {"total", c.total()},
             {"height_one", c.height_one.size()},
             {"semilattices", c.semilattices},
             {"workers", c.workers},
             {"seconds", c.seconds}};
      if (!o.count_only) {
        Json members = Json::array();
        auto add = [&](std::size_t i) {
          members.push_back(
              Json{{"name", c.members[i].name()}, {"key", to_hex(c.keys[i])}});
        };
        if (o.height1) {
          for (auto i : c.height_one) {
            add(i);
          }
        } else {
          for (std::size_t i = 0; i < c.total(); ++i) {
            add(i);
          }
        }
        j["members"] = members;
      }
      out_ << j.dump(2) << "\n";
      return ok;
    }
    out_ << count << "\n";
    if (!o.count_only) {
      auto line = [&](std::size_t i) {
        out_ << c.members[i].name() << " " << to_hex(c.keys[i]) << "\n";
      };
      if (o.height1) {
        for (auto i : c.height_one) {
          line(i);
        }
      } else {
        for (std::size_t i = 0; i < c.total(); ++i) {
          line(i);
        }
      }
    }
    return ok;
  }

  int check(detail::Options const& o) {
    auto s = detail::load(o.a);
    std::vector<Identity> ids;
    for (auto const& t : o.identities) {
      ids.push_back(parse_identity(t));
    }
    if (!o.basis_file.empty()) {
      for (auto& id : detail::read_identities(o.basis_file)) {
        ids.push_back(std::move(id));
      }
    }
    if (o.catalog_basis) {
      auto const& e = catalog().get(o.a);
      if (!e.basis) {
        throw UnknownName(e.name + " has no basis in the catalog");
      }
      ids.insert(ids.end(), e.basis->begin(), e.basis->end());
    }
    if (ids.empty()) {
      throw UnknownName("nothing to check: give --identity or --basis");
    }
    auto r = check_basis(s, ids);
    if (o.json) {
      Json v = Json::array();
      for (auto const& x : r.verdicts) {
        v.push_back(to_json(s, x));
      }
      out_ << Json{{"semiring", s.name()},
                   {"all_hold", r.all_hold},
                   {"verdicts", v}}
                  .dump(2)
           << "\n";
    } else {
      for (auto const& x : r.verdicts) {
        out_ << (x.holds ? "holds: " : "fails: ") << to_string(x.identity);
        if (x.witness) {
          out_ << "  [" << describe(s, *x.witness) << "]";
        }
        out_ << "\n";
      }
    }
    return r.all_hold ? ok : no;
  }

  int morphism(detail::Options const& o, std::string const& what) {
    auto s = detail::load(o.a);
    auto t = detail::load(o.b);
    std::optional<Morphism> m;
    std::string target = t.name();
    if (what == "isomorphic") {
      m = find_isomorphism(s, t);
    } else if (what == "embeds") {
      m = find_embedding(s, t);
    } else {
      auto u = detail::load(o.c);
      target = t.name() + " x " + u.name();
      m = is_subdirect_embedding(s, t, u);
    }
    if (o.json) {
      Json j{{what, m.has_value()}, {"source", s.name()}, {"target", target}};
      if (m) {
        j["morphism"] = to_json(*m);
      }
      out_ << j.dump(2) << "\n";
    } else if (m) {
      out_ << s.name() << " -> " << target << ":";
      for (Element a = 0; a < s.order(); ++a) {
        out_ << " " << s.element_name(a) << "->"
             << m->target.element_name(m->map[a]);
      }
      out_ << "\n";
    } else {
      out_ << "no " << (what == "isomorphic"   ? "isomorphism"
                        : what == "embeds"     ? "embedding"
                                               : "subdirect embedding")
           << " from " << s.name() << " to " << target << "\n";
    }
    return m ? ok : no;
  }

  int construct(detail::Options const& o) {
    auto const& k = o.kind;
    auto need = [&](std::size_t n) {
      if (o.args.size() != n) {
        throw UnknownName("construct " + k + " expects " + std::to_string(n) +
                          " semiring argument" + (n == 1 ? "" : "s"));
      }
    };
    std::optional<FiniteAiSemiring> s;
    if (k == "sc" || k == "s" || k == "mc" || k == "m") {
      if (o.words.empty()) {
        throw UnknownName("construct " + k + " needs --words");
      }
      s = catalog().resolve("@" + k + ":" + o.words);
    } else if (k == "flat-ext") {
      if (!o.group.empty() == !o.table.empty()) {
        throw UnknownName("construct flat-ext needs --group zN or --table FILE");
      }
      if (!o.group.empty()) {
        s = catalog().resolve("@flatext:" + o.group);
      } else {
        auto j = read_json_file(o.table);
        std::vector<std::string> names;
        if (j.contains("elements")) {
          names = j["elements"].get<std::vector<std::string>>();
        }
        s = flat_from_semigroup(FiniteSemigroup::from_rows(
            names, aisr::detail::table_from_json(j, "mul")));
      }
    } else if (k == "ne" || k == "ie" || k == "dual") {
      need(1);
      auto base = detail::load(o.args[0]);
      s = k == "ne"   ? null_extension(base)
          : k == "ie" ? idempotent_extension(base)
                      : dual(base);
    } else if (k == "product") {
      need(2);
      s = direct_product(detail::load(o.args[0]), detail::load(o.args[1]));
    } else if (k == "sub") {
      if (o.args.size() < 2) {
        throw UnknownName("construct sub expects a semiring and elements");
      }
      auto base = detail::load(o.args[0]);
      std::vector<std::string> names(o.args.begin() + 1, o.args.end());
      s = generated_subalgebra(base, elements_named(base, names)).algebra;
    } else {
      throw UnknownName("unknown construction '" + k + "'");
    }
    if (!o.name.empty()) {
      s = s->renamed(o.name);
    }
    if (!o.out_file.empty()) {
      write_json_file(o.out_file, to_json(*s));
    }
    out_ << to_json(*s).dump(2) << "\n";
    return ok;
  }

  int criteria(detail::Options const& o) {
    auto id = parse_identity(o.a);
    std::vector<SimpleIdentity> instances;
    if (auto si = as_simple(id)) {
      instances.push_back(*si);
    } else {
      instances = normalize_identity(id);
    }
    std::vector<Criterion> which;
    if (o.criterion.empty() || o.criterion == "all") {
      which.assign(std::begin(all_criteria), std::end(all_criteria));
    } else if (auto c = parse_criterion(o.criterion)) {
      which.push_back(*c);
    } else {
      throw UnknownName("unknown criterion '" + o.criterion + "'");
    }
    bool all = true, agree = true;
    Json results = Json::array();
    for (auto c : which) {
      bool holds_all = true;
      std::string rule = "all instances hold";
      for (auto const& si : instances) {
        auto v = holds(c, si);
        if (!v.holds) {
          holds_all = false;
          rule = v.rule;
          break;
        }
        if (instances.size() == 1) {
          rule = v.rule;
        }
      }
      all = all && holds_all;
      Json r{{"criterion", criterion_name(c)},
             {"holds", holds_all},
             {"rule", rule}};
      std::optional<bool> oracle;
      if (o.oracle) {
        oracle = satisfies(criterion_algebra(c), id);
        r["oracle"] = *oracle;
        r["agrees"] = *oracle == holds_all;
        agree = agree && *oracle == holds_all;
      }
      if (!o.json) {
        out_ << criterion_name(c) << ": " << (holds_all ? "holds" : "fails")
             << " (" << rule << ")";
        if (oracle) {
          out_ << ", oracle " << (*oracle ? "holds" : "fails")
               << (*oracle == holds_all ? "" : "  DISAGREES");
        }
        out_ << "\n";
      }
      results.push_back(std::move(r));
    }
    if (o.json) {
      Json inst = Json::array();
      for (auto const& si : instances) {
        inst.push_back(to_string(si));
      }
      Json j{{"identity", to_string(id)},
             {"instances", inst},
             {"all_hold", all},
             {"results", results}};
      if (o.oracle) {
        j["oracle_agrees"] = agree;
      }
      out_ << j.dump(2) << "\n";
    }
    return all && agree ? ok : no;
  }

  int nfb(detail::Options const& o) {
    auto s = detail::load(o.a);
    auto r = nfb_witness(s);
    auto cyc = cyclic_elements(s);
    std::vector<Element> non;
    for (Element a = 0; a < s.order(); ++a) {
      if (std::find(cyc.begin(), cyc.end(), a) == cyc.end()) {
        non.push_back(a);
      }
    }
    if (o.json) {
      out_ << Json{{"semiring", s.name()},
                   {"noncyclic", detail::names_json(s, non)},
                   {"noncyclic_order_ideal", r.noncyclic_order_ideal},
                   {"index", semiring_index(s)},
                   {"s7_embedding",
                    r.s7_embedding ? to_json(*r.s7_embedding) : Json(nullptr)},
                   {"conclusion", r.conclusion}}
                  .dump(2)
           << "\n";
    } else {
      out_ << s.name() << ": noncyclic elements "
           << (r.noncyclic_order_ideal ? "form" : "do not form")
           << " an order ideal; S7 "
           << (r.s7_embedding ? "embeds" : "does not embed") << "; "
           << (r.conclusion ? "nonfinitely based" : "no witness") << "\n";
    }
    return r.conclusion ? ok : no;
  }

  int catalog_list(detail::Options const& o) {
    CatalogFilter f;
    f.order = o.list_order;
    if (o.height1) {
      f.height_one = true;
    }
    if (o.flat) {
      f.flat = true;
    }
    if (!o.status.empty()) {
      f.status = parse_status(o.status);
      if (!f.status) {
        throw UnknownName("unknown status '" + o.status + "'");
      }
    }
    auto es = catalog().list(f);
    if (o.json) {
      Json a = Json::array();
      for (auto const* e : es) {
        a.push_back(detail::entry_json(*e));
      }
      out_ << a.dump(2) << "\n";
    } else {
      for (auto const* e : es) {
        out_ << e->name << "  order " << e->algebra.order() << "  "
             << status_name(e->status) << (e->flat ? "  flat" : "")
             << (e->basis ? "  basis" : "") << "\n";
      }
    }
    return ok;
  }

  int catalog_show(detail::Options const& o) {
    auto const& e = catalog().get(o.a);
    if (o.json) {
      auto j = to_json(e.algebra);
      auto meta = detail::entry_json(e);
      for (auto it = meta.begin(); it != meta.end(); ++it) {
        if (it.key() != "name") {
          j[it.key()] = it.value();
        }
      }
      Json basis = Json::array();
      if (e.basis) {
        for (auto const& id : *e.basis) {
          basis.push_back(to_string(id));
        }
      }
      j["basis"] = e.basis ? basis : Json(nullptr);
      Json claims = Json::array();
      for (auto const& c : e.claims) {
        claims.push_back(c.str());
      }
      j["claims"] = claims;
      out_ << j.dump(2) << "\n";
      return ok;
    }
    out_ << e.name << " (order " << e.algebra.order() << ", "
         << status_name(e.status) << ")\n"
         << e.source << "\n\n";
    detail::print_table(out_, e.algebra, false, "+");
    out_ << "\n";
    detail::print_table(out_, e.algebra, true, "*");
    if (e.basis) {
      out_ << "\nbasis:\n";
      for (auto const& id : *e.basis) {
        out_ << "  " << to_string(id) << "\n";
      }
    }
    if (!e.claims.empty()) {
      out_ << "\nclaims:\n";
      for (auto const& c : e.claims) {
        out_ << "  " << c.str() << "\n";
      }
    }
    return ok;
  }

  int catalog_verify(detail::Options const& o) {
    auto rep = catalog().verify_all_claims();
    bool all = rep.all_pass;
    Json bases = Json::array();
    for (auto const& e : catalog().entries()) {
      if (e.basis) {
        auto r = check_basis(e.algebra, *e.basis);
        all = all && r.all_hold;
        bases.push_back(Json{{"name", e.name},
                             {"identities", e.basis->size()},
                             {"holds", r.all_hold}});
        if (!o.json) {
          out_ << (r.all_hold ? "PASS" : "FAIL") << "  basis of " << e.name
               << " (" << e.basis->size() << " identities)\n";
        }
      }
    }
    if (o.json) {
      Json claims = Json::array();
      for (auto const& r : rep.results) {
        claims.push_back(detail::claim_json(r));
      }
      out_ << Json{{"all_pass", all}, {"claims", claims}, {"bases", bases}}
                  .dump(2)
           << "\n";
    } else {
      for (auto const& r : rep.results) {
        out_ << (r.pass ? "PASS" : "FAIL") << "  " << r.claim.str();
        if (!r.pass) {
          out_ << "  (" << r.detail << ")";
        }
        out_ << "\n";
      }
    }
    return all ? ok : no;
  }

  int cert_verify(detail::Options const& o) {
    auto c = load_certificate(o.a);
    auto v = verify_certificate(c);
    if (o.json) {
      out_ << Json{{"valid", v.valid},
                   {"failed_step",
                    v.failed_step ? Json(*v.failed_step) : Json(nullptr)},
                   {"message", v.message},
                   {"conclusion", to_string(c.conclusion())},
                   {"steps", c.steps.size()}}
                  .dump(2)
           << "\n";
    } else {
      out_ << (v.valid ? "valid: " : "invalid: ") << v.message << "\n";
      if (v.valid) {
        out_ << "derives " << to_string(c.conclusion()) << "\n";
      }
    }
    return v.valid ? ok : no;
  }

  int classify(detail::Options const& o) {
    auto s = detail::load(o.a);
    auto name = catalog().classify(s);
    if (o.json) {
      out_ << Json{{"semiring", s.name()},
                   {"catalog", name ? Json(*name) : Json(nullptr)}}
                  .dump(2)
           << "\n";
    } else {
      out_ << s.name() << ": " << (name ? *name : "not in the catalog")
           << "\n";
    }
    return name ? ok : no;
  }

  void error(std::string const& msg, bool json) {
    err_ << "aisr: " << msg << "\n";
    if (json) {
      out_ << Json{{"error", msg}}.dump(2) << "\n";
    }
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

/// Runs one command; `args` excludes the program name.
inline int run(std::vector<std::string> const& args, std::ostream& out,
               std::ostream& err) {
  detail::Options o;
  CLI::App app{"Workbench for finite additively idempotent semirings", "aisr"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON");
  app.footer(
      "A SEMIRING argument is a JSON file, a catalog name (S_(4,20), S7, T2) "
      "or a reference such as @sc:ab, @dual:S_(4,41), @prod:S10,T2.\n"
      "AISR_WORKERS sets the enumeration worker count (default: number of "
      "available processors).\nExit codes: 0 holds, 1 fails, 2 usage or "
      "input error.");

  auto* validate = app.add_subcommand("validate", "Check the ai-semiring laws");
  validate->add_option("semiring", o.a, "SEMIRING")->required();

  auto* enumerate =
      app.add_subcommand("enumerate", "List ai-semirings of an order");
  enumerate->add_option("--order", o.order, "Order (1..5)")->required();
  enumerate->add_flag("--height1", o.height1, "Only additive height one");
  enumerate->add_flag("--count-only", o.count_only, "Print the count only");
  enumerate->add_option("--out", o.out_dir, "Write JSON files and index.txt");
  enumerate->add_option("--workers", o.workers, "Worker threads");

  auto* check = app.add_subcommand("check", "Check identities exhaustively");
  check->add_option("--semiring", o.a, "SEMIRING")->required();
  check->add_option("--identity", o.identities, "Identity such as \"xy = yx\"");
  check->add_option("--basis", o.basis_file, "File with one identity per line");
  check->add_flag("--catalog-basis", o.catalog_basis,
                  "Check the basis stored in the catalog");

  auto* iso = app.add_subcommand("iso", "Find an isomorphism");
  iso->add_option("a", o.a, "SEMIRING")->required();
  iso->add_option("b", o.b, "SEMIRING")->required();

  auto* embed = app.add_subcommand("embed", "Find an embedding of A into B");
  embed->add_option("a", o.a, "SEMIRING")->required();
  embed->add_option("b", o.b, "SEMIRING")->required();

  auto* subdirect =
      app.add_subcommand("subdirect", "Find a subdirect embedding of S in A x B");
  subdirect->add_option("s", o.a, "SEMIRING")->required();
  subdirect->add_option("a", o.b, "SEMIRING")->required();
  subdirect->add_option("b", o.c, "SEMIRING")->required();

  auto* construct = app.add_subcommand(
      "construct", "Build sc|s|mc|m|flat-ext|ne|ie|dual|product|sub");
  construct->add_option("kind", o.kind, "Construction")->required();
  construct->add_option("args", o.args, "SEMIRING arguments");
  construct->add_option("--words", o.words, "Comma-separated words");
  construct->add_option("--group", o.group, "zN for the cyclic group Z_N");
  construct->add_option("--table", o.table, "Semigroup JSON with \"mul\"");
  construct->add_option("--name", o.name, "Name of the result");
  construct->add_option("--out", o.out_file, "Also write the JSON here");

  auto* criteria =
      app.add_subcommand("criteria", "Decide an identity syntactically");
  criteria->add_option("identity", o.a, "Identity")->required();
  criteria->add_option("--criterion", o.criterion,
                       "L2 R2 M2 D2 N2 T2 S2 S4 S6 S10 or all");
  criteria->add_flag("--oracle", o.oracle,
                     "Compare with exhaustive evaluation");

  auto* nfb = app.add_subcommand("nfb-check", "Look for a nonfinite basis witness");
  nfb->add_option("semiring", o.a, "SEMIRING")->required();

  auto* classify = app.add_subcommand("classify", "Name the catalog entry");
  classify->add_option("semiring", o.a, "SEMIRING")->required();

  auto* cat = app.add_subcommand("catalog", "Named algebras");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List entries");
  cat_list->add_option("--order", o.list_order, "Order");
  cat_list->add_flag("--height1", o.height1, "Only height-one entries");
  cat_list->add_flag("--flat", o.flat, "Only flat entries");
  cat_list->add_option("--status", o.status,
                       "finitely-based, nonfinitely-based or external");
  auto* cat_show = cat->add_subcommand("show", "Show one entry");
  cat_show->add_option("name", o.a, "Catalog name")->required();
  auto* cat_verify =
      cat->add_subcommand("verify", "Check all claims and bases");

  auto* cert = app.add_subcommand("cert", "Derivation certificates");
  cert->require_subcommand(1);
  auto* cert_verify = cert->add_subcommand("verify", "Verify a certificate");
  cert_verify->add_option("file", o.a, "Certificate JSON")->required();

  std::vector<std::string> argv_store{"aisr"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) {
    argv.push_back(s.data());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return ok;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (CLI::ParseError const& e) {
    err << "aisr: " << e.what() << "\n\n" << app.help();
    return usage;
  }

  Runner r(out, err);
  try {
    if (*validate) return r.validate(o);
    if (*enumerate) return r.enumerate(o);
    if (*check) return r.check(o);
    if (*iso) return r.morphism(o, "isomorphic");
    if (*embed) return r.morphism(o, "embeds");
    if (*subdirect) return r.morphism(o, "subdirect");
    if (*construct) return r.construct(o);
    if (*criteria) return r.criteria(o);
    if (*nfb) return r.nfb(o);
    if (*classify) return r.classify(o);
    if (*cat_list) return r.catalog_list(o);
    if (*cat_show) return r.catalog_show(o);
    if (*cat_verify) return r.catalog_verify(o);
    if (*cert_verify) return r.cert_verify(o);
  } catch (Error const& e) {
    r.error(e.what(), o.json);
    return usage;
  } catch (nlohmann::json::exception const& e) {
    r.error(std::string("bad JSON input: ") + e.what(), o.json);
    return usage;
  }
  err << app.help();
  return usage;
}

}  // namespace aisr::cli

#endif  // INCLUDE_AISR_CLI_HPP_
