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

/// @file evaluator.hpp
/// Exact identity checking in a finite ai-semiring by scanning every
/// assignment of the variables.

#ifndef INCLUDE_AISR_EVALUATOR_HPP_
#define INCLUDE_AISR_EVALUATOR_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aisr/parse.hpp"
#include "aisr/semiring.hpp"
#include "aisr/term.hpp"

namespace aisr {

using Assignment = std::map<Variable, Element>;

inline constexpr std::uint64_t assignment_budget = 10'000'000;

inline Element eval_word(FiniteAiSemiring const& s, Word const& w,
                         Assignment const& a) {
  std::optional<Element> acc;
  for (auto x : w.letters()) {
    auto it = a.find(x);
    if (it == a.end()) {
      throw MissingVariable("assignment does not define " + x.str());
    }
    if (it->second >= s.order()) {
      throw MissingVariable("assignment of " + x.str() + " is out of range");
    }
    acc = acc ? s.mul(*acc, it->second) : it->second;
  }
  return *acc;
}

inline Element eval_term(FiniteAiSemiring const& s, Term const& t,
                         Assignment const& a) {
  std::optional<Element> acc;
  for (auto const& w : t.words()) {
    Element v = eval_word(s, w, a);
    acc = acc ? s.add(*acc, v) : v;
  }
  return *acc;
}

namespace detail {

  /// Term with variables replaced by positions in a fixed variable list.
  struct CompiledTerm {
    std::vector<std::vector<std::size_t>> words;

    CompiledTerm(Term const& t, std::vector<Variable> const& vars) {
      for (auto const& w : t.words()) {
        std::vector<std::size_t> cw;
        for (auto x : w.letters()) {
          cw.push_back(static_cast<std::size_t>(
              std::lower_bound(vars.begin(), vars.end(), x) - vars.begin()));
        }
        words.push_back(std::move(cw));
      }
    }

    Element eval(FiniteAiSemiring const& s,
                 std::vector<Element> const& val) const {
      Element acc = 0;
      bool first = true;
      for (auto const& w : words) {
        Element p = val[w[0]];
        for (std::size_t i = 1; i < w.size(); ++i) {
          p = s.mul(p, val[w[i]]);
        }
        acc = first ? p : s.add(acc, p);
        first = false;
      }
      return acc;
    }
  };

}  // namespace detail

/// Lexicographically first failing assignment (the least variable is the
/// most significant digit), or none if the identity holds.
/// Throws BudgetExceeded when n^v exceeds the assignment budget.
inline std::optional<Assignment> counterexample(FiniteAiSemiring const& s,
                                                Identity const& id) {
  auto const var_set = id.variables();
  std::vector<Variable> vars(var_set.begin(), var_set.end());
  std::size_t const n = s.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    total *= n;
    if (total > assignment_budget) {
      throw BudgetExceeded("budget exceeded: " + std::to_string(n) + "^" +
                           std::to_string(vars.size()) +
                           " assignments is more than " +
                           std::to_string(assignment_budget));
    }
  }
  detail::CompiledTerm const lhs(id.lhs, vars), rhs(id.rhs, vars);
  std::vector<Element> val(vars.size(), 0);
  for (;;) {
    if (lhs.eval(s, val) != rhs.eval(s, val)) {
      Assignment a;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        a[vars[i]] = val[i];
      }
      return a;
    }
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++val[i] < n) {
        break;
      }
      val[i] = 0;
      if (i == 0) {
        return std::nullopt;
      }
    }
    if (vars.empty()) {
      return std::nullopt;
    }
  }
}

inline bool satisfies(FiniteAiSemiring const& s, Identity const& id) {
  return !counterexample(s, id).has_value();
}

inline bool satisfies(FiniteAiSemiring const& s, SimpleIdentity const& si) {
  return satisfies(s, si.identity());
}

struct IdentityVerdict {
  Identity identity;
  bool holds = true;
  std::optional<Assignment> witness;
};

struct BasisReport {
  std::vector<IdentityVerdict> verdicts;
  bool all_hold = true;
};

inline BasisReport check_basis(FiniteAiSemiring const& s,
                               std::vector<Identity> const& ids) {
  BasisReport report;
  for (auto const& id : ids) {
    auto w = counterexample(s, id);
    report.verdicts.push_back({id, !w.has_value(), w});
    report.all_hold = report.all_hold && !w.has_value();
  }
  return report;
}

/// "x=3, y=4" using the algebra's display names.
inline std::string describe(FiniteAiSemiring const& s, Assignment const& a) {
  std::string out;
  for (auto const& [x, e] : a) {
    if (!out.empty()) {
      out += ", ";
    }
    out += x.str() + "=" + s.element_name(e);
  }
  return out;
}

}  // namespace aisr

#endif  // INCLUDE_AISR_EVALUATOR_HPP_
