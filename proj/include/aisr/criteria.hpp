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

/// @file criteria.hpp
/// Syntactic decision rules for u ≈ u+q in L2, R2, M2, D2, N2, T2, S2, S4,
/// S6 and S10. Each verdict names the clause that decided it.

#ifndef INCLUDE_AISR_CRITERIA_HPP_
#define INCLUDE_AISR_CRITERIA_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aisr/term.hpp"

namespace aisr {

enum class Criterion { L2, R2, M2, D2, N2, T2, S2, S4, S6, S10 };

inline constexpr Criterion all_criteria[] = {
    Criterion::L2, Criterion::R2, Criterion::M2, Criterion::D2,
    Criterion::N2, Criterion::T2, Criterion::S2, Criterion::S4,
    Criterion::S6, Criterion::S10};

inline std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::L2: return "L2";
    case Criterion::R2: return "R2";
    case Criterion::M2: return "M2";
    case Criterion::D2: return "D2";
    case Criterion::N2: return "N2";
    case Criterion::T2: return "T2";
    case Criterion::S2: return "S2";
    case Criterion::S4: return "S4";
    case Criterion::S6: return "S6";
    case Criterion::S10: return "S10";
  }
  return "?";
}

inline std::optional<Criterion> parse_criterion(std::string_view name) {
  for (auto c : all_criteria) {
    if (criterion_name(c) == name) {
      return c;
    }
  }
  return std::nullopt;
}

struct CriterionVerdict {
  bool holds = false;
  std::string rule;
};

namespace detail {

  inline bool subset(std::set<Variable> const& a, std::set<Variable> const& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  inline std::size_t max_length(Term const& u) {
    std::size_t m = 0;
    for (auto const& w : u.words()) {
      m = std::max(m, w.length());
    }
    return m;
  }

  /// m(x, a) <= 1, and m(x, a) = 1 only if x is also the end letter of a.
  template <typename End>
  bool end_condition(Variable x, Word const& a, End end) {
    auto const k = a.multiplicity(x);
    return k == 0 || (k == 1 && end(a) == x);
  }

  template <typename End>
  bool end_property(std::vector<Word> const& words, End end) {
    for (auto const& a : words) {
      for (auto const& b : words) {
        if (!end_condition(end(a), b, end)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace detail

/// Property (T): for all summands u_i, u_j, m(t(u_i), u_j) <= 1, with
/// equality only when t(u_i) = t(u_j).
inline bool property_T(Term const& u) {
  return detail::end_property(u.words(),
                              [](Word const& w) { return w.tail(); });
}

/// Property (H): the head-side mirror of (T).
inline bool property_H(Term const& u) {
  return detail::end_property(u.words(),
                              [](Word const& w) { return w.head(); });
}

using DeltaFamily = std::vector<std::set<Variable>>;

/// Nonempty Z within c(v) meeting every c(v_i) in exactly one letter x,
/// with m(x, v_i) = 1. Listed in increasing bitmask order over c(v).
inline DeltaFamily delta(Term const& v) {
  auto const cs = v.content();
  std::vector<Variable> vars(cs.begin(), cs.end());
  if (vars.size() > 24) {
    throw Error("delta: too many variables");
  }
  DeltaFamily out;
  for (std::uint32_t mask = 1; mask < (1u << vars.size()); ++mask) {
    bool ok = true;
    for (auto const& w : v.words()) {
      std::size_t hits = 0;
      bool single = true;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (mask & (1u << i)) {
          auto const k = w.multiplicity(vars[i]);
          if (k > 0) {
            ++hits;
            single = single && k == 1;
          }
        }
      }
      if (hits != 1 || !single) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::set<Variable> z;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (mask & (1u << i)) {
          z.insert(vars[i]);
        }
      }
      out.push_back(std::move(z));
    }
  }
  return out;
}

inline CriterionVerdict holds_two_element(Criterion which,
                                          SimpleIdentity const& si) {
  auto const& u = si.base;
  auto const& q = si.extra;
  auto const mu = term_measures(u);
  switch (which) {
    case Criterion::L2:
      return mu.h.count(q.head()) ? CriterionVerdict{true, "head match"}
                                  : CriterionVerdict{false, "no head match"};
    case Criterion::R2:
      return mu.t.count(q.tail()) ? CriterionVerdict{true, "tail match"}
                                  : CriterionVerdict{false, "no tail match"};
    case Criterion::M2:
      return detail::subset(q.content(), mu.c)
                 ? CriterionVerdict{true, "c(q) within c(u)"}
                 : CriterionVerdict{false, "c(q) not within c(u)"};
    case Criterion::D2: {
      auto const cq = q.content();
      for (auto const& w : u.words()) {
        if (detail::subset(w.content(), cq)) {
          return {true, "c(q) contains some c(u_i)"};
        }
      }
      return {false, "c(q) contains no c(u_i)"};
    }
    case Criterion::N2:
      if (q.length() >= 2) {
        return {true, "l(q) >= 2"};
      }
      return u.contains(q) ? CriterionVerdict{true, "q is a summand"}
                           : CriterionVerdict{false, "q is a new letter"};
    case Criterion::T2:
      if (detail::max_length(u) >= 2) {
        return {true, "some l(u_i) >= 2"};
      }
      return u.contains(q)
                 ? CriterionVerdict{true, "all letters, q is a summand"}
                 : CriterionVerdict{false, "all letters, q not a summand"};
    default:
      throw Error("holds_two_element: not a two-element criterion");
  }
}

inline CriterionVerdict holds_S2(SimpleIdentity const& si) {
  auto const& u = si.base;
  auto const& q = si.extra;
  if (detail::max_length(u) >= 3) {
    return {true, "clause 1: some l(u_i) >= 3"};
  }
  std::set<Variable> c1, c2;
  for (auto const& w : u.words()) {
    (w.length() == 1 ? c1 : c2).insert(w.letters().begin(), w.letters().end());
  }
  for (auto x : c1) {
    if (c2.count(x)) {
      return {true, "clause 2: L1 and L2 share a variable"};
    }
  }
  if (q.length() == 1) {
    return u.contains(q)
               ? CriterionVerdict{true, "clause 3: trivial"}
               : CriterionVerdict{false, "no clause: l(q) = 1, q not a summand"};
  }
  if (q.length() == 2) {
    return detail::subset(q.content(), c2)
               ? CriterionVerdict{true, "clause 3: c(q) within c(L2(u))"}
               : CriterionVerdict{false, "no clause: c(q) not within c(L2(u))"};
  }
  return {false, "no clause: l(q) >= 3"};
}

namespace detail {

  template <typename Property>
  CriterionVerdict s4_like(SimpleIdentity const& si, Property prop,
                           const char* name) {
    auto const& u = si.base;
    auto const& q = si.extra;
    std::string const p(name);
    if (si.trivial()) {
      return {true, "trivial"};
    }
    if (!subset(q.content(), u.content())) {
      return {false, "c(q) not within c(u)"};
    }
    if (max_length(u) < 2) {
      return {false, "all l(u_i) = 1"};
    }
    if (!prop(u)) {
      return {true, "u lacks property " + p};
    }
    if (prop(term_sum(u, Term(q)))) {
      return {true, "property " + p + " preserved"};
    }
    return {false, "property " + p + " not preserved"};
  }

}  // namespace detail

inline CriterionVerdict holds_S4(SimpleIdentity const& si) {
  return detail::s4_like(si, property_T, "T");
}

inline CriterionVerdict holds_S6(SimpleIdentity const& si) {
  return detail::s4_like(si, property_H, "H");
}

/// S10: c(q) within c(u), and r(q) equals the symmetric difference of the
/// r(u_i) over some odd-size subset of the summands.
inline CriterionVerdict holds_S10(SimpleIdentity const& si) {
  auto const& u = si.base;
  auto const& q = si.extra;
  auto const cu = u.content();
  if (!detail::subset(q.content(), cu)) {
    return {false, "c(q) not within c(u)"};
  }
  std::vector<Variable> vars(cu.begin(), cu.end());
  if (vars.size() > 64) {
    throw Error("holds_S10: too many variables");
  }
  auto mask_of = [&](std::set<Variable> const& r) {
    std::uint64_t m = 0;
    for (auto x : r) {
      auto i = std::lower_bound(vars.begin(), vars.end(), x) - vars.begin();
      m |= std::uint64_t{1} << i;
    }
    return m;
  };
  std::set<std::uint64_t> gens;
  for (auto const& w : u.words()) {
    gens.insert(mask_of(w.odd_letters()));
  }
  // Reachable (xor, parity of subset size) pairs.
  std::set<std::pair<std::uint64_t, int>> reach{{0, 0}};
  for (auto g : gens) {
    auto next = reach;
    for (auto [m, par] : reach) {
      next.insert({m ^ g, par ^ 1});
    }
    reach = std::move(next);
  }
  auto const target = mask_of(q.odd_letters());
  if (reach.count({target, 1})) {
    return {true, "r(q) is an odd xor of r(u_i)"};
  }
  return {false, "r(q) is no odd xor of r(u_i)"};
}

inline CriterionVerdict holds(Criterion c, SimpleIdentity const& si) {
  switch (c) {
    case Criterion::S2: return holds_S2(si);
    case Criterion::S4: return holds_S4(si);
    case Criterion::S6: return holds_S6(si);
    case Criterion::S10: return holds_S10(si);
    default: return holds_two_element(c, si);
  }
}

/// All words of length 1..max_length over the first `letters` of x, y, z,
/// ... in shortlex order.
inline std::vector<Word> all_words(std::size_t letters,
                                   std::size_t max_length) {
  std::vector<Word> out;
  std::vector<std::vector<Variable>> layer{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Variable>> next;
    for (auto const& w : layer) {
      for (std::size_t i = 0; i < letters; ++i) {
        auto v = w;
        v.emplace_back(static_cast<char>('x' + i));
        next.push_back(std::move(v));
      }
    }
    for (auto const& v : next) {
      out.emplace_back(v);
    }
    layer = std::move(next);
  }
  return out;
}

/// Calls visit(si) for every u ≈ u+q with u a sum of 1..max_summands
/// distinct words and q any word, words drawn from all_words(letters,
/// max_length).
template <class Visit>
void for_each_simple_identity(std::size_t max_summands, std::size_t letters,
                              std::size_t max_length, Visit&& visit) {
  auto const words = all_words(letters, max_length);
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!pick.empty()) {
      std::vector<Word> ws;
      for (auto i : pick) {
        ws.push_back(words[i]);
      }
      Term const u(std::move(ws));
      for (auto const& q : words) {
        visit(SimpleIdentity{u, q});
      }
    }
    if (pick.size() == max_summands) {
      return;
    }
    for (std::size_t i = from; i < words.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace aisr

#endif  // INCLUDE_AISR_CRITERIA_HPP_
