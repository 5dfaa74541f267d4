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

/// @file constructions.hpp
/// Flat semirings from 0-cancellative semigroups, word semirings, null and
/// idempotent extensions, cyclic elements and the S7 nonfinite-basis
/// witness.

#ifndef INCLUDE_AISR_CONSTRUCTIONS_HPP_
#define INCLUDE_AISR_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aisr/morphism_search.hpp"
#include "aisr/parse.hpp"
#include "aisr/semiring.hpp"
#include "aisr/tables.hpp"
#include "aisr/term.hpp"

namespace aisr {

class FiniteSemigroup {
 public:
  FiniteSemigroup(std::vector<std::string> elements,
                  std::vector<Element> table)
      : elements_(std::move(elements)), mul_(std::move(table)) {
    n_ = elements_.size();
    if (n_ == 0 || n_ > max_order || mul_.size() != n_ * n_) {
      throw MalformedTable("semigroup table does not match carrier size");
    }
    for (auto v : mul_) {
      if (v >= n_) {
        throw MalformedTable("semigroup table entry out of range");
      }
    }
    auto const n = static_cast<Element>(n_);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw InvalidSemiring("semigroup multiplication is not associative");
          }
        }
      }
    }
    for (Element z = 0; z < n && !zero_; ++z) {
      bool ok = true;
      for (Element a = 0; a < n && ok; ++a) {
        ok = mul(z, a) == z && mul(a, z) == z;
      }
      if (ok) {
        zero_ = z;
      }
    }
    for (Element e = 0; e < n && !identity_; ++e) {
      bool ok = true;
      for (Element a = 0; a < n && ok; ++a) {
        ok = mul(e, a) == a && mul(a, e) == a;
      }
      if (ok) {
        identity_ = e;
      }
    }
  }

  static FiniteSemigroup from_rows(std::vector<std::string> elements,
                                   TableRows const& mul) {
    std::size_t const n = mul.size();
    if (elements.empty()) {
      elements = default_element_names(n);
    }
    if (elements.size() != n) {
      throw MalformedTable("element names do not match table size");
    }
    return FiniteSemigroup(std::move(elements),
                           detail::flatten(mul, n, "multiplication"));
  }

  std::size_t order() const noexcept { return n_; }
  std::vector<std::string> const& elements() const noexcept {
    return elements_;
  }
  Element mul(Element a, Element b) const noexcept { return mul_[a * n_ + b]; }
  std::vector<Element> const& table() const noexcept { return mul_; }
  std::optional<Element> zero() const noexcept { return zero_; }
  std::optional<Element> identity() const noexcept { return identity_; }

 private:
  std::vector<std::string> elements_;
  std::vector<Element> mul_;
  std::size_t n_ = 0;
  std::optional<Element> zero_;
  std::optional<Element> identity_;
};

inline FiniteSemigroup multiplicative_reduct(FiniteAiSemiring const& s) {
  return FiniteSemigroup(
      s.elements(),
      std::vector<Element>(s.mul_table().begin(), s.mul_table().end()));
}

/// First (a, b, c) in lexicographic order with ab = ac != 0 and b != c, or
/// ba = ca != 0 and b != c.
inline std::optional<std::array<Element, 3>> zero_cancellativity_violation(
    FiniteSemigroup const& g) {
  if (!g.zero()) {
    throw ConstructionError("semigroup has no zero element");
  }
  Element const z = *g.zero();
  auto const n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (b == c) {
          continue;
        }
        if ((g.mul(a, b) == g.mul(a, c) && g.mul(a, b) != z) ||
            (g.mul(b, a) == g.mul(c, a) && g.mul(b, a) != z)) {
          return std::array<Element, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_zero_cancellative(FiniteSemigroup const& g) {
  return !zero_cancellativity_violation(g).has_value();
}

/// The flat semiring on G: a+a = a and a+b = 0 for a != b.
inline FiniteAiSemiring flat_from_semigroup(FiniteSemigroup const& g,
                                            std::string name = "flat") {
  if (auto v = zero_cancellativity_violation(g)) {
    auto const& e = g.elements();
    throw ConstructionError("semigroup is not 0-cancellative at (" +
                            e[(*v)[0]] + "," + e[(*v)[1]] + "," +
                            e[(*v)[2]] + ")");
  }
  std::size_t const n = g.order();
  Element const z = *g.zero();
  std::vector<Element> add(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = a == b ? static_cast<Element>(a) : z;
    }
  }
  return FiniteAiSemiring(std::move(name), g.elements(), std::move(add),
                          g.table());
}

/// Z_N with a zero adjoined; "0" is index 0, then e, g, g^2, ...
inline FiniteSemigroup cyclic_group_with_zero(std::size_t n) {
  if (n == 0 || n + 1 > max_order) {
    throw ConstructionError("cyclic group order out of range");
  }
  std::vector<std::string> names{"0", "e"};
  for (std::size_t i = 1; i < n; ++i) {
    names.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
  }
  std::size_t const m = n + 1;
  std::vector<Element> mul(m * m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mul[(i + 1) * m + (j + 1)] = static_cast<Element>((i + j) % n + 1);
    }
  }
  return FiniteSemigroup(std::move(names), std::move(mul));
}

/// G minus its zero is a commutative group.
inline bool is_abelian_group_with_zero(FiniteSemigroup const& g) {
  if (!g.zero() || g.order() < 2) {
    return false;
  }
  Element const z = *g.zero();
  auto const n = static_cast<Element>(g.order());
  std::optional<Element> e;
  for (Element c = 0; c < n && !e; ++c) {
    if (c == z) {
      continue;
    }
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) {
      ok = a == z || (g.mul(c, a) == a && g.mul(a, c) == a);
    }
    if (ok) {
      e = c;
    }
  }
  if (!e) {
    return false;
  }
  for (Element a = 0; a < n; ++a) {
    if (a == z) {
      continue;
    }
    bool has_inverse = false;
    for (Element b = 0; b < n; ++b) {
      if (b == z) {
        continue;
      }
      if (g.mul(a, b) == z || g.mul(a, b) != g.mul(b, a)) {
        return false;
      }
      has_inverse = has_inverse || g.mul(a, b) == *e;
    }
    if (!has_inverse) {
      return false;
    }
  }
  return true;
}

/// Multiplicative zero equal to the additive top, and a+b = top for all
/// distinct a, b.
inline bool is_flat(FiniteAiSemiring const& s) {
  Element const top = natural_order(s).top;
  auto const n = static_cast<Element>(s.order());
  for (Element a = 0; a < n; ++a) {
    if (s.mul(top, a) != top || s.mul(a, top) != top) {
      return false;
    }
    for (Element b = 0; b < n; ++b) {
      if (a != b && s.add(a, b) != top) {
        return false;
      }
    }
  }
  return true;
}

struct WordSemiringSpec {
  std::vector<Word> words;
  bool commutative = false;
  bool monoid = false;
};

namespace detail {

  using Letters = std::vector<Variable>;

  inline void sub_multisets(std::map<Variable, std::size_t> const& m,
                            std::map<Variable, std::size_t>::const_iterator it,
                            Letters& cur, std::set<Letters>& out) {
    if (it == m.end()) {
      if (!cur.empty()) {
        out.insert(cur);
      }
      return;
    }
    auto next = std::next(it);
    for (std::size_t k = 0; k <= it->second; ++k) {
      sub_multisets(m, next, cur, out);
      cur.push_back(it->first);
    }
    cur.resize(cur.size() - it->second - 1);
  }

}  // namespace detail

/// S(W), M(W), S_c(W), M_c(W): nonempty factors of the words of W
/// (sub-multisets in the commutative case), plus 1 for monoids, plus 0.
/// Element 0 is index 0 and the top; 1 follows when present; words come
/// next ordered by length, then lexicographically.
inline FiniteAiSemiring word_semiring(WordSemiringSpec const& spec,
                                      std::string name = "") {
  if (spec.words.empty()) {
    throw ConstructionError("word semiring needs at least one word");
  }
  std::set<detail::Letters> factors;
  for (auto const& w : spec.words) {
    auto const& v = w.letters();
    if (spec.commutative) {
      detail::Letters cur;
      auto const m = w.multiplicities();
      detail::sub_multisets(m, m.begin(), cur, factors);
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j <= v.size(); ++j) {
          factors.insert(detail::Letters(v.begin() + static_cast<long>(i),
                                         v.begin() + static_cast<long>(j)));
        }
      }
    }
  }
  std::vector<detail::Letters> words(factors.begin(), factors.end());
  std::stable_sort(words.begin(), words.end(),
                   [](auto const& a, auto const& b) {
                     return a.size() < b.size();
                   });
  std::size_t const offset = spec.monoid ? 2 : 1;
  std::size_t const n = words.size() + offset;
  if (n > max_order) {
    throw ConstructionError("word semiring is too large");
  }
  std::map<detail::Letters, Element> index;
  std::vector<std::string> names{"0"};
  if (spec.monoid) {
    names.push_back("1");
    index[{}] = 1;
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    index[words[i]] = static_cast<Element>(i + offset);
    names.push_back(to_string(Word(words[i])));
  }
  std::vector<detail::Letters> carrier(n);
  for (auto const& [w, i] : index) {
    carrier[i] = w;
  }
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = a == b ? static_cast<Element>(a) : Element{0};
      if (a == 0 || b == 0) {
        mul[a * n + b] = 0;
        continue;
      }
      auto p = carrier[a];
      p.insert(p.end(), carrier[b].begin(), carrier[b].end());
      if (spec.commutative) {
        std::sort(p.begin(), p.end());
      }
      auto it = index.find(p);
      mul[a * n + b] = it == index.end() ? Element{0} : it->second;
    }
  }
  if (name.empty()) {
    name = std::string(spec.monoid ? "M" : "S") +
           (spec.commutative ? "_c" : "") + "(";
    for (std::size_t i = 0; i < spec.words.size(); ++i) {
      name += (i ? "," : "") + to_string(spec.words[i]);
    }
    name += ")";
  }
  return FiniteAiSemiring(std::move(name), std::move(names), std::move(add),
                          std::move(mul));
}

namespace detail {

  inline std::string fresh_name(FiniteAiSemiring const& s, std::string base) {
    while (s.find_element(base) >= 0) {
      base += "'";
    }
    return base;
  }

  inline FiniteAiSemiring extend_flat(FiniteAiSemiring const& s,
                                      bool idempotent) {
    if (!is_flat(s)) {
      throw ConstructionError(s.name() + " is not flat");
    }
    std::size_t const n = s.order(), m = n + 1;
    Element const top = natural_order(s).top;
    auto const b = static_cast<Element>(n);
    auto names = s.elements();
    names.push_back(fresh_name(s, idempotent ? "e" : "b"));
    std::vector<Element> add(m * m), mul(m * m);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        auto const ex = static_cast<Element>(x), ey = static_cast<Element>(y);
        if (x < n && y < n) {
          add[x * m + y] = s.add(ex, ey);
          mul[x * m + y] = s.mul(ex, ey);
        } else {
          add[x * m + y] = x == y ? b : top;
          mul[x * m + y] = (x == n && y == n && idempotent) ? b : top;
        }
      }
    }
    return FiniteAiSemiring((idempotent ? "ie(" : "ne(") + s.name() + ")",
                            std::move(names), std::move(add), std::move(mul));
  }

}  // namespace detail

/// Adjoins b with b² = ba = ab = 0.
inline FiniteAiSemiring null_extension(FiniteAiSemiring const& s) {
  return detail::extend_flat(s, false);
}

/// Adjoins e with e² = e and ea = ae = 0.
inline FiniteAiSemiring idempotent_extension(FiniteAiSemiring const& s) {
  return detail::extend_flat(s, true);
}

/// Power sequence data of one element: a^k = a^(k+period) for k >= tail,
/// with tail and period minimal.
struct PowerCycle {
  std::size_t tail = 1;
  std::size_t period = 1;
};

inline PowerCycle power_cycle(FiniteAiSemiring const& s, Element a) {
  std::vector<Element> seq{a};
  std::vector<int> first(s.order(), -1);
  first[a] = 0;
  for (;;) {
    Element next = s.mul(seq.back(), a);
    if (first[next] >= 0) {
      auto const i = static_cast<std::size_t>(first[next]);
      return {i + 1, seq.size() - i};
    }
    first[next] = static_cast<int>(seq.size());
    seq.push_back(next);
  }
}

/// Elements a with a^n = a for some n > 1.
inline std::vector<Element> cyclic_elements(FiniteAiSemiring const& s) {
  std::vector<Element> out;
  for (std::size_t a = 0; a < s.order(); ++a) {
    if (power_cycle(s, static_cast<Element>(a)).tail == 1) {
      out.push_back(static_cast<Element>(a));
    }
  }
  return out;
}

/// Least k such that x^k ≈ x^(k+l) holds for some l >= 1.
inline std::size_t semiring_index(FiniteAiSemiring const& s) {
  std::size_t k = 1;
  for (std::size_t a = 0; a < s.order(); ++a) {
    k = std::max(k, power_cycle(s, static_cast<Element>(a)).tail);
  }
  return k;
}

/// The l that goes with semiring_index: lcm of the element periods.
inline std::size_t semiring_period(FiniteAiSemiring const& s) {
  std::size_t l = 1;
  for (std::size_t a = 0; a < s.order(); ++a) {
    l = std::lcm(l, power_cycle(s, static_cast<Element>(a)).period);
  }
  return l;
}

/// Noncyclic elements are closed downward in the natural order.
inline bool noncyclic_is_order_ideal(FiniteAiSemiring const& s) {
  auto const cyc = cyclic_elements(s);
  std::vector<bool> cyclic(s.order(), false);
  for (auto a : cyc) {
    cyclic[a] = true;
  }
  auto const order = natural_order(s);
  auto const n = static_cast<Element>(s.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!cyclic[a] && cyclic[b] && order.leq(b, a)) {
        return false;
      }
    }
  }
  return true;
}

struct NfbWitnessReport {
  bool noncyclic_order_ideal = false;
  std::optional<Morphism> s7_embedding;
  bool conclusion = false;
};

/// Sufficient condition for a nonfinite basis: noncyclic elements form an
/// order ideal and S7 embeds. A false conclusion only means that this
/// witness is absent.
inline NfbWitnessReport nfb_witness(FiniteAiSemiring const& s) {
  NfbWitnessReport r;
  r.noncyclic_order_ideal = noncyclic_is_order_ideal(s);
  r.s7_embedding = find_embedding(tables::s7(), s);
  r.conclusion = r.noncyclic_order_ideal && r.s7_embedding.has_value();
  return r;
}

}  // namespace aisr

#endif  // INCLUDE_AISR_CONSTRUCTIONS_HPP_
