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

/// @file morphism_search.hpp
/// Canonical forms and backtracking searches for isomorphisms, embeddings
/// and subdirect embeddings between finite ai-semirings.
///
/// All searches assign images to source elements in index order and try
/// target elements in increasing order, so the first map found is the
/// lexicographically least one.

#ifndef INCLUDE_AISR_MORPHISM_SEARCH_HPP_
#define INCLUDE_AISR_MORPHISM_SEARCH_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "aisr/semiring.hpp"

namespace aisr {

using CanonicalKey = std::vector<std::uint8_t>;

inline constexpr std::size_t max_canonical_order = 8;

/// Relabels `s` so that old element a becomes `perm[a]`.
inline FiniteAiSemiring relabel(FiniteAiSemiring const& s,
                                std::vector<Element> const& perm) {
  std::size_t const n = s.order();
  if (perm.size() != n) {
    throw ConstructionError("permutation size does not match carrier");
  }
  std::vector<bool> seen(n, false);
  for (Element p : perm) {
    if (p >= n || seen[p]) {
      throw ConstructionError("not a permutation");
    }
    seen[p] = true;
  }
  std::vector<std::string> names(n);
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    names[perm[a]] = s.elements()[a];
    for (std::size_t b = 0; b < n; ++b) {
      auto const x = static_cast<Element>(a), y = static_cast<Element>(b);
      add[perm[a] * n + perm[b]] = perm[s.add(x, y)];
      mul[perm[a] * n + perm[b]] = perm[s.mul(x, y)];
    }
  }
  return FiniteAiSemiring(s.name(), std::move(names), std::move(add),
                          std::move(mul));
}

namespace detail {

  /// Lexicographic minimum over all relabelings of the concatenated tables
  /// `add || mul` (either may be empty). Comparison stops at the first byte
  /// that is already larger than the current best.
  inline CanonicalKey min_relabeling(std::size_t n,
                                     std::span<const Element> add,
                                     std::span<const Element> mul) {
    std::vector<std::span<const Element>> tables;
    if (!add.empty()) {
      tables.push_back(add);
    }
    if (!mul.empty()) {
      tables.push_back(mul);
    }
    std::size_t const len = tables.size() * n * n;
    CanonicalKey best(len, 0xff);
    CanonicalKey cur(len);
    // inv[new] = old, fwd[old] = new
    std::vector<Element> inv(n), fwd(n);
    std::iota(inv.begin(), inv.end(), Element{0});
    do {
      for (std::size_t i = 0; i < n; ++i) {
        fwd[inv[i]] = static_cast<Element>(i);
      }
      bool better = false;
      bool worse = false;
      std::size_t pos = 0;
      for (auto const& t : tables) {
        for (std::size_t i = 0; i < n && !worse; ++i) {
          for (std::size_t j = 0; j < n; ++j, ++pos) {
            auto const v = fwd[t[inv[i] * n + inv[j]]];
            cur[pos] = v;
            if (!better) {
              if (v > best[pos]) {
                worse = true;
                break;
              }
              if (v < best[pos]) {
                better = true;
              }
            }
          }
        }
        if (worse) {
          break;
        }
      }
      if (better) {
        best = cur;
      }
    } while (std::next_permutation(inv.begin(), inv.end()));
    return best;
  }

}  // namespace detail

/// Equal keys iff the algebras are isomorphic. Supports order <= 8.
inline CanonicalKey canonical_form(FiniteAiSemiring const& s) {
  if (s.order() > max_canonical_order) {
    throw ConstructionError("canonical_form supports order <= " +
                            std::to_string(max_canonical_order));
  }
  return detail::min_relabeling(s.order(), s.add_table(), s.mul_table());
}

inline std::string to_hex(CanonicalKey const& key) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (auto b : key) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

/// Visits every homomorphism S -> T (injective ones only if requested) in
/// lexicographic order of the map. The visitor returns false to stop.
/// `allowed`, when given, restricts the image of each source element.
inline void for_each_homomorphism(
    FiniteAiSemiring const& s, FiniteAiSemiring const& t, bool injective,
    std::function<bool(std::vector<Element> const&)> const& visit,
    std::function<bool(Element, Element)> const& allowed = {}) {
  std::size_t const n = s.order(), m = t.order();
  std::vector<Element> map(n, 0);
  std::vector<bool> used(m, false);

  auto consistent = [&](std::size_t k) {
    for (std::size_t a = 0; a <= k; ++a) {
      for (std::size_t b = 0; b <= k; ++b) {
        auto const x = static_cast<Element>(a), y = static_cast<Element>(b);
        auto const r1 = s.add(x, y), r2 = s.mul(x, y);
        bool const touches = a == k || b == k;
        if (r1 <= k && (touches || r1 == k) &&
            map[r1] != t.add(map[a], map[b])) {
          return false;
        }
        if (r2 <= k && (touches || r2 == k) &&
            map[r2] != t.mul(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  };

  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      stop = !visit(map);
      return;
    }
    for (std::size_t v = 0; v < m && !stop; ++v) {
      if (injective && used[v]) {
        continue;
      }
      if (allowed && !allowed(static_cast<Element>(k), static_cast<Element>(v))) {
        continue;
      }
      map[k] = static_cast<Element>(v);
      if (!consistent(k)) {
        continue;
      }
      used[v] = true;
      rec(k + 1);
      used[v] = false;
    }
  };
  rec(0);
}

namespace detail {

  /// Per-element isomorphism invariants.
  inline std::vector<std::array<int, 7>> element_invariants(
      FiniteAiSemiring const& s) {
    auto const order = natural_order(s);
    auto const n = static_cast<Element>(s.order());
    std::vector<std::array<int, 7>> inv(n);
    for (Element a = 0; a < n; ++a) {
      int below = 0, above = 0, left_fixed = 0, right_fixed = 0, squares = 0;
      for (Element b = 0; b < n; ++b) {
        below += order.leq(b, a);
        above += order.leq(a, b);
        left_fixed += s.mul(a, b) == b;
        right_fixed += s.mul(b, a) == b;
        squares += s.mul(b, b) == a;
      }
      Element sq = s.mul(a, a);
      int idem = sq == a;
      int sq_idem = s.mul(sq, sq) == sq;
      inv[a] = {below, above, left_fixed, right_fixed, squares, idem, sq_idem};
    }
    return inv;
  }

}  // namespace detail

/// First (lexicographically least) isomorphism S -> T, if any.
inline std::optional<Morphism> find_isomorphism(FiniteAiSemiring const& s,
                                                FiniteAiSemiring const& t) {
  if (s.order() != t.order()) {
    return std::nullopt;
  }
  auto const is = detail::element_invariants(s);
  auto const it = detail::element_invariants(t);
  {
    auto a = is, b = it;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      return std::nullopt;
    }
  }
  std::optional<Morphism> found;
  for_each_homomorphism(
      s, t, true,
      [&](std::vector<Element> const& map) {
        found = Morphism{s, t, map};
        return false;
      },
      [&](Element a, Element v) { return is[a] == it[v]; });
  return found;
}

/// First injective homomorphism S -> T, if any.
inline std::optional<Morphism> find_embedding(FiniteAiSemiring const& s,
                                              FiniteAiSemiring const& t) {
  if (s.order() > t.order()) {
    return std::nullopt;
  }
  std::optional<Morphism> found;
  for_each_homomorphism(s, t, true, [&](std::vector<Element> const& map) {
    found = Morphism{s, t, map};
    return false;
  });
  return found;
}

/// First injective homomorphism S -> A x B whose coordinate projections
/// are both onto. The target of the returned morphism is direct_product(A,B).
inline std::optional<Morphism> is_subdirect_embedding(
    FiniteAiSemiring const& s, FiniteAiSemiring const& a,
    FiniteAiSemiring const& b) {
  if (s.order() > a.order() * b.order() || s.order() < a.order() ||
      s.order() < b.order()) {
    return std::nullopt;
  }
  auto const prod = direct_product(a, b);
  std::size_t const m = b.order();
  std::optional<Morphism> found;
  for_each_homomorphism(s, prod, true, [&](std::vector<Element> const& map) {
    std::vector<bool> hit_a(a.order(), false), hit_b(m, false);
    for (Element x : map) {
      hit_a[x / m] = true;
      hit_b[x % m] = true;
    }
    auto all = [](std::vector<bool> const& v) {
      return std::all_of(v.begin(), v.end(), [](bool x) { return x; });
    };
    if (all(hit_a) && all(hit_b)) {
      found = Morphism{s, prod, map};
      return false;
    }
    return true;
  });
  return found;
}

inline bool is_isomorphic(FiniteAiSemiring const& s,
                          FiniteAiSemiring const& t) {
  return find_isomorphism(s, t).has_value();
}

}  // namespace aisr

#endif  // INCLUDE_AISR_MORPHISM_SEARCH_HPP_
