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

/// @file semiring.hpp
/// Finite additively idempotent semirings: storage, law checking, the
/// natural order and the basic structural operations (dual, direct product,
/// generated subalgebra).
///
/// Elements are indices `0..n-1`; each algebra also carries display names so
/// that tables can be printed with the labels they were given (for the
/// height-1 algebras of order four, index 0 is displayed as "1" and is the
/// additive top).

#ifndef INCLUDE_AISR_SEMIRING_HPP_
#define INCLUDE_AISR_SEMIRING_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aisr/error.hpp"

namespace aisr {

using Element = std::uint8_t;

/// Row-major table as read from user input; entries are unchecked ints.
using TableRows = std::vector<std::vector<int>>;

inline constexpr std::size_t max_order = std::numeric_limits<Element>::max();

/// One violated law together with the lexicographically first witness.
struct Violation {
  std::string law;
  std::vector<Element> witness;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

namespace detail {

  inline ValidationReport check_laws(std::size_t n,
                                     std::span<const Element> add,
                                     std::span<const Element> mul) {
    auto A = [&](std::size_t a, std::size_t b) { return add[a * n + b]; };
    auto M = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };
    ValidationReport report;
    auto record = [&](const char* law, std::vector<Element> w) {
      for (auto const& v : report.violations) {
        if (v.law == law) {
          return;
        }
      }
      report.violations.push_back({law, std::move(w)});
    };
    auto e = [](std::size_t x) { return static_cast<Element>(x); };

    for (std::size_t a = 0; a < n; ++a) {
      if (A(a, a) != a) {
        record("additive idempotence", {e(a)});
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (A(a, b) != A(b, a)) {
          record("additive commutativity", {e(a), e(b)});
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (A(A(a, b), c) != A(a, A(b, c))) {
            record("additive associativity", {e(a), e(b), e(c)});
          }
          if (M(M(a, b), c) != M(a, M(b, c))) {
            record("multiplicative associativity", {e(a), e(b), e(c)});
          }
          // a(b+c) = ab+ac
          if (M(a, A(b, c)) != A(M(a, b), M(a, c))) {
            record("left distributivity", {e(a), e(b), e(c)});
          }
          // (a+b)c = ac+bc
          if (M(A(a, b), c) != A(M(a, c), M(b, c))) {
            record("right distributivity", {e(a), e(b), e(c)});
          }
        }
      }
    }
    report.valid = report.violations.empty();
    return report;
  }

  inline std::vector<Element> flatten(TableRows const& rows, std::size_t n,
                                      const char* which) {
    if (rows.size() != n) {
      throw MalformedTable(std::string(which) + " table has " +
                           std::to_string(rows.size()) + " rows, expected " +
                           std::to_string(n));
    }
    std::vector<Element> out;
    out.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) {
        throw MalformedTable(std::string(which) + " table row " +
                             std::to_string(r) + " has " +
                             std::to_string(rows[r].size()) +
                             " entries, expected " + std::to_string(n));
      }
      for (int v : rows[r]) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw MalformedTable(std::string(which) + " table entry " +
                               std::to_string(v) + " in row " +
                               std::to_string(r) + " is out of range");
        }
        out.push_back(static_cast<Element>(v));
      }
    }
    return out;
  }

  inline std::string describe(ValidationReport const& report) {
    std::string s;
    for (auto const& v : report.violations) {
      if (!s.empty()) {
        s += "; ";
      }
      s += v.law + " fails at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v.witness[i]);
      }
      s += ")";
    }
    return s;
  }

}  // namespace detail

/// Checks the ai-semiring laws on a pair of square tables.
///
/// Throws MalformedTable when the tables are not n x n (n taken from the
/// addition table) or contain an entry outside `0..n-1`; law violations are
/// reported, not thrown. At most one witness is kept per law.
inline ValidationReport validate(TableRows const& add, TableRows const& mul) {
  std::size_t const n = add.size();
  if (n == 0) {
    throw MalformedTable("empty table");
  }
  if (n > max_order) {
    throw MalformedTable("order " + std::to_string(n) + " is too large");
  }
  auto a = detail::flatten(add, n, "addition");
  auto m = detail::flatten(mul, n, "multiplication");
  return detail::check_laws(n, a, m);
}

inline std::vector<std::string> default_element_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
  }
  return names;
}

class FiniteAiSemiring {
 public:
  /// Builds from row-major flat tables; throws InvalidSemiring when a law
  /// fails and MalformedTable on shape errors.
  FiniteAiSemiring(std::string name, std::vector<std::string> elements,
                   std::vector<Element> add, std::vector<Element> mul)
      : name_(std::move(name)),
        elements_(std::move(elements)),
        add_(std::move(add)),
        mul_(std::move(mul)) {
    n_ = elements_.size();
    if (n_ == 0 || n_ > max_order) {
      throw MalformedTable("carrier size must be in 1.." +
                           std::to_string(max_order));
    }
    if (add_.size() != n_ * n_ || mul_.size() != n_ * n_) {
      throw MalformedTable("tables do not match carrier size " +
                           std::to_string(n_));
    }
    for (std::size_t i = 0; i < n_ * n_; ++i) {
      if (add_[i] >= n_ || mul_[i] >= n_) {
        throw MalformedTable("table entry out of range");
      }
    }
    auto report = detail::check_laws(n_, add_, mul_);
    if (!report.valid) {
      throw InvalidSemiring(name_ + ": " + detail::describe(report));
    }
  }

  static FiniteAiSemiring from_rows(std::string name,
                                    std::vector<std::string> elements,
                                    TableRows const& add,
                                    TableRows const& mul) {
    std::size_t const n = add.size();
    if (elements.empty()) {
      elements = default_element_names(n);
    }
    if (elements.size() != n) {
      throw MalformedTable("expected " + std::to_string(n) +
                           " element names, got " +
                           std::to_string(elements.size()));
    }
    return FiniteAiSemiring(std::move(name), std::move(elements),
                            detail::flatten(add, n, "addition"),
                            detail::flatten(mul, n, "multiplication"));
  }

  std::size_t order() const noexcept { return n_; }
  std::string const& name() const noexcept { return name_; }
  std::vector<std::string> const& elements() const noexcept {
    return elements_;
  }
  std::string const& element_name(Element a) const { return elements_.at(a); }

  Element add(Element a, Element b) const noexcept { return add_[a * n_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * n_ + b]; }

  std::span<const Element> add_table() const noexcept { return add_; }
  std::span<const Element> mul_table() const noexcept { return mul_; }

  TableRows add_rows() const { return rows(add_); }
  TableRows mul_rows() const { return rows(mul_); }

  /// Index of the element with this display name, or -1.
  int find_element(std::string const& display) const {
    auto it = std::find(elements_.begin(), elements_.end(), display);
    return it == elements_.end() ? -1
                                 : static_cast<int>(it - elements_.begin());
  }

  FiniteAiSemiring renamed(std::string name) const {
    FiniteAiSemiring copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  /// Tables and element names; the algebra's own name is not compared.
  friend bool operator==(FiniteAiSemiring const& x,
                         FiniteAiSemiring const& y) {
    return x.elements_ == y.elements_ && x.add_ == y.add_ && x.mul_ == y.mul_;
  }

 private:
  TableRows rows(std::vector<Element> const& t) const {
    TableRows out(n_, std::vector<int>(n_));
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        out[a][b] = t[a * n_ + b];
      }
    }
    return out;
  }

  std::string name_;
  std::vector<std::string> elements_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::size_t n_ = 0;
};

/// a <= b  iff  a + b = b.
struct NaturalOrder {
  std::size_t n = 0;
  std::vector<bool> relation;  // row-major: relation[a*n+b] is a <= b
  Element top = 0;

  bool leq(Element a, Element b) const { return relation[a * n + b]; }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
};

inline NaturalOrder natural_order(FiniteAiSemiring const& s) {
  NaturalOrder order;
  order.n = s.order();
  order.relation.assign(order.n * order.n, false);
  Element top = 0;
  for (std::size_t a = 0; a < order.n; ++a) {
    top = s.add(top, static_cast<Element>(a));
    for (std::size_t b = 0; b < order.n; ++b) {
      order.relation[a * order.n + b] =
          s.add(static_cast<Element>(a), static_cast<Element>(b)) == b;
    }
  }
  order.top = top;
  return order;
}

/// Whether a <= b implies a+c <= b+c, ac <= bc and ca <= cb.
inline bool is_compatible(FiniteAiSemiring const& s, NaturalOrder const& o) {
  auto const n = static_cast<Element>(s.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!o.leq(a, b)) {
        continue;
      }
      for (Element c = 0; c < n; ++c) {
        if (!o.leq(s.add(a, c), s.add(b, c)) ||
            !o.leq(s.mul(a, c), s.mul(b, c)) ||
            !o.leq(s.mul(c, a), s.mul(c, b))) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Number of edges on the longest chain of the natural order.
inline std::size_t additive_height(FiniteAiSemiring const& s) {
  auto const order = natural_order(s);
  std::size_t const n = s.order();
  // Elements sorted by the size of their down-set form a linear extension.
  std::vector<std::size_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      below[a] += order.leq(static_cast<Element>(b), static_cast<Element>(a));
    }
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
  std::vector<std::size_t> longest(n, 0);
  std::size_t best = 0;
  for (std::size_t i : idx) {
    for (std::size_t j : idx) {
      if (order.less(static_cast<Element>(j), static_cast<Element>(i))) {
        longest[i] = std::max(longest[i], longest[j] + 1);
      }
    }
    best = std::max(best, longest[i]);
  }
  return best;
}

inline FiniteAiSemiring dual(FiniteAiSemiring const& s) {
  std::size_t const n = s.order();
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      mul[a * n + b] = s.mul(static_cast<Element>(b), static_cast<Element>(a));
    }
  }
  return FiniteAiSemiring(
      "dual(" + s.name() + ")", s.elements(),
      std::vector<Element>(s.add_table().begin(), s.add_table().end()),
      std::move(mul));
}

/// Componentwise operations on pairs; pair (a,b) has index a*|t|+b.
inline FiniteAiSemiring direct_product(FiniteAiSemiring const& s,
                                       FiniteAiSemiring const& t) {
  std::size_t const n = s.order(), m = t.order();
  if (n * m > max_order) {
    throw MalformedTable("direct product is too large");
  }
  std::size_t const nm = n * m;
  std::vector<std::string> names;
  names.reserve(nm);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      names.push_back("(" + s.elements()[a] + "," + t.elements()[b] + ")");
    }
  }
  std::vector<Element> add(nm * nm), mul(nm * nm);
  for (std::size_t x = 0; x < nm; ++x) {
    auto const xa = static_cast<Element>(x / m), xb = static_cast<Element>(x % m);
    for (std::size_t y = 0; y < nm; ++y) {
      auto const ya = static_cast<Element>(y / m),
                 yb = static_cast<Element>(y % m);
      add[x * nm + y] = static_cast<Element>(s.add(xa, ya) * m + t.add(xb, yb));
      mul[x * nm + y] = static_cast<Element>(s.mul(xa, ya) * m + t.mul(xb, yb));
    }
  }
  return FiniteAiSemiring(s.name() + " x " + t.name(), std::move(names),
                          std::move(add), std::move(mul));
}

/// A total map between carriers. `map[a]` is the image of source element a.
struct Morphism {
  FiniteAiSemiring source;
  FiniteAiSemiring target;
  std::vector<Element> map;

  bool is_homomorphism() const {
    if (map.size() != source.order()) {
      return false;
    }
    for (Element m : map) {
      if (m >= target.order()) {
        return false;
      }
    }
    auto const n = static_cast<Element>(source.order());
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (map[source.add(a, b)] != target.add(map[a], map[b]) ||
            map[source.mul(a, b)] != target.mul(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_injective() const {
    std::vector<bool> seen(target.order(), false);
    for (Element m : map) {
      if (seen[m]) {
        return false;
      }
      seen[m] = true;
    }
    return true;
  }

  bool is_surjective() const {
    std::vector<bool> seen(target.order(), false);
    for (Element m : map) {
      seen[m] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }
};

struct Subalgebra {
  FiniteAiSemiring algebra;
  Morphism inclusion;
};

/// Closure of `seed` under + and *. Elements of the result keep their
/// relative order and display names from `s`.
inline Subalgebra generated_subalgebra(FiniteAiSemiring const& s,
                                       std::vector<Element> const& seed) {
  if (seed.empty()) {
    throw ConstructionError("subalgebra seed must be nonempty");
  }
  std::size_t const n = s.order();
  std::vector<bool> in(n, false);
  for (Element e : seed) {
    if (e >= n) {
      throw ConstructionError("seed element out of range");
    }
    in[e] = true;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n && in[a]; ++b) {
        if (!in[b]) {
          continue;
        }
        auto const x = static_cast<Element>(a), y = static_cast<Element>(b);
        for (Element c : {s.add(x, y), s.mul(x, y)}) {
          if (!in[c]) {
            in[c] = true;
            grew = true;
          }
        }
      }
    }
  }
  std::vector<Element> members;
  std::vector<int> index(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (in[a]) {
      index[a] = static_cast<int>(members.size());
      members.push_back(static_cast<Element>(a));
    }
  }
  std::size_t const k = members.size();
  std::vector<std::string> names;
  std::vector<Element> add(k * k), mul(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(s.elements()[members[i]]);
    for (std::size_t j = 0; j < k; ++j) {
      add[i * k + j] =
          static_cast<Element>(index[s.add(members[i], members[j])]);
      mul[i * k + j] =
          static_cast<Element>(index[s.mul(members[i], members[j])]);
    }
  }
  std::string label = s.name() + "{";
  for (std::size_t i = 0; i < k; ++i) {
    label += (i ? "," : "") + names[i];
  }
  label += "}";
  FiniteAiSemiring sub(label, std::move(names), std::move(add), std::move(mul));
  Morphism inclusion{sub, s, members};
  return {std::move(sub), std::move(inclusion)};
}

/// Looks up elements by display name; throws UnknownName.
inline std::vector<Element> elements_named(FiniteAiSemiring const& s,
                                           std::vector<std::string> const& names) {
  std::vector<Element> out;
  for (auto const& nm : names) {
    int i = s.find_element(nm);
    if (i < 0) {
      throw UnknownName("no element named '" + nm + "' in " + s.name());
    }
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

}  // namespace aisr

#endif  // INCLUDE_AISR_SEMIRING_HPP_
