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

/// @file enumeration.hpp
/// All ai-semirings of a given order up to isomorphism.
///
/// Semilattices are generated first, labeled so that the natural order
/// refines the index order (a+b >= max(a,b)); one labeling per isomorphism
/// class is kept. For each semilattice the multiplication table is filled
/// row by row. A cell whose row or column is the join of two smaller
/// elements is forced by distributivity; every other assignment is followed
/// by a check of all associativity and distributivity instances whose cells
/// are known. Complete tables are reduced modulo the semilattice
/// automorphisms.
///
/// Work is split into (semilattice, first cell value) tasks. The worker
/// count is read from AISR_WORKERS and defaults to the number of hardware
/// threads; results are merged and sorted, so output does not depend on it.

#ifndef INCLUDE_AISR_ENUMERATION_HPP_
#define INCLUDE_AISR_ENUMERATION_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "aisr/json_io.hpp"
#include "aisr/morphism_search.hpp"
#include "aisr/semiring.hpp"

namespace aisr {

using FlatTable = std::vector<Element>;

inline constexpr std::size_t max_semilattice_order = 6;

/// Addition tables of all semilattices of order n up to isomorphism, in
/// increasing order of their canonical key. Each is labeled so that
/// a <= b in the natural order implies a <= b as indices.
inline std::vector<FlatTable> enumerate_semilattices(std::size_t n) {
  if (n < 1 || n > max_semilattice_order) {
    throw Error("enumerate_semilattices supports orders 1.." +
                std::to_string(max_semilattice_order));
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      cells.emplace_back(a, b);
    }
  }
  FlatTable add(n * n, 0);
  std::vector<bool> known(n * n, false);
  for (std::size_t a = 0; a < n; ++a) {
    add[a * n + a] = static_cast<Element>(a);
    known[a * n + a] = true;
  }
  auto assoc_ok = [&] {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!known[a * n + b]) {
          continue;
        }
        std::size_t const ab = add[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (!known[b * n + c] || !known[ab * n + c]) {
            continue;
          }
          std::size_t const bc = add[b * n + c];
          if (known[a * n + bc] && add[ab * n + c] != add[a * n + bc]) {
            return false;
          }
        }
      }
    }
    return true;
  };
  std::set<CanonicalKey> seen;
  std::vector<std::pair<CanonicalKey, FlatTable>> out;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      auto key = detail::min_relabeling(n, add, {});
      if (seen.insert(key).second) {
        out.emplace_back(std::move(key), add);
      }
      return;
    }
    auto [a, b] = cells[k];
    for (std::size_t v = b; v < n; ++v) {
      add[a * n + b] = add[b * n + a] = static_cast<Element>(v);
      known[a * n + b] = known[b * n + a] = true;
      if (assoc_ok()) {
        rec(k + 1);
      }
      known[a * n + b] = known[b * n + a] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  std::vector<FlatTable> tables;
  for (auto& [k, t] : out) {
    tables.push_back(std::move(t));
  }
  return tables;
}

namespace detail {

  inline std::vector<std::vector<Element>> automorphisms(std::size_t n,
                                                         FlatTable const& add) {
    std::vector<std::vector<Element>> autos;
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), Element{0});
    do {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          ok = p[add[a * n + b]] == add[p[a] * n + p[b]];
        }
      }
      if (ok) {
        autos.push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return autos;
  }

  /// Backtracking search for multiplication tables over a fixed addition.
  class MulSearch {
   public:
    MulSearch(std::size_t n, FlatTable const& add)
        : n_(n), add_(add), mul_(n * n, 0), known_(n * n, false),
          join_of_(n, {-1, -1}) {
      // d = b + c with b, c < d: row d and column d are determined by rows
      // (columns) b and c through distributivity.
      for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t b = 0; b < d && join_of_[d].first < 0; ++b) {
          for (std::size_t c = b + 1; c < d; ++c) {
            if (add[b * n + c] == d) {
              join_of_[d] = {static_cast<int>(b), static_cast<int>(c)};
              break;
            }
          }
        }
      }
    }

    /// Visits every complete table whose cell (0,0) equals `first`.
    template <typename Visit>
    void run(Element first, Visit&& visit) {
      set(0, first);
      if (consistent()) {
        rec(1, visit);
      }
      unset(0);
    }

   private:
    void set(std::size_t cell, Element v) {
      mul_[cell] = v;
      known_[cell] = true;
    }
    void unset(std::size_t cell) { known_[cell] = false; }

    bool k(std::size_t a, std::size_t b) const { return known_[a * n_ + b]; }
    std::size_t m(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }
    std::size_t s(std::size_t a, std::size_t b) const { return add_[a * n_ + b]; }

    bool consistent() const {
      for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
          for (std::size_t c = 0; c < n_; ++c) {
            // (ab)c = a(bc)
            if (k(a, b) && k(b, c)) {
              std::size_t const ab = m(a, b), bc = m(b, c);
              if (k(ab, c) && k(a, bc) && m(ab, c) != m(a, bc)) {
                return false;
              }
            }
            // a(b+c) = ab + ac
            if (k(a, b) && k(a, c)) {
              std::size_t const bc = s(b, c);
              if (k(a, bc) && m(a, bc) != s(m(a, b), m(a, c))) {
                return false;
              }
            }
            // (a+b)c = ac + bc
            if (k(a, c) && k(b, c)) {
              std::size_t const ab = s(a, b);
              if (k(ab, c) && m(ab, c) != s(m(a, c), m(b, c))) {
                return false;
              }
            }
          }
        }
      }
      return true;
    }

    template <typename Visit>
    void rec(std::size_t cell, Visit& visit) {
      if (cell == n_ * n_) {
        visit(mul_);
        return;
      }
      std::size_t const a = cell / n_, d = cell % n_;
      std::optional<std::size_t> forced;
      if (auto [b, c] = join_of_[a]; b >= 0) {
        // (b+c)d = bd + cd
        forced = s(m(static_cast<std::size_t>(b), d),
                   m(static_cast<std::size_t>(c), d));
      } else if (auto [b2, c2] = join_of_[d]; b2 >= 0) {
        // a(b+c) = ab + ac
        forced = s(m(a, static_cast<std::size_t>(b2)),
                   m(a, static_cast<std::size_t>(c2)));
      }
      if (forced) {
        set(cell, static_cast<Element>(*forced));
        if (consistent()) {
          rec(cell + 1, visit);
        }
        unset(cell);
        return;
      }
      for (std::size_t v = 0; v < n_; ++v) {
        set(cell, static_cast<Element>(v));
        if (consistent()) {
          rec(cell + 1, visit);
        }
        unset(cell);
      }
    }

    std::size_t n_;
    FlatTable const& add_;
    FlatTable mul_;
    std::vector<bool> known_;
    std::vector<std::pair<int, int>> join_of_;
  };

  inline std::size_t worker_count() {
    if (char const* env = std::getenv("AISR_WORKERS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return static_cast<std::size_t>(v);
      }
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

}  // namespace detail

struct CensusResult {
  std::size_t order = 0;
  std::vector<FiniteAiSemiring> members;   // sorted by canonical key
  std::vector<CanonicalKey> keys;          // keys[i] belongs to members[i]
  std::vector<std::size_t> height_one;     // indices into members
  std::size_t semilattices = 0;
  std::size_t workers = 1;
  double seconds = 0.0;

  std::size_t total() const { return members.size(); }
};

inline std::string census_member_name(std::size_t order, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "ai%zu_%04zu", order, index + 1);
  return buf;
}

/// All ai-semirings of order n up to isomorphism. Members are stored in
/// canonical labeling (the relabeling that attains the canonical key).
inline CensusResult enumerate_ai_semirings(std::size_t n,
                                           std::size_t workers = 0) {
  if (n < 1 || n > 5) {
    throw Error("enumerate_ai_semirings supports orders 1..5");
  }
  auto const start = std::chrono::steady_clock::now();
  auto const lattices = enumerate_semilattices(n);
  if (workers == 0) {
    workers = detail::worker_count();
  }

  struct Task {
    std::size_t lattice;
    Element first;
  };
  std::vector<Task> tasks;
  for (std::size_t l = 0; l < lattices.size(); ++l) {
    for (std::size_t v = 0; v < n; ++v) {
      tasks.push_back({l, static_cast<Element>(v)});
    }
  }
  std::vector<std::vector<std::vector<Element>>> autos;
  for (auto const& add : lattices) {
    autos.push_back(detail::automorphisms(n, add));
  }

  // Per task: multiplication tables reduced modulo automorphisms of the
  // semilattice, as the least relabeled table.
  std::vector<std::set<FlatTable>> found(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t const t = next.fetch_add(1);
      if (t >= tasks.size()) {
        return;
      }
      auto const& add = lattices[tasks[t].lattice];
      auto const& group = autos[tasks[t].lattice];
      detail::MulSearch search(n, add);
      FlatTable img(n * n);
      search.run(tasks[t].first, [&](FlatTable const& mul) {
        FlatTable best;
        for (auto const& p : group) {
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              img[p[a] * n + p[b]] = p[mul[a * n + b]];
            }
          }
          if (best.empty() || img < best) {
            best = img;
          }
        }
        found[t].insert(std::move(best));
      });
    }
  };
  std::size_t const threads = std::min(workers, tasks.size());
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) {
      pool.emplace_back(work);
    }
    for (auto& th : pool) {
      th.join();
    }
  }

  std::vector<std::pair<CanonicalKey, std::size_t>> keyed;
  std::vector<std::set<FlatTable>> per_lattice(lattices.size());
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    per_lattice[tasks[t].lattice].insert(found[t].begin(), found[t].end());
  }
  std::vector<CanonicalKey> all_keys;
  for (std::size_t l = 0; l < lattices.size(); ++l) {
    for (auto const& mul : per_lattice[l]) {
      all_keys.push_back(detail::min_relabeling(n, lattices[l], mul));
    }
  }
  std::sort(all_keys.begin(), all_keys.end());
  all_keys.erase(std::unique(all_keys.begin(), all_keys.end()), all_keys.end());

  CensusResult r;
  r.order = n;
  r.semilattices = lattices.size();
  r.workers = threads == 0 ? 1 : threads;
  auto const names = default_element_names(n);
  for (std::size_t i = 0; i < all_keys.size(); ++i) {
    auto const& key = all_keys[i];
    FlatTable add(key.begin(), key.begin() + static_cast<long>(n * n));
    FlatTable mul(key.begin() + static_cast<long>(n * n), key.end());
    r.members.emplace_back(census_member_name(n, i), names, std::move(add),
                           std::move(mul));
    r.keys.push_back(key);
    if (additive_height(r.members.back()) == 1) {
      r.height_one.push_back(i);
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

/// Index of the census member isomorphic to `s`, if any.
inline std::optional<std::size_t> census_lookup(CensusResult const& census,
                                                FiniteAiSemiring const& s) {
  if (s.order() != census.order) {
    return std::nullopt;
  }
  auto key = canonical_form(s);
  auto it = std::lower_bound(census.keys.begin(), census.keys.end(), key);
  if (it == census.keys.end() || *it != key) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - census.keys.begin());
}

/// Writes one semiring JSON file per member and an index.txt with lines
/// "<canonical-key-hex> <filename>".
inline void write_census(CensusResult const& census,
                         std::filesystem::path const& dir,
                         bool height_one_only = false) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create " + dir.string() + ": " + ec.message());
  }
  std::ofstream index(dir / "index.txt");
  if (!index) {
    throw IoError("cannot write " + (dir / "index.txt").string());
  }
  auto emit = [&](std::size_t i) {
    std::string const file = census.members[i].name() + ".json";
    write_json_file(dir / file, to_json(census.members[i]));
    index << to_hex(census.keys[i]) << " " << file << "\n";
  };
  if (height_one_only) {
    for (auto i : census.height_one) {
      emit(i);
    }
  } else {
    for (std::size_t i = 0; i < census.members.size(); ++i) {
      emit(i);
    }
  }
}

}  // namespace aisr

#endif  // INCLUDE_AISR_ENUMERATION_HPP_
