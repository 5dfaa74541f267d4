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

/// @file tables.hpp
/// Raw Cayley tables: S7, the six two-element ai-semirings, and the
/// multiplication tables of the 58 height-one ai-semirings of order four.

#ifndef INCLUDE_AISR_TABLES_HPP_
#define INCLUDE_AISR_TABLES_HPP_

#include <array>
#include <string>
#include <vector>

#include "aisr/semiring.hpp"

namespace aisr::tables {

using Table4 = std::array<std::array<int, 4>, 4>;

/// Addition shared by all height-one algebras of order four on {1,2,3,4}:
/// x+x = x and distinct elements sum to the top 1. Entries are 1-based.
inline constexpr Table4 height_one_add = {{
    {1, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 3, 1}, {1, 1, 1, 4}}};

/// Multiplication tables of S_(4,1) .. S_(4,58), rows indexed by the left
/// factor, entries 1-based.
///
/// S_(4,57) has 1·4 = 1. The variant with 1·4 = 4 is not distributive:
/// (2+3)·4 = 1·4 = 4 while 2·4 + 3·4 = 2+3 = 1.
inline constexpr std::array<Table4, 58> height_one_mul = {{
    {{{1,1,1,1}, {1,1,1,1}, {1,1,1,1}, {1,1,1,1}}},  // 1
    {{{1,1,1,1}, {1,1,1,1}, {1,1,1,1}, {1,1,1,2}}},  // 2
    {{{1,1,1,1}, {1,1,1,1}, {1,1,1,1}, {1,1,1,4}}},  // 3
    {{{1,1,1,1}, {1,1,1,1}, {1,1,1,2}, {1,1,1,1}}},  // 4
    {{{1,1,1,1}, {1,1,1,1}, {1,1,1,3}, {1,1,1,4}}},  // 5
    {{{1,1,1,1}, {1,1,1,2}, {1,1,1,3}, {1,1,1,4}}},  // 6
    {{{1,1,1,4}, {1,1,1,4}, {1,1,1,4}, {1,1,1,4}}},  // 7
    {{{1,1,1,1}, {1,1,1,1}, {1,1,1,2}, {1,1,2,1}}},  // 8
    {{{1,1,1,1}, {1,1,1,1}, {1,1,1,2}, {1,1,2,3}}},  // 9
    {{{1,1,1,1}, {1,1,1,1}, {1,1,1,1}, {1,1,3,4}}},  // 10
    {{{1,1,1,1}, {1,1,1,1}, {1,1,1,3}, {1,1,3,4}}},  // 11
    {{{1,1,1,1}, {1,1,1,2}, {1,1,1,1}, {1,1,3,4}}},  // 12
    {{{1,1,1,1}, {1,1,1,2}, {1,1,1,3}, {1,1,3,4}}},  // 13
    {{{1,1,1,1}, {1,1,1,1}, {1,1,2,1}, {1,1,1,2}}},  // 14
    {{{1,1,1,1}, {1,1,1,1}, {1,1,2,1}, {1,1,1,4}}},  // 15
    {{{1,1,1,4}, {1,1,1,4}, {1,1,2,4}, {1,1,1,4}}},  // 16
    {{{1,1,1,1}, {1,1,1,1}, {1,1,3,1}, {1,1,1,4}}},  // 17
    {{{1,1,1,1}, {1,1,1,2}, {1,1,3,1}, {1,1,1,4}}},  // 18
    {{{1,1,1,4}, {1,1,1,4}, {1,1,3,4}, {1,1,1,4}}},  // 19
    {{{1,1,1,1}, {1,1,1,1}, {1,1,3,4}, {1,1,4,3}}},  // 20
    {{{1,1,1,4}, {1,1,2,4}, {1,1,3,4}, {1,1,1,4}}},  // 21
    {{{1,1,3,4}, {1,1,3,4}, {1,1,3,4}, {1,1,3,4}}},  // 22
    {{{1,1,1,1}, {1,1,1,1}, {1,1,1,1}, {1,2,3,4}}},  // 23
    {{{1,1,1,1}, {1,1,1,1}, {1,1,1,3}, {1,2,3,4}}},  // 24
    {{{1,1,1,1}, {1,1,1,2}, {1,1,1,3}, {1,2,3,4}}},  // 25
    {{{1,1,1,1}, {1,1,1,2}, {1,1,2,3}, {1,2,3,4}}},  // 26
    {{{1,1,1,1}, {1,1,1,1}, {1,1,3,1}, {1,2,1,4}}},  // 27
    {{{1,1,1,1}, {1,1,1,2}, {1,1,3,1}, {1,2,1,4}}},  // 28
    {{{1,1,1,1}, {1,1,2,1}, {1,1,3,1}, {1,2,1,4}}},  // 29
    {{{1,1,3,1}, {1,1,3,1}, {1,1,3,1}, {1,2,3,4}}},  // 30
    {{{1,1,3,1}, {1,1,3,2}, {1,1,3,1}, {1,2,3,4}}},  // 31
    {{{1,1,1,1}, {1,2,1,1}, {1,1,3,1}, {1,1,1,4}}},  // 32
    {{{1,1,1,4}, {1,2,1,4}, {1,1,3,4}, {1,1,1,4}}},  // 33
    {{{1,1,1,1}, {1,2,1,1}, {1,1,3,4}, {1,1,4,3}}},  // 34
    {{{1,1,3,4}, {1,2,3,4}, {1,1,3,4}, {1,1,3,4}}},  // 35
    {{{1,1,3,1}, {1,2,3,4}, {1,1,3,1}, {1,4,3,2}}},  // 36
    {{{1,1,1,1}, {1,2,3,4}, {1,3,4,2}, {1,4,2,3}}},  // 37
    {{{1,2,3,4}, {1,2,3,4}, {1,2,3,4}, {1,2,3,4}}},  // 38
    {{{1,1,1,1}, {1,1,1,1}, {1,1,1,1}, {4,4,4,4}}},  // 39
    {{{1,1,1,4}, {1,1,1,4}, {1,1,1,4}, {4,4,4,4}}},  // 40
    {{{1,1,1,1}, {1,1,1,1}, {1,1,2,1}, {4,4,4,4}}},  // 41
    {{{1,1,1,4}, {1,1,1,4}, {1,1,2,4}, {4,4,4,4}}},  // 42
    {{{1,1,1,1}, {1,1,1,1}, {1,1,3,1}, {4,4,4,4}}},  // 43
    {{{1,1,1,4}, {1,1,1,4}, {1,1,3,4}, {4,4,4,4}}},  // 44
    {{{1,1,1,1}, {1,1,2,1}, {1,1,3,1}, {4,4,4,4}}},  // 45
    {{{1,1,1,4}, {1,1,2,4}, {1,1,3,4}, {4,4,4,4}}},  // 46
    {{{1,1,1,1}, {1,1,1,1}, {1,2,3,1}, {4,4,4,4}}},  // 47
    {{{1,1,1,4}, {1,1,1,4}, {1,2,3,4}, {4,4,4,4}}},  // 48
    {{{1,1,1,1}, {1,1,2,1}, {1,2,3,1}, {4,4,4,4}}},  // 49
    {{{1,1,1,4}, {1,1,2,4}, {1,2,3,4}, {4,4,4,4}}},  // 50
    {{{1,1,1,1}, {1,2,1,1}, {1,1,3,1}, {4,4,4,4}}},  // 51
    {{{1,1,1,4}, {1,2,1,4}, {1,1,3,4}, {4,4,4,4}}},  // 52
    {{{1,1,1,1}, {1,2,3,1}, {1,3,2,1}, {4,4,4,4}}},  // 53
    {{{1,1,1,4}, {1,2,3,4}, {1,3,2,4}, {4,4,4,4}}},  // 54
    {{{1,1,1,1}, {1,1,1,1}, {3,3,3,3}, {4,4,4,4}}},  // 55
    {{{1,1,1,1}, {1,2,1,1}, {3,3,3,3}, {4,4,4,4}}},  // 56
    {{{1,1,1,1}, {2,2,2,2}, {3,3,3,3}, {4,4,4,4}}},  // 57
    {{{2,2,2,2}, {2,2,2,2}, {2,2,2,2}, {2,2,2,2}}},  // 58
}};

/// The non-distributive variant of S_(4,57) discussed above.
inline constexpr Table4 s57_printed_variant = {{
    {1, 1, 1, 4}, {2, 2, 2, 2}, {3, 3, 3, 3}, {4, 4, 4, 4}}};

inline TableRows zero_based(Table4 const& t) {
  TableRows rows(4, std::vector<int>(4));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      rows[a][b] = t[a][b] - 1;
    }
  }
  return rows;
}

inline std::string height_one_name(int k) {
  return "S_(4," + std::to_string(k) + ")";
}

/// S_(4,k) for k in 1..58, elements named "1".."4" with "1" the top.
inline FiniteAiSemiring height_one(int k) {
  if (k < 1 || k > 58) {
    throw UnknownName("no height-one algebra " + std::to_string(k));
  }
  return FiniteAiSemiring::from_rows(
      height_one_name(k), {"1", "2", "3", "4"}, zero_based(height_one_add),
      zero_based(height_one_mul[static_cast<std::size_t>(k - 1)]));
}

/// S7 on {1, a, ∞}: flat with top ∞, 1 the identity, a·a = ∞.
inline FiniteAiSemiring s7() {
  return FiniteAiSemiring::from_rows(
      "S7", {"1", "a", "\xE2\x88\x9E"},
      {{0, 2, 2}, {2, 1, 2}, {2, 2, 2}},
      {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}});
}

struct TwoElement {
  const char* name;
  std::array<std::array<int, 2>, 2> mul;
};

/// Carrier {0, 1} with 0+1 = 1.
inline constexpr std::array<TwoElement, 6> two_element = {{
    {"L2", {{{0, 0}, {1, 1}}}},
    {"R2", {{{0, 1}, {0, 1}}}},
    {"M2", {{{0, 1}, {1, 1}}}},
    {"D2", {{{0, 0}, {0, 1}}}},
    {"N2", {{{0, 0}, {0, 0}}}},
    {"T2", {{{1, 1}, {1, 1}}}},
}};

inline FiniteAiSemiring order_two(TwoElement const& t) {
  TableRows mul = {{t.mul[0][0], t.mul[0][1]}, {t.mul[1][0], t.mul[1][1]}};
  return FiniteAiSemiring::from_rows(t.name, {"0", "1"}, {{0, 1}, {1, 1}},
                                     mul);
}

inline FiniteAiSemiring order_two(std::string const& name) {
  for (auto const& t : two_element) {
    if (name == t.name) {
      return order_two(t);
    }
  }
  throw UnknownName("no two-element algebra " + name);
}

}  // namespace aisr::tables

#endif  // INCLUDE_AISR_TABLES_HPP_
