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


// Builds flat semirings from 0-cancellative semigroups, extends them, and
// shows where each extension sits inside a product with a two-element
// algebra.

#include <iostream>

#include "aisr/aisr.hpp"

namespace {

void show(aisr::FiniteAiSemiring const& s) {
  auto name = aisr::catalog().classify(s);
  std::cout << "  " << s.name() << " (order " << s.order() << ")"
            << (name ? " is " + *name : std::string()) << "\n";
}

void embed(aisr::FiniteAiSemiring const& s, aisr::FiniteAiSemiring const& a,
           aisr::FiniteAiSemiring const& b) {
  auto m = aisr::is_subdirect_embedding(s, a, b);
  std::cout << "  " << s.name() << " in " << a.name() << " x " << b.name()
            << ": " << (m ? "subdirect" : "no") << "\n";
}

}  // namespace

int main() {
  using namespace aisr;
  auto const& t2 = catalog().get("T2").algebra;
  auto const& m2 = catalog().get("M2").algebra;

  std::cout << "flat semirings from groups with zero\n";
  for (std::size_t n = 1; n <= 3; ++n) {
    auto s = flat_from_semigroup(cyclic_group_with_zero(n),
                                 "flat(Z" + std::to_string(n) + ")");
    show(s);
    auto ne = null_extension(s);
    auto ie = idempotent_extension(s);
    show(ne);
    show(ie);
    embed(ne, s, t2);
    embed(ie, s, m2);
  }

  std::cout << "\nflat catalog entries\n";
  std::size_t flat = 0, nfb = 0;
  for (auto const* e : catalog().list({.flat = true})) {
    ++flat;
    if (nfb_witness(e->algebra).conclusion) {
      ++nfb;
    }
  }
  std::cout << "  " << flat << " flat, " << nfb
            << " with a nonfinite basis witness\n";

  auto const& s7 = catalog().get("S7").algebra;
  std::cout << "\nS7 x S7 is " << (is_flat(direct_product(s7, s7)) ? "" : "not ")
            << "flat\n";
  return 0;
}
