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

/// @file derivation.hpp
/// Checker for equational derivations in which every step replaces
/// P·σ(A)·Q + R by P·σ(B)·Q + R for an axiom A ≈ B.

#ifndef INCLUDE_AISR_DERIVATION_HPP_
#define INCLUDE_AISR_DERIVATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "aisr/parse.hpp"
#include "aisr/term.hpp"

namespace aisr {

struct DerivationStep {
  std::size_t axiom = 0;
  bool left_to_right = true;
  Substitution substitution;
  std::optional<Term> left;       // absent: empty left context
  std::optional<Term> right;      // absent: empty right context
  std::optional<Term> remainder;  // absent: nothing added
};

struct DerivationCertificate {
  std::vector<Identity> axioms;
  std::vector<Term> chain;
  std::vector<DerivationStep> steps;

  /// First and last term of the chain as an identity.
  Identity conclusion() const { return {chain.front(), chain.back()}; }
};

struct CertificateVerdict {
  bool valid = true;
  std::optional<std::size_t> failed_step;
  std::string message;
};

/// P·t·Q + R with absent parts skipped.
inline Term apply_context(Term const& t, DerivationStep const& step) {
  Term out = t;
  if (step.left) {
    out = term_product(*step.left, out);
  }
  if (step.right) {
    out = term_product(out, *step.right);
  }
  if (step.remainder) {
    out = term_sum(out, *step.remainder);
  }
  return out;
}

/// Throws MalformedCertificate when the chain is empty, the step count does
/// not match, or a substitution misses a variable of its axiom. Every other
/// defect is reported as a failing step.
inline CertificateVerdict verify_certificate(DerivationCertificate const& c) {
  if (c.chain.empty()) {
    throw MalformedCertificate("certificate chain is empty");
  }
  if (c.steps.size() + 1 != c.chain.size()) {
    throw MalformedCertificate(
        "certificate has " + std::to_string(c.chain.size()) + " terms but " +
        std::to_string(c.steps.size()) + " steps");
  }
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    auto const& step = c.steps[i];
    auto fail = [&](std::string msg) {
      return CertificateVerdict{false, i, "step " + std::to_string(i) + ": " +
                                              std::move(msg)};
    };
    if (step.axiom >= c.axioms.size()) {
      return fail("axiom " + std::to_string(step.axiom) + " is not in the list");
    }
    auto const& ax = c.axioms[step.axiom];
    for (auto v : ax.variables()) {
      if (!step.substitution.count(v)) {
        throw MalformedCertificate("step " + std::to_string(i) +
                                   ": substitution does not map " + v.str());
      }
    }
    auto const& from = step.left_to_right ? ax.lhs : ax.rhs;
    auto const& to = step.left_to_right ? ax.rhs : ax.lhs;
    Term const before = apply_context(substitute(from, step.substitution), step);
    Term const after = apply_context(substitute(to, step.substitution), step);
    if (before != c.chain[i]) {
      return fail("source side gives " + to_string(before) + ", chain has " +
                  to_string(c.chain[i]));
    }
    if (after != c.chain[i + 1]) {
      return fail("target side gives " + to_string(after) + ", chain has " +
                  to_string(c.chain[i + 1]));
    }
  }
  return {true, std::nullopt, "all steps check"};
}

}  // namespace aisr

#endif  // INCLUDE_AISR_DERIVATION_HPP_
