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

/// @file parse.hpp
/// Text syntax for terms and identities.
///
///     identity := sum ("≈" | "=") sum
///     sum      := product ("+" product)*
///     product  := power ("*"? power)*
///     power    := atom ("^" digits)?
///     atom     := letter digits? | "(" sum ")"
///
/// Whitespace between tokens is ignored. Printing uses exponents for runs
/// of a repeated variable, " + " between summands and " ≈ " between sides,
/// and parses back to the same value.

#ifndef INCLUDE_AISR_PARSE_HPP_
#define INCLUDE_AISR_PARSE_HPP_

#include <cctype>
#include <string>
#include <string_view>

#include "aisr/term.hpp"

namespace aisr {

namespace detail {

  class Parser {
   public:
    explicit Parser(std::string_view text) : s_(text) {}

    Identity identity() {
      Term lhs = sum();
      skip_ws();
      if (!eat_equals()) {
        fail("expected '≈' or '='");
      }
      Term rhs = sum();
      end();
      return {std::move(lhs), std::move(rhs)};
    }

    Term term() {
      Term t = sum();
      end();
      return t;
    }

   private:
    static constexpr std::size_t max_exponent = 64;

    [[noreturn]] void fail(std::string const& msg) const {
      throw ParseError(pos_, msg);
    }

    void skip_ws() {
      while (pos_ < s_.size() &&
             std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      }
    }

    bool peek(char c) {
      skip_ws();
      return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat_equals() {
      if (s_.substr(pos_, 3) == "\xE2\x89\x88") {
        pos_ += 3;
        return true;
      }
      if (pos_ < s_.size() && s_[pos_] == '=') {
        ++pos_;
        return true;
      }
      return false;
    }

    void end() {
      skip_ws();
      if (pos_ != s_.size()) {
        fail("unexpected trailing input");
      }
    }

    bool at_atom() {
      skip_ws();
      return pos_ < s_.size() &&
             (std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '(');
    }

    Term sum() {
      Term t = product();
      while (peek('+')) {
        ++pos_;
        t = term_sum(t, product());
      }
      return t;
    }

    Term product() {
      if (!at_atom()) {
        fail(pos_ < s_.size() ? "expected a variable or '('"
                              : "unexpected end of input");
      }
      Term t = power();
      for (;;) {
        if (peek('*')) {
          ++pos_;
          if (!at_atom()) {
            fail("expected a factor after '*'");
          }
          t = term_product(t, power());
        } else if (at_atom()) {
          t = term_product(t, power());
        } else {
          return t;
        }
      }
    }

    Term power() {
      Term base = atom();
      if (!peek('^')) {
        return base;
      }
      ++pos_;
      skip_ws();
      std::size_t const start = pos_;
      std::size_t k = 0;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        k = k * 10 + static_cast<std::size_t>(s_[pos_] - '0');
        if (k > max_exponent) {
          pos_ = start;
          fail("exponent larger than " + std::to_string(max_exponent));
        }
        ++pos_;
      }
      if (pos_ == start) {
        fail("expected digits after '^'");
      }
      if (k == 0) {
        pos_ = start;
        fail("exponent 0 would give the empty word");
      }
      Term t = base;
      for (std::size_t i = 1; i < k; ++i) {
        t = term_product(t, base);
      }
      return t;
    }

    Term atom() {
      skip_ws();
      if (s_[pos_] == '(') {
        ++pos_;
        Term t = sum();
        if (!peek(')')) {
          fail("expected ')'");
        }
        ++pos_;
        return t;
      }
      char const letter = s_[pos_++];
      if (pos_ < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::uint32_t sub = 0;
        std::size_t const start = pos_;
        while (pos_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          sub = sub * 10 + static_cast<std::uint32_t>(s_[pos_] - '0');
          if (sub > 0xfffff) {
            pos_ = start;
            fail("variable subscript too large");
          }
          ++pos_;
        }
        return Term(Word{Variable(letter, sub)});
      }
      return Term(Word{Variable(letter)});
    }

    std::string_view s_;
    std::size_t pos_ = 0;
  };

}  // namespace detail

inline Term parse_term(std::string_view text) {
  return detail::Parser(text).term();
}

inline Identity parse_identity(std::string_view text) {
  return detail::Parser(text).identity();
}

inline Word parse_word(std::string_view text) {
  Term t = parse_term(text);
  if (t.size() != 1) {
    throw ParseError(0, "expected a single word");
  }
  return t.words().front();
}

inline std::string to_string(Variable x) { return x.str(); }

inline std::string to_string(Word const& w) {
  std::string out;
  auto const& v = w.letters();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) {
      ++j;
    }
    out += v[i].str();
    if (j - i > 1) {
      out += "^" + std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

inline std::string to_string(Term const& t) {
  std::string out;
  for (auto const& w : t.words()) {
    if (!out.empty()) {
      out += " + ";
    }
    out += to_string(w);
  }
  return out;
}

inline std::string to_string(Identity const& id) {
  return to_string(id.lhs) + " \xE2\x89\x88 " + to_string(id.rhs);
}

inline std::string to_string(SimpleIdentity const& si) {
  return to_string(si.identity());
}

}  // namespace aisr

#endif  // INCLUDE_AISR_PARSE_HPP_
