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

/// @file term.hpp
/// Words over a countable alphabet, ai-semiring terms (finite nonempty sets
/// of words), identities, and the usual word and term measures.

#ifndef INCLUDE_AISR_TERM_HPP_
#define INCLUDE_AISR_TERM_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aisr/error.hpp"

namespace aisr {

/// A variable is a letter with an optional numeric subscript ("x", "x1").
/// Variables order by letter first, then by subscript, with the bare
/// letter before every subscripted one.
class Variable {
 public:
  constexpr Variable() = default;
  constexpr explicit Variable(char letter) : code_(encode(letter, 0)) {}
  constexpr Variable(char letter, std::uint32_t subscript)
      : code_(encode(letter, subscript + 1)) {}

  char letter() const noexcept { return static_cast<char>(code_ >> 24); }
  bool has_subscript() const noexcept { return (code_ & 0xffffff) != 0; }
  std::uint32_t subscript() const noexcept { return (code_ & 0xffffff) - 1; }
  std::uint32_t code() const noexcept { return code_; }

  std::string str() const {
    std::string s(1, letter());
    if (has_subscript()) {
      s += std::to_string(subscript());
    }
    return s;
  }

  friend auto operator<=>(Variable, Variable) = default;

 private:
  static constexpr std::uint32_t encode(char letter, std::uint32_t sub) {
    return (static_cast<std::uint32_t>(static_cast<unsigned char>(letter))
            << 24) |
           (sub & 0xffffff);
  }
  std::uint32_t code_ = 0;
};

/// Nonempty sequence of variables.
class Word {
 public:
  explicit Word(std::vector<Variable> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
      throw EmptyWord("a word must contain at least one letter");
    }
  }
  Word(std::initializer_list<Variable> letters)
      : Word(std::vector<Variable>(letters)) {}

  /// One variable per character; convenience for single-letter alphabets.
  static Word of(std::string const& letters) {
    std::vector<Variable> v;
    for (char c : letters) {
      v.emplace_back(c);
    }
    return Word(std::move(v));
  }

  std::vector<Variable> const& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  Variable head() const noexcept { return letters_.front(); }
  Variable tail() const noexcept { return letters_.back(); }

  std::set<Variable> content() const {
    return {letters_.begin(), letters_.end()};
  }

  std::size_t multiplicity(Variable x) const {
    return static_cast<std::size_t>(
        std::count(letters_.begin(), letters_.end(), x));
  }

  std::map<Variable, std::size_t> multiplicities() const {
    std::map<Variable, std::size_t> m;
    for (auto x : letters_) {
      ++m[x];
    }
    return m;
  }

  /// The word with its last letter deleted; empty for a single letter.
  std::optional<Word> prefix() const {
    if (length() == 1) {
      return std::nullopt;
    }
    return Word(std::vector<Variable>(letters_.begin(), letters_.end() - 1));
  }

  /// The word with its first letter deleted; empty for a single letter.
  std::optional<Word> suffix() const {
    if (length() == 1) {
      return std::nullopt;
    }
    return Word(std::vector<Variable>(letters_.begin() + 1, letters_.end()));
  }

  /// Letters occurring an odd number of times.
  std::set<Variable> odd_letters() const {
    std::set<Variable> r;
    for (auto const& [x, k] : multiplicities()) {
      if (k % 2 == 1) {
        r.insert(x);
      }
    }
    return r;
  }

  Word reversed() const {
    return Word(std::vector<Variable>(letters_.rbegin(), letters_.rend()));
  }

  /// Commutative view: letters sorted.
  Word sorted() const {
    auto v = letters_;
    std::sort(v.begin(), v.end());
    return Word(std::move(v));
  }

  friend Word operator*(Word const& a, Word const& b) {
    auto v = a.letters_;
    v.insert(v.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(v));
  }

  friend auto operator<=>(Word const&, Word const&) = default;
  friend bool operator==(Word const&, Word const&) = default;

 private:
  std::vector<Variable> letters_;
};

struct WordMeasures {
  Variable h;
  Variable t;
  std::set<Variable> c;
  std::size_t length = 0;
  std::map<Variable, std::size_t> m;
  std::optional<Word> p;
  std::optional<Word> s;
  std::set<Variable> r;
};

inline WordMeasures word_measures(Word const& w) {
  return {w.head(),   w.tail(),   w.content(),  w.length(),
          w.multiplicities(), w.prefix(), w.suffix(), w.odd_letters()};
}

/// A finite nonempty set of words, kept sorted and duplicate-free.
class Term {
 public:
  explicit Term(std::vector<Word> words) : words_(std::move(words)) {
    if (words_.empty()) {
      throw EmptyWord("a term must contain at least one word");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  }
  Term(Word w) : words_{std::move(w)} {}  // NOLINT: a word is a term
  Term(std::initializer_list<Word> words) : Term(std::vector<Word>(words)) {}

  std::vector<Word> const& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool contains(Word const& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
  }
  /// Every summand of `other` is a summand of this term.
  bool includes(Term const& other) const {
    return std::includes(words_.begin(), words_.end(), other.words_.begin(),
                         other.words_.end());
  }

  std::set<Variable> content() const {
    std::set<Variable> c;
    for (auto const& w : words_) {
      c.insert(w.letters().begin(), w.letters().end());
    }
    return c;
  }

  Term reversed() const {
    std::vector<Word> v;
    for (auto const& w : words_) {
      v.push_back(w.reversed());
    }
    return Term(std::move(v));
  }

  Term sorted() const {
    std::vector<Word> v;
    for (auto const& w : words_) {
      v.push_back(w.sorted());
    }
    return Term(std::move(v));
  }

  friend bool operator==(Term const&, Term const&) = default;
  friend auto operator<=>(Term const&, Term const&) = default;

 private:
  std::vector<Word> words_;
};

inline Term term_sum(Term const& a, Term const& b) {
  std::vector<Word> v = a.words();
  v.insert(v.end(), b.words().begin(), b.words().end());
  return Term(std::move(v));
}

inline Term term_product(Term const& a, Term const& b) {
  std::vector<Word> v;
  v.reserve(a.size() * b.size());
  for (auto const& x : a.words()) {
    for (auto const& y : b.words()) {
      v.push_back(x * y);
    }
  }
  return Term(std::move(v));
}

struct TermMeasures {
  std::set<Variable> h;
  std::set<Variable> t;
  std::set<Variable> c;
  std::map<std::size_t, std::vector<Word>> by_length;

  std::vector<Word> L(std::size_t k) const {
    auto it = by_length.find(k);
    return it == by_length.end() ? std::vector<Word>{} : it->second;
  }
};

inline TermMeasures term_measures(Term const& u) {
  TermMeasures m;
  for (auto const& w : u.words()) {
    m.h.insert(w.head());
    m.t.insert(w.tail());
    m.c.insert(w.letters().begin(), w.letters().end());
    m.by_length[w.length()].push_back(w);
  }
  return m;
}

struct Identity {
  Term lhs;
  Term rhs;

  std::set<Variable> variables() const {
    auto c = lhs.content();
    auto d = rhs.content();
    c.insert(d.begin(), d.end());
    return c;
  }

  Identity reversed() const { return {lhs.reversed(), rhs.reversed()}; }

  friend bool operator==(Identity const&, Identity const&) = default;
};

/// u ≈ u + q.
struct SimpleIdentity {
  Term base;
  Word extra;

  bool trivial() const { return base.contains(extra); }
  Identity identity() const { return {base, term_sum(base, Term(extra))}; }
  SimpleIdentity reversed() const {
    return {base.reversed(), extra.reversed()};
  }

  friend bool operator==(SimpleIdentity const&, SimpleIdentity const&) =
      default;
};

/// u ≈ v is equivalent to the family u ≈ u+v_j, v ≈ v+u_i. Members whose
/// extra word is already a summand are kept; SimpleIdentity::trivial()
/// flags them.
inline std::vector<SimpleIdentity> normalize_identity(Identity const& id) {
  std::vector<SimpleIdentity> out;
  for (auto const& q : id.rhs.words()) {
    out.push_back({id.lhs, q});
  }
  for (auto const& q : id.lhs.words()) {
    out.push_back({id.rhs, q});
  }
  return out;
}

/// Recognizes identities of the shape u ≈ u+q (or u+q ≈ u) with q a single
/// word not in u; trivial shapes u ≈ u+q with q in u have u = rhs.
inline std::optional<SimpleIdentity> as_simple(Identity const& id) {
  auto try_side = [](Term const& u, Term const& uq) -> std::optional<SimpleIdentity> {
    if (!uq.includes(u)) {
      return std::nullopt;
    }
    if (uq.size() == u.size()) {
      // u ≈ u: represent as trivial with q = first summand.
      return SimpleIdentity{u, u.words().front()};
    }
    if (uq.size() != u.size() + 1) {
      return std::nullopt;
    }
    for (auto const& w : uq.words()) {
      if (!u.contains(w)) {
        return SimpleIdentity{u, w};
      }
    }
    return std::nullopt;
  };
  if (auto s = try_side(id.lhs, id.rhs)) {
    return s;
  }
  return try_side(id.rhs, id.lhs);
}

using Substitution = std::map<Variable, Term>;

inline Term substitute(Word const& w, Substitution const& sigma) {
  std::optional<Term> acc;
  for (auto x : w.letters()) {
    auto it = sigma.find(x);
    if (it == sigma.end()) {
      throw MissingVariable("substitution does not map " + x.str());
    }
    acc = acc ? term_product(*acc, it->second) : it->second;
  }
  return *acc;
}

inline Term substitute(Term const& t, Substitution const& sigma) {
  std::vector<Word> out;
  for (auto const& w : t.words()) {
    auto img = substitute(w, sigma);
    out.insert(out.end(), img.words().begin(), img.words().end());
  }
  return Term(std::move(out));
}

}  // namespace aisr

#endif  // INCLUDE_AISR_TERM_HPP_
