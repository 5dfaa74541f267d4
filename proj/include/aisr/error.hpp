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

#ifndef INCLUDE_AISR_ERROR_HPP_
#define INCLUDE_AISR_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aisr {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tables of the wrong shape or with entries outside the carrier.
class MalformedTable : public Error {
 public:
  using Error::Error;
};

// Well-formed tables that break one of the ai-semiring laws.
class InvalidSemiring : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " +
              message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A word with no letters; X+ has no empty word.
class EmptyWord : public Error {
 public:
  using Error::Error;
};

// Assignment or substitution not defined on a variable of the term.
class MissingVariable : public Error {
 public:
  using Error::Error;
};

// Exhaustive evaluation would exceed the assignment budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A construction was applied to an algebra outside its domain
// (non-flat semiring, semigroup without zero, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written, or its JSON has the wrong shape.
class IoError : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

// Structurally broken derivation certificate (as opposed to a step that
// simply fails to check).
class MalformedCertificate : public Error {
 public:
  using Error::Error;
};

}  // namespace aisr

#endif  // INCLUDE_AISR_ERROR_HPP_
