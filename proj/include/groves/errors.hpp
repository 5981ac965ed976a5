// Copyright 2026 The Groves Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GROVES_ERRORS_HPP_
#define GROVES_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "groves/rational.hpp"

namespace groves {

// A precondition of a public operation does not hold.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A tabulated redistribution is missing an entry for some key.
class TotalityError : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

// An operation that requires a non-deficit mechanism received one that runs
// a deficit at `witness`.
class DeficitError : public ContractViolation {
 public:
  DeficitError(std::vector<Rational> witness, Rational total);

  const std::vector<Rational>& witness() const { return witness_; }
  const Rational& total_payment() const { return total_; }

 private:
  std::vector<Rational> witness_;
  Rational total_;
};

// Malformed mechanism spec input. `location()` is either "byte N" for
// syntax errors or a JSON pointer for semantic ones.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::string location, const std::string& message);

  const std::string& source() const { return source_; }
  const std::string& location() const { return location_; }

 private:
  std::string source_;
  std::string location_;
};

}  // namespace groves

#endif  // GROVES_ERRORS_HPP_
