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

#include "groves/errors.hpp"

#include "groves/numerics.hpp"

namespace groves {

DeficitError::DeficitError(std::vector<Rational> witness, Rational total)
    : ContractViolation("mechanism runs a deficit of " + (-total).to_string() + " at profile (" +
                        join(witness) + ")"),
      witness_(std::move(witness)),
      total_(std::move(total)) {}

ParseError::ParseError(std::string source, std::string location, const std::string& message)
    : std::runtime_error(source + ": " + location + ": " + message),
      source_(std::move(source)),
      location_(std::move(location)) {}

}  // namespace groves
