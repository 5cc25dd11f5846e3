// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "tmat/element_set.hpp"

namespace tmat {

// An element or set refers to something outside the ground set.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input document (JSON schema, unknown label, duplicate label).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive operation was asked to run above its ground-set bound.
class SizeBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// The caller violated an operation's precondition. When the violation is
// witnessed by a subset of the ground set, it is attached.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what,
                             std::optional<ElementSet> witness = std::nullopt)
      : std::invalid_argument(what), witness_(witness) {}

  const std::optional<ElementSet>& witness() const { return witness_; }

 private:
  std::optional<ElementSet> witness_;
};

// A result failed its own post-verification. Seeing one of these means a
// bug in this library, not bad input.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tmat
