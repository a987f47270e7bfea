// Copyright 2026 The twocp Authors
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

#include <stdexcept>
#include <string>

namespace twocp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain of an operation (n = 0, a
/// non-commutative algebra where a commutative one is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A value failed the certification an operation requires of it.
class CertificationError : public Error {
 public:
  CertificationError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}

  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

/// Malformed or schema-violating serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace twocp
