// Copyright 2026 The zxalg Authors
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

namespace zxalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = 0, int column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) +
           ": " + message;
  }

  int line_;
  int column_;
};

/// Arity mismatch in sequential composition, or a malformed boundary.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs additive inverses was requested over a semiring.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Precondition violations: bad dimensions, unbound variables, bad arities.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace zxalg
