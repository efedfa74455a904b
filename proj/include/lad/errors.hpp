/*
   Copyright 2026 The lad authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace lad {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Multiplicative inverse of zero requested.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// A configured cap was hit (basis size, leading degree, exponent range,
// truncation breadth, staircase overflow). Hard error, never a silent answer.
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

// Truncation levels did not stabilize below the cap: the quotient is not of
// finite length at the origin, or the cap is too low. The message says which
// behaviour was observed.
class NotFiniteColength : public Error {
 public:
  using Error::Error;
};

// Krull dimension of the zero ring requested (unit ideal).
class UndefinedDimension : public Error {
 public:
  using Error::Error;
};

// induced_endo called on an ideal that is not stable under the endomorphism.
class UnstableIdeal : public Error {
 public:
  using Error::Error;
};

// A declared object violates its contract (non-local images, ill-defined
// endomorphism, missing assumption flags, ...).
class ValidationFailed : public Error {
 public:
  using Error::Error;
};

// Parse errors carry a 1-based line/column position.
class PositionedError : public Error {
 public:
  PositionedError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class SyntaxError : public PositionedError {
 public:
  using PositionedError::PositionedError;
};

class SemanticError : public PositionedError {
 public:
  using PositionedError::PositionedError;
  explicit SemanticError(const std::string& msg) : PositionedError(msg, 0, 0) {}
};

}  // namespace lad
