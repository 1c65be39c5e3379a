// Copyright 2026 The pfaffkit Authors
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

#ifndef PFAFF_ERRORS_HPP
#define PFAFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pfaff {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (unknown vertex, wrong
/// degree, factor of a different graph, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A search hit its configured budget before reaching an answer. This is
/// distinct from a negative answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line number, or 0 when the
/// problem is not tied to one line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace pfaff

#endif  // PFAFF_ERRORS_HPP
