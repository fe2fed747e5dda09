// Copyright 2026 The rigidmat Authors
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

#ifndef RIGIDMAT_ERRORS_HPP
#define RIGIDMAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rigidmat {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad parameters, out-of-range indices, ground mismatch.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// An exhaustive computation would exceed its configured budget. Never
/// thrown in place of a verdict: callers see either an answer or this.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The requested parameters fall outside what a deterministic routine
/// supports (for example min(s, r) > 3 in the tensor characterizations).
class Unsupported : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace rigidmat

#endif  // RIGIDMAT_ERRORS_HPP
