// Copyright 2026 The bipotkit Authors
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

#ifndef BIPOTKIT_ERROR_H_
#define BIPOTKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace bipotkit {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands of different dimension were combined.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant failed numerically (for example a negative
// Fenchel gap). Indicates a bug in the library, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace bipotkit

#endif  // BIPOTKIT_ERROR_H_
