// Copyright 2026 The sgames Authors.
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

#ifndef SGAMES_ERRORS_H_
#define SGAMES_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sgames {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: out-of-range players, mismatched lengths, bad JSON.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// Catalog parameters violate a family constraint.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

// Canonical decomposition was asked about a game with dummy players.
class DummiesPresent : public Error {
 public:
  using Error::Error;
};

}  // namespace sgames

#endif  // SGAMES_ERRORS_H_
