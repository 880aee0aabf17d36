// Copyright 2026 The hcover Authors
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

#ifndef HCOVER_ERRORS_HPP_
#define HCOVER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hcover {

// Argument outside the mathematical domain of an operation (negative t,
// r outside (0,1), a > b for an interval, empty set for dist_to_set, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input: non-square matrices, bad JSON, digits out of range.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A solver declined to run: size limits, unverified preconditions.
class SolverRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hcover

#endif  // HCOVER_ERRORS_HPP_
