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

#ifndef MATROID_ERROR_HPP_
#define MATROID_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace matroid {

// Malformed arguments: out-of-range elements, violated preconditions,
// ill-formed specs. The CLI maps these to exit status 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force routine was asked to exceed its configured bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// B + x is independent, so B + x contains no circuit.
class NoCircuitError : public InputError {
 public:
  using InputError::InputError;
};

// A certificate, chain or intermediate structure failed re-verification.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace matroid

#endif  // MATROID_ERROR_HPP_
