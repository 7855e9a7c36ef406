// Copyright 2026 The boolcx Authors
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

#ifndef BOOLCX_ERRORS_HPP_
#define BOOLCX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace boolcx {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad parameters, unparsable spec files, precondition
// violations the caller could have avoided.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured resource bound (arity, pivot count, walk length) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// The simplex pivot cap was hit. Never reported as infeasibility.
class LpIterationLimit : public BoundExceeded {
 public:
  using BoundExceeded::BoundExceeded;
};

// A random walk hit its step cap before absorbing.
class WalkStepCap : public BoundExceeded {
 public:
  using BoundExceeded::BoundExceeded;
};

// A constructed object failed its own post-hoc verification.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace boolcx

#endif  // BOOLCX_ERRORS_HPP_
