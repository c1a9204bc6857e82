// Copyright 2026 The fogslice Authors
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

#ifndef FOGSLICE_ERRORS_HPP_
#define FOGSLICE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fogslice {

/// Base class for all fogslice errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Transmission rate b*c is zero; communication delay is undefined.
class ZeroRateError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Service rate does not exceed the arrival rate; the queue has no
/// stationary distribution.
class UnstableQueueError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The constraint set of a solve is empty (or no strictly interior
/// point could be constructed).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// A scenario file (or in-memory scenario) violates a structural
/// invariant that is checked at load time.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. Carries a human-readable location.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fogslice

#endif  // FOGSLICE_ERRORS_HPP_
