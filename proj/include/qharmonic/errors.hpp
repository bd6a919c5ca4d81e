// Copyright 2026 The qharmonic Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QHARMONIC_ERRORS_HPP_
#define QHARMONIC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qharmonic {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (q not in (0,1), pole of a
/// Gamma function, invalid series parameters, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series or product hit SeriesControl::max_terms before its stopping rule.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Cancellation in an alternating sum exceeds what the configured precision
/// can resolve.
class CancellationError : public Error {
 public:
  using Error::Error;
};

/// Series terms left the floating-point range of the working type. Raised on
/// the double path, where it triggers escalation to high precision.
class RangeError : public CancellationError {
 public:
  using CancellationError::CancellationError;
};

/// Grid windows that are malformed or too small for the requested operation.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// Malformed grid or report file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace qharmonic

#endif  // QHARMONIC_ERRORS_HPP_
