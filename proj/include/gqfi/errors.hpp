// Copyright 2026 The gqfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GQFI_ERRORS_HPP
#define GQFI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gqfi {

// Bad shapes, out-of-range indices, malformed parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A covariance matrix that violates the uncertainty relation, or a mixed
// state where a pure one is required.
class InvalidState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Eigensolver breakdown, unpaired symplectic spectra, large negative QFI.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument inside the formal range but where the function diverges.
class OutOfDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace gqfi

#endif  // GQFI_ERRORS_HPP
