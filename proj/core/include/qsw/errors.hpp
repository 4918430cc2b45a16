// Copyright 2026 The qswitch authors
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

#pragma once

#include <stdexcept>

namespace qsw {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands have incompatible dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Non-finite entries, norm violations, or otherwise unusable values.
class InvalidValue : public Error {
 public:
  using Error::Error;
};

// A gate required to be unitary is not.
class NotUnitary : public Error {
 public:
  using Error::Error;
};

// The two process vectors are parallel up to phase: the same process twice
// carries no sense of order, so no ordered description exists.
class OrderUndefined : public Error {
 public:
  using Error::Error;
};

}  // namespace qsw
