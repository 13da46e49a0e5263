// Copyright 2026 The dualsim Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace dualsim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes that do not fit together (non-square, mismatched lengths, bad wires).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Register or matrix larger than the supported dense limits.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NonUnitaryError : public Error {
 public:
  NonUnitaryError(const std::string& what, double defect)
      : Error(what), defect_(defect) {}

  /// max-norm of U^dagger U - I for the rejected matrix.
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

}  // namespace dualsim
