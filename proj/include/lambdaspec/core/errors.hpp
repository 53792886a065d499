// Copyright 2026 The lambdaspec Authors
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
#include <string>

namespace lambdaspec {

/// Bad input: wrong dimensions, negative rates, out-of-range parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine could not deliver a result within its tolerances.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigenvalue cluster whose eigenvectors are (numerically) linearly dependent.
class DefectiveSubspace : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// Resolvent evaluated on top of a non-excluded eigenvalue.
class SingularResolvent : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// Null space of a Liouvillian is not one-dimensional.
class DegenerateSteadyState : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// Fock truncation too small for the requested accuracy.
class TruncationError : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// Heating coefficient exceeds cooling coefficient; no thermal steady state.
class HeatingRegime : public std::runtime_error {
 public:
  HeatingRegime(const std::string& what, double a_plus, double a_minus)
      : std::runtime_error(what), a_plus_(a_plus), a_minus_(a_minus) {}

  double a_plus() const noexcept { return a_plus_; }
  double a_minus() const noexcept { return a_minus_; }

 private:
  double a_plus_;
  double a_minus_;
};

}  // namespace lambdaspec
