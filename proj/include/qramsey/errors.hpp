// Copyright 2026 The qramsey Authors
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

namespace qramsey {

/**
 * Raised when the caller's input cannot be processed: wrong shapes, ranks
 * out of range, or a size precondition that does not hold. The CLI maps
 * every subclass to exit code 2.
 */
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Raised when a numerical search gave up or produced something that failed
 * verification. The CLI maps every subclass to exit code 3.
 */
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, double best)
      : std::runtime_error(what), best_(best) {}

  /** Best residual (or best acceptance statistic) reached before giving up. */
  double best() const { return best_; }

 private:
  double best_;
};

#define QRAMSEY_INPUT_ERROR(Name)          \
  class Name : public InputError {         \
   public:                                 \
    using InputError::InputError;          \
  };

QRAMSEY_INPUT_ERROR(NonHermitianInput)
QRAMSEY_INPUT_ERROR(DimensionMismatch)
QRAMSEY_INPUT_ERROR(BadDimension)
QRAMSEY_INPUT_ERROR(BadRank)
QRAMSEY_INPUT_ERROR(NotAnIsometry)
QRAMSEY_INPUT_ERROR(LambdaOutOfRange)
QRAMSEY_INPUT_ERROR(DimTooLarge)
QRAMSEY_INPUT_ERROR(DimTooSmall)
QRAMSEY_INPUT_ERROR(NotApplicable)
QRAMSEY_INPUT_ERROR(PreconditionViolated)
QRAMSEY_INPUT_ERROR(BadParameters)
QRAMSEY_INPUT_ERROR(SchemaError)

#undef QRAMSEY_INPUT_ERROR

class SolverFailed : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class SearchFailed : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class NotAnticlique : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

}  // namespace qramsey
