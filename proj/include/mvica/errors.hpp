// Copyright 2026  MVICA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef MVICA_ERRORS_HPP_
#define MVICA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mvica {

// Base of all library errors.  Two broad families matter for the CLI exit
// code contract: DataError -> exit 3, NumericalError -> exit 4.
struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct NumericalError : Error {
  using Error::Error;
};

struct DataError : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

// --- numerical failures -----------------------------------------------------

struct SingularMatrix : NumericalError {
  using NumericalError::NumericalError;
};

struct NotPositiveDefinite : NumericalError {
  using NumericalError::NumericalError;
};

struct DegenerateDirection : NumericalError {
  using NumericalError::NumericalError;
};

// --- shape / data failures --------------------------------------------------

struct ShapeMismatch : DataError {
  using DataError::DataError;
};

struct LengthMismatch : DataError {
  using DataError::DataError;
};

struct EmptySignal : DataError {
  using DataError::DataError;
};

struct BadGeometry : DataError {
  using DataError::DataError;
};

struct GeometryError : DataError {
  using DataError::DataError;
};

struct RirTooLong : DataError {
  using DataError::DataError;
};

struct SilentReference : DataError {
  using DataError::DataError;
};

struct BadMaskHeader : DataError {
  using DataError::DataError;
};

struct BadMaskData : DataError {
  using DataError::DataError;
};

struct IoError : DataError {
  using DataError::DataError;
};

struct UnknownAlgo : UsageError {
  using UsageError::UsageError;
};

}  // namespace mvica

#endif  // MVICA_ERRORS_HPP_
