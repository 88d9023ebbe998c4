// Copyright 2026 The boxdm Authors
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

#ifndef BOXDM_ERRORS_HPP_
#define BOXDM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace boxdm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions or a SpaceLayout do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside its documented domain (n = 0, empty keep set, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A ket or an amplitude pair is not normalized.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be Hermitian is not.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// A matrix fails one of the density-matrix conditions.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Conditioning on an outcome whose probability is (numerically) zero.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

/// A wavefunction cannot be split at x = 0 because it does not vanish there.
class SplitPointError : public Error {
 public:
  using Error::Error;
};

}  // namespace boxdm

#endif  // BOXDM_ERRORS_HPP_
