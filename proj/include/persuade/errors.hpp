// Copyright 2026 The persuade-lab Authors
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

#ifndef PERSUADE_ERRORS_HPP_
#define PERSUADE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace persuade {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Distribution weights do not sum to one within tolerance.
class WeightSumError : public Error {
 public:
  using Error::Error;
};

// A belief atom or weight lies outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Distribution mean does not match the stated prior.
class NotBayesPlausible : public Error {
 public:
  using Error::Error;
};

// Conditional decomposition requested at a degenerate prior.
class PriorBoundary : public Error {
 public:
  using Error::Error;
};

// Conclusive posteriors point at both states simultaneously.
class InconsistentEvidence : public Error {
 public:
  using Error::Error;
};

// Convex-order comparison across distributions with different means.
class MeanMismatch : public Error {
 public:
  using Error::Error;
};

// Outcome records for committees of different sizes.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptyMenu : public Error {
 public:
  using Error::Error;
};

// Constrained-lobbyist solver invoked on a non-dictatorial mechanism.
class NotADictatorship : public Error {
 public:
  using Error::Error;
};

// Payoff-comparison precondition (convex order) fails.
class NotComparable : public Error {
 public:
  using Error::Error;
};

// Scenario file is syntactically malformed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Scenario file is well-formed but violates a model invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace persuade

#endif  // PERSUADE_ERRORS_HPP_
