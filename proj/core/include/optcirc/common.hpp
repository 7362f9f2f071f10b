// Copyright 2026 The optcirc Authors
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

#include <complex>
#include <stdexcept>
#include <string>

namespace optcirc {

using Complex = std::complex<double>;

namespace tol {

// Operator inequalities (positivity, trace bounds) are checked with an
// absolute eigenvalue slack; functional equalities between maps use the
// tighter bound.
inline constexpr double kOperator = 1e-9;
inline constexpr double kFunctional = 1e-12;

// Verdict thresholds for the causality checks.
inline constexpr double kCausality = 1e-9;
inline constexpr double kFalsification = 1e-12;

}  // namespace tol

// Dense contraction refuses to grow a composite system past this dimension.
inline constexpr int kMaxCompositeDimension = 1024;

// Upper bound on the number of entries of a joint outcome table.
inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 20;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class PayloadError : public Error {
 public:
  using Error::Error;
};

class CutError : public Error {
 public:
  using Error::Error;
};

// Raised by the text parsers; carries the 1-based offending line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace optcirc
