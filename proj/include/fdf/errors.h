// Copyright 2026 The FDF Authors
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

#ifndef FDF_ERRORS_H_
#define FDF_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fdf {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (too few points, empty label...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A corpus or model file could not be parsed. `line()` is 1-based, 0 when the
// error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A wavelet pyramid whose level sizes do not nest.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Two coincident points have no direction.
class DegenerateSegmentError : public Error {
 public:
  using Error::Error;
};

// No usable feature could be computed from a stroke.
class FeatureExtractionError : public Error {
 public:
  using Error::Error;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

}  // namespace fdf

#endif  // FDF_ERRORS_H_
