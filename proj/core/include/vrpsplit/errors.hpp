// Copyright 2026 The vrpsplit Authors
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

#ifndef VRPSPLIT_ERRORS_HPP_
#define VRPSPLIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace vrpsplit {

// Base class for all library-specific failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unsupported input text. `line()` is 1-based, or -1 when the
// failure is not tied to a specific line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, int line = -1)
      : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Instance-level infeasibility detected at ingestion (e.g. a single demand
// exceeding the vehicle capacity).
class InfeasibleInstanceError : public Error {
 public:
  using Error::Error;
};

// Missing key in a registry (best-known objectives, ...).
class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace vrpsplit

#endif  // VRPSPLIT_ERRORS_HPP_
