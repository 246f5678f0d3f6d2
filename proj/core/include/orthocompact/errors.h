// Copyright 2026 The orthocompact Authors
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

#ifndef ORTHOCOMPACT_ERRORS_H_
#define ORTHOCOMPACT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace orthocompact {

// Input violates a precondition of the drawing model (see Validate()).
class InvalidDrawingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A malformed .ogd file. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// No flow satisfies the bounds and demands of a network.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant; never triggered by valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace orthocompact

#endif  // ORTHOCOMPACT_ERRORS_H_
