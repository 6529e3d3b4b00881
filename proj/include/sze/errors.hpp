// Copyright 2026 The sze Authors
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

namespace sze {

/// Invalid user input: malformed files, bad options, violated preconditions.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A text input could not be parsed. Carries the 1-based line number.
class ParseError : public ConfigError {
 public:
  ParseError(int line, const std::string& what)
      : ConfigError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A computation hit a configured resource cap (dense size, term count).
class NumericLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal self-check failed (e.g. Zassenhaus residual did not vanish).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sze
