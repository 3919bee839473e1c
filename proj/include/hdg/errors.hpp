// Copyright 2026 The hdgvp Authors
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

namespace hdg {

/// Base class of every error raised by the solver core.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (empty request, bad size...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Evaluation would overflow a double; usually a misconfigured v_max.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Rejected run configuration. The message names the offending key.
class ConfigError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

/// Non-finite values appeared during a solve.
class NumericalFailure : public Error {
public:
  NumericalFailure(const std::string& what, double t, int mode, int cell)
      : Error(what + " (t=" + std::to_string(t) + ", mode=" + std::to_string(mode) +
              ", cell=" + std::to_string(cell) + ")"),
        t_(t), mode_(mode), cell_(cell) {}

  double time() const noexcept { return t_; }
  int mode() const noexcept { return mode_; }
  int cell() const noexcept { return cell_; }

private:
  double t_;
  int mode_;
  int cell_;
};

}  // namespace hdg
