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

#include <memory>
#include <string>

namespace hdg {

/// Compiled scalar expression in the variables x and v. Supports + - * / ^,
/// unary minus, parentheses, numeric literals, the constants pi and e, and
/// sin cos tan exp log sqrt abs tanh cosh sinh.
class Expression {
public:
  struct Node;

  static Expression parse(const std::string& text);
  double operator()(double x, double v) const;
  const std::string& text() const { return text_; }

private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace hdg
