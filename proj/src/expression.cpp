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

#include "hdg/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include "hdg/errors.hpp"

namespace hdg {

struct Expression::Node {
  enum class Kind { Number, X, V, Neg, Add, Sub, Mul, Div, Pow, Call } kind = Kind::Number;
  double value = 0.0;
  double (*fn)(double) = nullptr;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;

  double eval(double x, double v) const {
    switch (kind) {
      case Kind::Number: return value;
      case Kind::X: return x;
      case Kind::V: return v;
      case Kind::Neg: return -a->eval(x, v);
      case Kind::Add: return a->eval(x, v) + b->eval(x, v);
      case Kind::Sub: return a->eval(x, v) - b->eval(x, v);
      case Kind::Mul: return a->eval(x, v) * b->eval(x, v);
      case Kind::Div: return a->eval(x, v) / b->eval(x, v);
      case Kind::Pow: return std::pow(a->eval(x, v), b->eval(x, v));
      case Kind::Call: return fn(a->eval(x, v));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

NodePtr make(Kind kind, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = kind;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr number(double value) {
  auto n = std::make_shared<Expression::Node>();
  n->value = value;
  return n;
}

struct Function {
  const char* name;
  double (*fn)(double);
};

const Function kFunctions[] = {
    {"sin", [](double t) { return std::sin(t); }},   {"cos", [](double t) { return std::cos(t); }},
    {"tan", [](double t) { return std::tan(t); }},   {"exp", [](double t) { return std::exp(t); }},
    {"log", [](double t) { return std::log(t); }},   {"sqrt", [](double t) { return std::sqrt(t); }},
    {"abs", [](double t) { return std::abs(t); }},   {"tanh", [](double t) { return std::tanh(t); }},
    {"cosh", [](double t) { return std::cosh(t); }}, {"sinh", [](double t) { return std::sinh(t); }},
};

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := '-' unary | '+' unary | power
// power  := atom ('^' unary)?
// atom   := number | name | name '(' expr ')' | '(' expr ')'
class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) {
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("expression \"" + s_ + "\": " + what + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Kind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = make(Kind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Kind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make(Kind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) {
      return make(Kind::Neg, unary());
    }
    if (accept('+')) {
      return unary();
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (accept('^')) {
      return make(Kind::Pow, base, unary());
    }
    return base;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) {
      fail("unexpected end of input");
    }
    const char c = s_[pos_];
    if (accept('(')) {
      NodePtr e = expr();
      if (!accept(')')) {
        fail("missing ')'");
      }
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double value = 0.0;
      const char* begin = s_.data() + pos_;
      const auto [end, ec] = std::from_chars(begin, s_.data() + s_.size(), value);
      if (ec != std::errc()) {
        fail("bad number");
      }
      pos_ += static_cast<std::size_t>(end - begin);
      return number(value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "x") return make(Kind::X);
      if (name == "v") return make(Kind::V);
      if (name == "pi") return number(std::numbers::pi);
      if (name == "e") return number(std::numbers::e);
      for (const auto& f : kFunctions) {
        if (name == f.name) {
          if (!accept('(')) {
            fail("expected '(' after " + name);
          }
          auto n = std::make_shared<Expression::Node>();
          n->kind = Kind::Call;
          n->fn = f.fn;
          n->a = expr();
          if (!accept(')')) {
            fail("missing ')'");
          }
          return n;
        }
      }
      pos_ = start;
      fail("unknown name '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.text_ = text;
  e.root_ = Parser(e.text_).parse();
  return e;
}

double Expression::operator()(double x, double v) const { return root_->eval(x, v); }

}  // namespace hdg
