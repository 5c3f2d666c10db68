// Copyright 2026 The ebound Authors
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

#include "core/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>

namespace ebound {

namespace {

enum class NodeKind { number, variable, unary, binary, call };

}  // namespace

struct Expr::Node {
  NodeKind kind;
  double value = 0;           // number
  std::size_t var_index = 0;  // variable
  char op = 0;                // unary/binary
  std::string fname;          // call
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

struct Parser {
  const std::string& s;
  const std::vector<std::string>& vars;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::parse_error,
                "expression error at position " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  NodePtr make_num(double v) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = NodeKind::number;
    n->value = v;
    return n;
  }

  NodePtr parse_expr() { return parse_additive(); }

  NodePtr parse_additive() {
    NodePtr lhs = parse_multiplicative();
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        NodePtr rhs = parse_multiplicative();
        auto n = std::make_shared<Expr::Node>();
        n->kind = NodeKind::binary;
        n->op = c;
        n->args = {lhs, rhs};
        lhs = n;
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_multiplicative() {
    NodePtr lhs = parse_unary();
    for (;;) {
      char c = peek();
      if (c == '*' || c == '/') {
        ++pos;
        NodePtr rhs = parse_unary();
        auto n = std::make_shared<Expr::Node>();
        n->kind = NodeKind::binary;
        n->op = c;
        n->args = {lhs, rhs};
        lhs = n;
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    if (eat('-')) {
      auto n = std::make_shared<Expr::Node>();
      n->kind = NodeKind::unary;
      n->op = '-';
      n->args = {parse_unary()};
      return n;
    }
    if (eat('+')) return parse_unary();
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (peek() == '^') {
      ++pos;
      NodePtr exp = parse_unary();  // right associative
      auto n = std::make_shared<Expr::Node>();
      n->kind = NodeKind::binary;
      n->op = '^';
      n->args = {base, exp};
      return n;
    }
    return base;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = s.c_str() + pos;
      char* end = nullptr;
      double v = std::strtod(begin, &end);
      if (end == begin) fail("bad number");
      pos += end - begin;
      return make_num(v);
    }
    if (c == '(') {
      ++pos;
      NodePtr inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (peek() == '(') {
        ++pos;
        std::vector<NodePtr> args;
        if (peek() != ')') {
          args.push_back(parse_expr());
          while (eat(',')) args.push_back(parse_expr());
        }
        if (!eat(')')) fail("expected ')' after arguments");
        static const char* kUnary[] = {"abs", "exp", "log", "sqrt"};
        bool is_unary = false;
        for (const char* u : kUnary) is_unary = is_unary || name == u;
        if (is_unary) {
          if (args.size() != 1) fail(name + " takes one argument");
        } else if (name == "max" || name == "min") {
          if (args.size() < 2) fail(name + " takes at least two arguments");
        } else {
          fail("unknown function '" + name + "'");
        }
        auto n = std::make_shared<Expr::Node>();
        n->kind = NodeKind::call;
        n->fname = name;
        n->args = std::move(args);
        return n;
      }
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == name) {
          auto n = std::make_shared<Expr::Node>();
          n->kind = NodeKind::variable;
          n->var_index = i;
          return n;
        }
      }
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

double eval_node(const Expr::Node& n, const double* vars, std::size_t nvars) {
  switch (n.kind) {
    case NodeKind::number:
      return n.value;
    case NodeKind::variable:
      if (n.var_index >= nvars)
        throw Error(ErrorCode::invalid_argument, "variable index out of range");
      return vars[n.var_index];
    case NodeKind::unary:
      return -eval_node(*n.args[0], vars, nvars);
    case NodeKind::binary: {
      double a = eval_node(*n.args[0], vars, nvars);
      double b = eval_node(*n.args[1], vars, nvars);
      switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        case '^': return std::pow(a, b);
      }
      throw Error(ErrorCode::internal, "bad operator");
    }
    case NodeKind::call: {
      if (n.fname == "abs") return std::abs(eval_node(*n.args[0], vars, nvars));
      if (n.fname == "exp") return std::exp(eval_node(*n.args[0], vars, nvars));
      if (n.fname == "log") return std::log(eval_node(*n.args[0], vars, nvars));
      if (n.fname == "sqrt") return std::sqrt(eval_node(*n.args[0], vars, nvars));
      bool want_max = n.fname == "max";
      double best = eval_node(*n.args[0], vars, nvars);
      for (std::size_t i = 1; i < n.args.size(); ++i) {
        double v = eval_node(*n.args[i], vars, nvars);
        best = want_max ? std::max(best, v) : std::min(best, v);
      }
      return best;
    }
  }
  throw Error(ErrorCode::internal, "bad node");
}

}  // namespace

Expr Expr::parse(const std::string& text, const std::vector<std::string>& vars) {
  Parser p{text, vars};
  NodePtr root = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  Expr e;
  e.root_ = root;
  e.text_ = text;
  e.nvars_ = vars.size();
  return e;
}

double Expr::eval(const double* vars, std::size_t n) const {
  if (!root_) throw Error(ErrorCode::internal, "empty expression");
  return eval_node(*root_, vars, n);
}

}  // namespace ebound
