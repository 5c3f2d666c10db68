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

#ifndef EBOUND_CORE_EXPR_HPP_
#define EBOUND_CORE_EXPR_HPP_

#include <memory>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace ebound {

/// Small arithmetic expression over named scalar variables.
/// Grammar: +, -, *, /, ^ (right assoc), unary -, parentheses, and the
/// functions abs, max, min, exp, log, sqrt. Numbers are C doubles.
class Expr {
 public:
  /// Parses `text` against the given variable names. Unknown identifiers are
  /// a parse error carrying the offending position.
  static Expr parse(const std::string& text, const std::vector<std::string>& vars);

  double eval(const double* vars, std::size_t n) const;
  double eval(const Vec& vars) const { return eval(vars.data(), vars.size()); }

  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
  std::size_t nvars_ = 0;
};

}  // namespace ebound

#endif  // EBOUND_CORE_EXPR_HPP_
