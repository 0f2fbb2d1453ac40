/*
 * Copyright (c) 2026, The choreo authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "choreo/expr.hpp"

namespace choreo {

Value eval(const Expr& e, const State& s, const Pid& p) {
  return std::visit(
      Overloaded{
          [](const Literal& l) { return l.value; },
          [&](const VarRef& v) { return s.get(p, v.name); },
          [&](const Succ& e1) { return eval(*e1.operand, s, p) + 1; },
      },
      e.node);
}

bool beval(const BExpr& b, const State& s, const Pid& p) {
  return std::visit(
      Overloaded{
          [](const BoolConst& c) { return c.value; },
          [&](const Compare& c) {
            Value lhs = eval(c.lhs, s, p);
            Value rhs = eval(c.rhs, s, p);
            return c.op == CmpOp::kEq ? lhs == rhs : lhs <= rhs;
          },
      },
      b.node);
}

}  // namespace choreo
