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

#ifndef CHOREO_EXPR_HPP_
#define CHOREO_EXPR_HPP_

#include <compare>
#include <variant>

#include "choreo/names.hpp"
#include "choreo/state.hpp"

namespace choreo {

struct Expr;

struct Literal {
  Value value = 0;
  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal&,
                                          const Literal&) = default;
};

struct VarRef {
  Var name;
  friend bool operator==(const VarRef&, const VarRef&) = default;
  friend std::strong_ordering operator<=>(const VarRef&,
                                          const VarRef&) = default;
};

struct Succ {
  Box<Expr> operand;
  friend bool operator==(const Succ&, const Succ&) = default;
  friend std::strong_ordering operator<=>(const Succ&, const Succ&) = default;
};

/// Local expressions: natural literals, variables and successor.
struct Expr {
  std::variant<Literal, VarRef, Succ> node;

  friend bool operator==(const Expr&, const Expr&) = default;
  friend std::strong_ordering operator<=>(const Expr&, const Expr&) = default;
};

inline Expr lit(Value v) { return Expr{Literal{v}}; }
inline Expr var(const Var& x) { return Expr{VarRef{x}}; }
inline Expr var(const char* x) { return Expr{VarRef{Var(x)}}; }
inline Expr succ(Expr e) { return Expr{Succ{Box<Expr>(std::move(e))}}; }

enum class CmpOp : std::uint8_t { kEq, kLe };

struct BoolConst {
  bool value = true;
  friend bool operator==(const BoolConst&, const BoolConst&) = default;
  friend std::strong_ordering operator<=>(const BoolConst&,
                                          const BoolConst&) = default;
};

struct Compare {
  CmpOp op = CmpOp::kEq;
  Expr lhs;
  Expr rhs;
  friend bool operator==(const Compare&, const Compare&) = default;
  friend std::strong_ordering operator<=>(const Compare&,
                                          const Compare&) = default;
};

/// Guards: true, false, e1 == e2, e1 <= e2.
struct BExpr {
  std::variant<BoolConst, Compare> node;

  friend bool operator==(const BExpr&, const BExpr&) = default;
  friend std::strong_ordering operator<=>(const BExpr&,
                                          const BExpr&) = default;
};

inline BExpr btrue() { return BExpr{BoolConst{true}}; }
inline BExpr bfalse() { return BExpr{BoolConst{false}}; }
inline BExpr eq(Expr a, Expr b) {
  return BExpr{Compare{CmpOp::kEq, std::move(a), std::move(b)}};
}
inline BExpr le(Expr a, Expr b) {
  return BExpr{Compare{CmpOp::kLe, std::move(a), std::move(b)}};
}

/// Evaluates `e` in the memory of process `p`.
Value eval(const Expr& e, const State& s, const Pid& p);
bool beval(const BExpr& b, const State& s, const Pid& p);

}  // namespace choreo

#endif  // CHOREO_EXPR_HPP_
