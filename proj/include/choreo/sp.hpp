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

#ifndef CHOREO_SP_HPP_
#define CHOREO_SP_HPP_

#include <compare>
#include <map>
#include <optional>
#include <variant>

#include "choreo/expr.hpp"
#include "choreo/names.hpp"

// Stateful processes: one behaviour per process, composed into networks.
namespace choreo::sp {

struct Behaviour;

/// p!e; B
struct Send {
  Pid to;
  Expr expr;
  Box<Behaviour> cont;
  friend bool operator==(const Send&, const Send&) = default;
  friend std::strong_ordering operator<=>(const Send&, const Send&) = default;
};

/// p?x; B
struct Recv {
  Pid from;
  Var var;
  Box<Behaviour> cont;
  friend bool operator==(const Recv&, const Recv&) = default;
  friend std::strong_ordering operator<=>(const Recv&, const Recv&) = default;
};

/// p+l; B
struct Choose {
  Pid to;
  Label label = Label::kLeft;
  Box<Behaviour> cont;
  friend bool operator==(const Choose&, const Choose&) = default;
  friend std::strong_ordering operator<=>(const Choose&,
                                          const Choose&) = default;
};

/// p & mB1 // mB2
struct Branch {
  Pid from;
  std::optional<Box<Behaviour>> left;
  std::optional<Box<Behaviour>> right;
  friend bool operator==(const Branch&, const Branch&) = default;
  friend std::strong_ordering operator<=>(const Branch&,
                                          const Branch&) = default;
};

struct Cond {
  BExpr guard;
  Box<Behaviour> then_branch;
  Box<Behaviour> else_branch;
  friend bool operator==(const Cond&, const Cond&) = default;
  friend std::strong_ordering operator<=>(const Cond&, const Cond&) = default;
};

struct Call {
  RecVar name;
  friend bool operator==(const Call&, const Call&) = default;
  friend std::strong_ordering operator<=>(const Call&, const Call&) = default;
};

struct End {
  friend bool operator==(const End&, const End&) = default;
  friend std::strong_ordering operator<=>(const End&, const End&) = default;
};

struct Behaviour {
  std::variant<Send, Recv, Choose, Branch, Cond, Call, End> node{End{}};

  bool is_end() const { return std::holds_alternative<End>(node); }

  friend bool operator==(const Behaviour&, const Behaviour&) = default;
  friend std::strong_ordering operator<=>(const Behaviour&,
                                          const Behaviour&) = default;
};

Behaviour end();
Behaviour send(const Pid& to, Expr e, Behaviour cont);
Behaviour recv(const Pid& from, const Var& x, Behaviour cont);
Behaviour choose(const Pid& to, Label l, Behaviour cont);
Behaviour branch(const Pid& from, std::optional<Behaviour> left,
                 std::optional<Behaviour> right);
Behaviour cond(BExpr b, Behaviour then_branch, Behaviour else_branch);
Behaviour call(const RecVar& x);

/// Process name -> behaviour, End everywhere else. End entries are never
/// stored, so structural equality is extensional equality.
class Network {
 public:
  using Entries = std::map<Pid, Behaviour>;

  Network() = default;

  /// p[B]
  static Network singleton(const Pid& p, Behaviour b);

  Behaviour at(const Pid& p) const;
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// N with p's behaviour replaced by `b`.
  Network with(const Pid& p, Behaviour b) const;

  /// N \ p
  Network without(const Pid& p) const;

  friend bool operator==(const Network&, const Network&) = default;
  friend std::strong_ordering operator<=>(const Network& a,
                                          const Network& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  Entries entries_;
};

/// N | N': N(p) where that is not End, N'(p) otherwise.
Network compose(const Network& n, const Network& m);
inline Network operator|(const Network& n, const Network& m) {
  return compose(n, m);
}
inline Network remove(const Network& n, const Pid& p) { return n.without(p); }

using DefSet = std::map<RecVar, Behaviour>;

struct Program {
  DefSet procedures;
  Network network;
  friend bool operator==(const Program&, const Program&) = default;
};

/// No behaviour addresses its own process.
bool wf(const Network& n);

}  // namespace choreo::sp

#endif  // CHOREO_SP_HPP_
