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

#ifndef CHOREO_CC_HPP_
#define CHOREO_CC_HPP_

#include <compare>
#include <map>
#include <set>
#include <variant>
#include <vector>

#include "choreo/expr.hpp"
#include "choreo/names.hpp"

// Core choreographies: global programs over a set of processes.
namespace choreo::cc {

/// p.e --> q.x
struct Com {
  Pid sender;
  Expr expr;
  Pid receiver;
  Var var;
  friend bool operator==(const Com&, const Com&) = default;
  friend std::strong_ordering operator<=>(const Com&, const Com&) = default;
};

/// p --> q[l]
struct Sel {
  Pid sender;
  Pid receiver;
  Label label = Label::kLeft;
  friend bool operator==(const Sel&, const Sel&) = default;
  friend std::strong_ordering operator<=>(const Sel&, const Sel&) = default;
};

using Eta = std::variant<Com, Sel>;

const Pid& sender(const Eta& eta);
const Pid& receiver(const Eta& eta);

struct Choreography;

struct Prefix {
  Eta eta;
  Box<Choreography> cont;
  friend bool operator==(const Prefix&, const Prefix&) = default;
  friend std::strong_ordering operator<=>(const Prefix&,
                                          const Prefix&) = default;
};

/// If p.b Then C1 Else C2
struct Cond {
  Pid evaluator;
  BExpr guard;
  Box<Choreography> then_branch;
  Box<Choreography> else_branch;
  friend bool operator==(const Cond&, const Cond&) = default;
  friend std::strong_ordering operator<=>(const Cond&, const Cond&) = default;
};

struct Call {
  RecVar name;
  friend bool operator==(const Call&, const Call&) = default;
  friend std::strong_ordering operator<=>(const Call&, const Call&) = default;
};

/// Runtime term: procedure `name` entered by some of its processes; the ones
/// in `pending` have not entered yet.
struct RTCall {
  RecVar name;
  std::vector<Pid> pending;
  Box<Choreography> body;
  friend bool operator==(const RTCall&, const RTCall&) = default;
  friend std::strong_ordering operator<=>(const RTCall&,
                                          const RTCall&) = default;
};

struct End {
  friend bool operator==(const End&, const End&) = default;
  friend std::strong_ordering operator<=>(const End&, const End&) = default;
};

struct Choreography {
  std::variant<Prefix, Cond, Call, RTCall, End> node{End{}};

  bool is_end() const { return std::holds_alternative<End>(node); }

  friend bool operator==(const Choreography&, const Choreography&) = default;
  friend std::strong_ordering operator<=>(const Choreography&,
                                          const Choreography&) = default;
};

// Construction helpers.
Choreography end();
Choreography com(const Pid& p, Expr e, const Pid& q, const Var& x,
                 Choreography cont);
Choreography sel(const Pid& p, const Pid& q, Label l, Choreography cont);
Choreography prefix(Eta eta, Choreography cont);
Choreography cond(const Pid& p, BExpr b, Choreography then_branch,
                  Choreography else_branch);
Choreography call(const RecVar& x);
Choreography rt_call(const RecVar& x, std::vector<Pid> pending,
                     Choreography body);

struct Procedure {
  std::vector<Pid> pids;
  Choreography body;
  friend bool operator==(const Procedure&, const Procedure&) = default;
  friend std::strong_ordering operator<=>(const Procedure&,
                                          const Procedure&) = default;
};

/// Finite set of procedure definitions.
using DefSet = std::map<RecVar, Procedure>;

struct Program {
  DefSet procedures;
  Choreography main;
  friend bool operator==(const Program&, const Program&) = default;
};

/// No self-communication anywhere in `c`; RTCall pending lists are
/// duplicate-free.
bool wf(const Choreography& c);

/// wf for main and all bodies, every call names a defined procedure, and
/// every body only uses its declared processes.
bool program_wf(const Program& p);

/// Processes occurring syntactically in `c`. Calls contribute the declared
/// processes of the callee when `defs` knows it.
std::set<Pid> processes(const Choreography& c, const DefSet& defs = {});

/// Processes of main plus the declared processes of every procedure, in
/// lexicographic order.
std::vector<Pid> pn(const Program& p);

/// Number of Prefix/Cond/Call/RTCall/End nodes.
std::size_t size(const Choreography& c);

}  // namespace choreo::cc

#endif  // CHOREO_CC_HPP_
