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

#ifndef CHOREO_SYNTAX_HPP_
#define CHOREO_SYNTAX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "choreo/cc.hpp"
#include "choreo/sp.hpp"
#include "choreo/state.hpp"
#include "choreo/verifier.hpp"

// Concrete syntax of choreographic programs, state files and function tables.
//
//   program := def* "main" "=" chor
//   def     := "def" NAME "(" pid ("," pid)* ")" "=" chor
//   chor    := eta ";" chor
//            | "if" pid "." bexpr "then" "{" chor "}" "else" "{" chor "}"
//            | "call" NAME | "end"
//   eta     := pid "." expr "->" pid "." var | pid "->" pid "[" label "]"
//   expr    := NAT | var | "succ" "(" expr ")"
//   bexpr   := "true" | "false" | expr "==" expr | expr "<=" expr
//
// Line comments start with '#' or "//".
namespace choreo::syntax {

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Diagnostic {
  enum class Severity { kError, kWarning };
  Severity severity = Severity::kError;
  Location begin;
  Location end;
  std::string message;
};

/// "3:14: error: expected '->'"
std::string to_string(const Diagnostic& d);

struct Definition {
  RecVar name;
  std::vector<Pid> pids;
  cc::Choreography body;
};

struct SourceUnit {
  std::vector<Definition> definitions;
  cc::Choreography main;

  cc::Program to_program() const;
};

struct ParseResult {
  std::optional<SourceUnit> unit;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return unit.has_value(); }
};

ParseResult parse_source(std::string_view text);

/// The inverse of to_program, definitions in name order.
SourceUnit from_program(const cc::Program& p);

std::string render(const Expr& e);
std::string render(const BExpr& b);
std::string render(const cc::Choreography& c);
/// Source text; parse_source(render(p)) gives back `p`.
std::string render(const cc::Program& p);
std::string render(const SourceUnit& unit);
std::string render(const sp::Behaviour& b);
/// One "p[ B ]" block per process, in process order.
std::string render(const sp::Network& n);
std::string render(const sp::Program& p);
/// "p.x = 3" lines.
std::string render(const State& s);

template <class T>
struct Parsed {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
};

/// Lines "p.x = 3"; unmentioned variables are 0.
Parsed<State> parse_state(std::string_view text);

/// Lines "n1,n2 -> n" or "n1,n2 -> undef".
Parsed<verify::FnTable> parse_table(std::string_view text);

}  // namespace choreo::syntax

#endif  // CHOREO_SYNTAX_HPP_
