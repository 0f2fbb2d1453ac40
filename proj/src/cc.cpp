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

#include "choreo/cc.hpp"

#include <algorithm>

namespace choreo::cc {

const Pid& sender(const Eta& eta) {
  return std::visit([](const auto& e) -> const Pid& { return e.sender; }, eta);
}

const Pid& receiver(const Eta& eta) {
  return std::visit([](const auto& e) -> const Pid& { return e.receiver; },
                    eta);
}

Choreography end() { return Choreography{End{}}; }

Choreography com(const Pid& p, Expr e, const Pid& q, const Var& x,
                 Choreography cont) {
  return prefix(Com{p, std::move(e), q, x}, std::move(cont));
}

Choreography sel(const Pid& p, const Pid& q, Label l, Choreography cont) {
  return prefix(Sel{p, q, l}, std::move(cont));
}

Choreography prefix(Eta eta, Choreography cont) {
  return Choreography{Prefix{std::move(eta), std::move(cont)}};
}

Choreography cond(const Pid& p, BExpr b, Choreography then_branch,
                  Choreography else_branch) {
  return Choreography{Cond{p, std::move(b), std::move(then_branch),
                           std::move(else_branch)}};
}

Choreography call(const RecVar& x) { return Choreography{Call{x}}; }

Choreography rt_call(const RecVar& x, std::vector<Pid> pending,
                     Choreography body) {
  return Choreography{RTCall{x, std::move(pending), std::move(body)}};
}

namespace {

bool duplicate_free(std::vector<Pid> ps) {
  std::sort(ps.begin(), ps.end());
  return std::adjacent_find(ps.begin(), ps.end()) == ps.end();
}

void collect_processes(const Choreography& c, const DefSet& defs,
                       std::set<Pid>& out) {
  std::visit(Overloaded{
                 [&](const Prefix& n) {
                   out.insert(sender(n.eta));
                   out.insert(receiver(n.eta));
                   collect_processes(*n.cont, defs, out);
                 },
                 [&](const Cond& n) {
                   out.insert(n.evaluator);
                   collect_processes(*n.then_branch, defs, out);
                   collect_processes(*n.else_branch, defs, out);
                 },
                 [&](const Call& n) {
                   if (auto it = defs.find(n.name); it != defs.end()) {
                     out.insert(it->second.pids.begin(),
                                it->second.pids.end());
                   }
                 },
                 [&](const RTCall& n) {
                   out.insert(n.pending.begin(), n.pending.end());
                   collect_processes(*n.body, defs, out);
                 },
                 [](const End&) {},
             },
             c.node);
}

// Every Call/RTCall names a procedure of `defs`; RTCall pending lists are
// drawn from the callee's processes.
bool calls_defined(const Choreography& c, const DefSet& defs) {
  return std::visit(
      Overloaded{
          [&](const Prefix& n) { return calls_defined(*n.cont, defs); },
          [&](const Cond& n) {
            return calls_defined(*n.then_branch, defs) &&
                   calls_defined(*n.else_branch, defs);
          },
          [&](const Call& n) { return defs.contains(n.name); },
          [&](const RTCall& n) {
            auto it = defs.find(n.name);
            if (it == defs.end()) return false;
            const auto& pids = it->second.pids;
            for (const auto& p : n.pending) {
              if (std::find(pids.begin(), pids.end(), p) == pids.end()) {
                return false;
              }
            }
            return calls_defined(*n.body, defs);
          },
          [](const End&) { return true; },
      },
      c.node);
}

}  // namespace

bool wf(const Choreography& c) {
  return std::visit(
      Overloaded{
          [](const Prefix& n) {
            return sender(n.eta) != receiver(n.eta) && wf(*n.cont);
          },
          [](const Cond& n) { return wf(*n.then_branch) && wf(*n.else_branch); },
          [](const Call&) { return true; },
          [](const RTCall& n) {
            return duplicate_free(n.pending) && wf(*n.body);
          },
          [](const End&) { return true; },
      },
      c.node);
}

bool program_wf(const Program& p) {
  for (const auto& [name, proc] : p.procedures) {
    if (proc.pids.empty() || !duplicate_free(proc.pids)) return false;
    if (!wf(proc.body) || !calls_defined(proc.body, p.procedures)) {
      return false;
    }
    for (const auto& used : processes(proc.body, p.procedures)) {
      if (std::find(proc.pids.begin(), proc.pids.end(), used) ==
          proc.pids.end()) {
        return false;
      }
    }
  }
  return wf(p.main) && calls_defined(p.main, p.procedures);
}

std::set<Pid> processes(const Choreography& c, const DefSet& defs) {
  std::set<Pid> out;
  collect_processes(c, defs, out);
  return out;
}

std::vector<Pid> pn(const Program& p) {
  std::set<Pid> out = processes(p.main, p.procedures);
  for (const auto& [name, proc] : p.procedures) {
    out.insert(proc.pids.begin(), proc.pids.end());
  }
  return {out.begin(), out.end()};
}

std::size_t size(const Choreography& c) {
  return std::visit(
      Overloaded{
          [](const Prefix& n) { return 1 + size(*n.cont); },
          [](const Cond& n) {
            return 1 + size(*n.then_branch) + size(*n.else_branch);
          },
          [](const Call&) -> std::size_t { return 1; },
          [](const RTCall& n) { return 1 + size(*n.body); },
          [](const End&) -> std::size_t { return 1; },
      },
      c.node);
}

}  // namespace choreo::cc
