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

#include "choreo/cc_semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace choreo::cc {
namespace {

void normalize(std::vector<Step>& steps) {
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
}

bool mentions_any(const TransitionLabel& t, const std::vector<Pid>& ps) {
  return std::any_of(ps.begin(), ps.end(),
                     [&](const Pid& p) { return mentions(t, p); });
}

std::vector<Pid> without(const std::vector<Pid>& ps, const Pid& p) {
  std::vector<Pid> out;
  std::copy_if(ps.begin(), ps.end(), std::back_inserter(out),
               [&](const Pid& q) { return q != p; });
  return out;
}

// Procedure entry by `p`: the call becomes a runtime term waiting for the
// other processes, or the body itself once nobody is pending.
Choreography enter(const RecVar& name, const std::vector<Pid>& pending,
                   const Pid& p, const Choreography& body) {
  auto rest = without(pending, p);
  return rest.empty() ? body : rt_call(name, std::move(rest), body);
}

std::vector<Step> step(const DefSet& defs, const Choreography& c,
                       const State& s) {
  std::vector<Step> out;
  std::visit(
      Overloaded{
          [&](const Prefix& n) {
            std::visit(Overloaded{
                           [&](const Com& e) {
                             Value v = eval(e.expr, s, e.sender);
                             out.push_back({TLCom{e.sender, v, e.receiver},
                                            *n.cont,
                                            s.updated(e.receiver, e.var, v)});
                           },
                           [&](const Sel& e) {
                             out.push_back(
                                 {TLSel{e.sender, e.receiver, e.label},
                                  *n.cont, s});
                           },
                       },
                       n.eta);
            // Delay past the prefix when the processes are disjoint.
            const Pid& p = sender(n.eta);
            const Pid& q = receiver(n.eta);
            for (auto& later : step(defs, *n.cont, s)) {
              if (mentions(later.label, p) || mentions(later.label, q)) {
                continue;
              }
              out.push_back({std::move(later.label),
                             prefix(n.eta, std::move(later.next)),
                             std::move(later.state)});
            }
          },
          [&](const Cond& n) {
            if (beval(n.guard, s, n.evaluator)) {
              out.push_back({TLTau{n.evaluator}, *n.then_branch, s});
            } else {
              out.push_back({TLTau{n.evaluator}, *n.else_branch, s});
            }
            // Delay past the conditional: both branches must agree on the
            // label and on the resulting state.
            auto thens = step(defs, *n.then_branch, s);
            auto elses = step(defs, *n.else_branch, s);
            for (const auto& a : thens) {
              if (mentions(a.label, n.evaluator)) continue;
              for (const auto& b : elses) {
                if (a.label == b.label && a.state == b.state) {
                  out.push_back({a.label,
                                 cond(n.evaluator, n.guard, a.next, b.next),
                                 a.state});
                }
              }
            }
          },
          [&](const Call& n) {
            const Procedure& proc = defs.at(n.name);
            for (const auto& p : proc.pids) {
              out.push_back(
                  {TLTau{p}, enter(n.name, proc.pids, p, proc.body), s});
            }
          },
          [&](const RTCall& n) {
            for (const auto& p : n.pending) {
              out.push_back({TLTau{p}, enter(n.name, n.pending, p, *n.body), s});
            }
            for (auto& inner : step(defs, *n.body, s)) {
              if (mentions_any(inner.label, n.pending)) continue;
              out.push_back({std::move(inner.label),
                             rt_call(n.name, n.pending, std::move(inner.next)),
                             std::move(inner.state)});
            }
          },
          [](const End&) {},
      },
      c.node);
  return out;
}

}  // namespace

std::vector<Step> successors(const DefSet& defs, const Choreography& c,
                             const State& s) {
  auto out = step(defs, c, s);
  normalize(out);
  return out;
}

std::vector<Step> enabled(const DefSet& defs, const Choreography& c,
                          const State& s) {
  if (!program_wf(Program{defs, c})) {
    throw std::invalid_argument("enabled: program is not well-formed");
  }
  return successors(defs, c, s);
}

std::vector<Run> traces(const DefSet& defs, const Choreography& c,
                        const State& s, std::size_t depth) {
  if (!program_wf(Program{defs, c})) {
    throw std::invalid_argument("traces: program is not well-formed");
  }
  std::vector<Run> all{{Trace{}, c, s}};
  std::vector<Run> frontier = all;
  for (std::size_t d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Run> next;
    for (const auto& run : frontier) {
      for (const auto& st : successors(defs, run.chor, run.state)) {
        Trace trace = run.trace;
        trace.push_back(st.label);
        next.push_back({std::move(trace), st.next, st.state});
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<Config> replay(const DefSet& defs, const Choreography& c,
                           const State& s, const Trace& trace) {
  std::vector<Config> current{{c, s}};
  for (const auto& label : trace) {
    std::vector<Config> next;
    for (const auto& cfg : current) {
      for (const auto& st : successors(defs, cfg.chor, cfg.state)) {
        if (st.label == label) next.push_back({st.next, st.state});
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
  }
  return current;
}

}  // namespace choreo::cc
