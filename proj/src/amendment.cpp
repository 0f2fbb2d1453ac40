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

#include "choreo/amendment.hpp"

#include <algorithm>
#include <stdexcept>

#include "choreo/projection.hpp"

namespace choreo {

std::vector<Pid> unprojectable_processes(const cc::DefSet& defs, const Pid& p,
                                         const BExpr& b,
                                         const std::vector<Pid>& ps,
                                         const cc::Choreography& c1,
                                         const cc::Choreography& c2) {
  const auto conditional = cc::cond(p, b, c1, c2);
  std::vector<Pid> out;
  for (const auto& r : ps) {
    if (r == p || projectable(defs, conditional, r)) continue;
    out.push_back(r);
  }
  return out;
}

cc::Choreography add_selections(const Pid& p, Label l,
                                const std::vector<Pid>& ps,
                                cc::Choreography c) {
  for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
    c = cc::sel(p, *it, l, std::move(c));
  }
  return c;
}

cc::Choreography amend(const cc::DefSet& defs, const std::vector<Pid>& ps,
                       const cc::Choreography& c) {
  return std::visit(
      Overloaded{
          [&](const cc::Prefix& n) {
            return cc::prefix(n.eta, amend(defs, ps, *n.cont));
          },
          [&](const cc::Cond& n) {
            auto then_branch = amend(defs, ps, *n.then_branch);
            auto else_branch = amend(defs, ps, *n.else_branch);
            auto informed = unprojectable_processes(
                defs, n.evaluator, n.guard, ps, then_branch, else_branch);
            return cc::cond(
                n.evaluator, n.guard,
                add_selections(n.evaluator, Label::kLeft, informed,
                               std::move(then_branch)),
                add_selections(n.evaluator, Label::kRight, informed,
                               std::move(else_branch)));
          },
          [&](const cc::RTCall& n) {
            return cc::rt_call(n.name, n.pending, amend(defs, ps, *n.body));
          },
          [&](const cc::Call&) { return c; },
          [&](const cc::End&) { return c; },
      },
      c.node);
}

cc::DefSet amend_defs(const cc::DefSet& defs, const std::vector<Pid>& ps) {
  cc::DefSet out;
  for (const auto& [name, proc] : defs) {
    out.emplace(name, cc::Procedure{proc.pids, amend(defs, ps, proc.body)});
  }
  return out;
}

cc::Program amend_program(const cc::Program& p) {
  if (!cc::program_wf(p)) {
    throw std::invalid_argument("amend_program: program is not well-formed");
  }
  const auto ps = cc::pn(p);
  return {amend_defs(p.procedures, ps), amend(p.procedures, ps, p.main)};
}

bool sel_exp(const Trace& base, const Trace& expanded) {
  if (expanded.size() < base.size()) return false;
  Trace a = base;
  Trace b = expanded;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  // Walk both bags; whatever `b` has in excess must be a selection.
  std::size_t i = 0;
  for (const auto& label : b) {
    if (i < a.size() && a[i] == label) {
      ++i;
    } else if (!is_selection(label)) {
      return false;
    }
  }
  return i == a.size();
}

}  // namespace choreo
