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

#include "choreo/sp_semantics.hpp"

#include <algorithm>

namespace choreo::sp {

std::vector<Step> successors(const DefSet& defs, const Network& n,
                             const State& s) {
  std::vector<Step> out;
  for (const auto& [p, b] : n.entries()) {
    std::visit(
        Overloaded{
            [&](const Send& a) {
              auto partner = n.at(a.to);
              if (const auto* r = std::get_if<Recv>(&partner.node);
                  r != nullptr && r->from == p) {
                Value v = eval(a.expr, s, p);
                out.push_back({TLCom{p, v, a.to},
                               n.with(p, *a.cont).with(a.to, *r->cont),
                               s.updated(a.to, r->var, v)});
              }
            },
            [&](const Choose& a) {
              auto partner = n.at(a.to);
              const auto* br = std::get_if<Branch>(&partner.node);
              if (br == nullptr || br->from != p) return;
              const auto& offered =
                  a.label == Label::kLeft ? br->left : br->right;
              if (!offered) return;
              out.push_back({TLSel{p, a.to, a.label},
                             n.with(p, *a.cont).with(a.to, **offered), s});
            },
            [&](const Cond& a) {
              const auto& next =
                  beval(a.guard, s, p) ? a.then_branch : a.else_branch;
              out.push_back({TLTau{p}, n.with(p, *next), s});
            },
            [&](const Call& a) {
              auto it = defs.find(a.name);
              if (it == defs.end()) {
                throw ExecutionError("process " + p.str() +
                                     " calls undefined procedure " +
                                     a.name.str());
              }
              out.push_back({TLTau{p}, n.with(p, it->second), s});
            },
            // Receives and branchings only move together with a partner.
            [](const Recv&) {},
            [](const Branch&) {},
            [](const End&) {},
        },
        b.node);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Step> enabled(const DefSet& defs, const Network& n,
                          const State& s) {
  if (!wf(n)) {
    throw std::invalid_argument("enabled: network is not well-formed");
  }
  return successors(defs, n, s);
}

std::vector<Run> traces(const DefSet& defs, const Network& n, const State& s,
                        std::size_t depth) {
  if (!wf(n)) {
    throw std::invalid_argument("traces: network is not well-formed");
  }
  std::vector<Run> all{{Trace{}, n, s}};
  std::vector<Run> frontier = all;
  for (std::size_t d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Run> next;
    for (const auto& run : frontier) {
      for (const auto& st : successors(defs, run.network, run.state)) {
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

std::vector<Config> replay(const DefSet& defs, const Network& n,
                           const State& s, const Trace& trace) {
  std::vector<Config> current{{n, s}};
  for (const auto& label : trace) {
    std::vector<Config> next;
    for (const auto& cfg : current) {
      for (const auto& st : successors(defs, cfg.network, cfg.state)) {
        if (st.label == label) next.push_back({st.next, st.state});
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
  }
  return current;
}

}  // namespace choreo::sp
