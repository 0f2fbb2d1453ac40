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

#include "choreo/projection.hpp"

#include <algorithm>
#include <stdexcept>

namespace choreo {

using sp::Behaviour;

namespace {

using MaybeBox = std::optional<Box<Behaviour>>;

// Slot-wise merge of branch offers: None/None stays None, a single offer is
// kept, two offers are merged. Returns false when the merge is undefined.
bool merge_offer(const MaybeBox& a, const MaybeBox& b, MaybeBox& out) {
  if (!a) {
    out = b;
    return true;
  }
  if (!b) {
    out = a;
    return true;
  }
  auto merged = merge(**a, **b);
  if (!merged) return false;
  out = Box<Behaviour>(std::move(*merged));
  return true;
}

}  // namespace

std::optional<Behaviour> merge(const Behaviour& a, const Behaviour& b) {
  if (a.node.index() != b.node.index()) return std::nullopt;
  return std::visit(
      Overloaded{
          [&](const sp::Send& x) -> std::optional<Behaviour> {
            const auto& y = std::get<sp::Send>(b.node);
            if (x.to != y.to || x.expr != y.expr) return std::nullopt;
            auto cont = merge(*x.cont, *y.cont);
            if (!cont) return std::nullopt;
            return sp::send(x.to, x.expr, std::move(*cont));
          },
          [&](const sp::Recv& x) -> std::optional<Behaviour> {
            const auto& y = std::get<sp::Recv>(b.node);
            if (x.from != y.from || x.var != y.var) return std::nullopt;
            auto cont = merge(*x.cont, *y.cont);
            if (!cont) return std::nullopt;
            return sp::recv(x.from, x.var, std::move(*cont));
          },
          [&](const sp::Choose& x) -> std::optional<Behaviour> {
            const auto& y = std::get<sp::Choose>(b.node);
            if (x.to != y.to || x.label != y.label) return std::nullopt;
            auto cont = merge(*x.cont, *y.cont);
            if (!cont) return std::nullopt;
            return sp::choose(x.to, x.label, std::move(*cont));
          },
          [&](const sp::Branch& x) -> std::optional<Behaviour> {
            const auto& y = std::get<sp::Branch>(b.node);
            if (x.from != y.from) return std::nullopt;
            sp::Branch out{x.from, std::nullopt, std::nullopt};
            if (!merge_offer(x.left, y.left, out.left) ||
                !merge_offer(x.right, y.right, out.right)) {
              return std::nullopt;
            }
            return Behaviour{std::move(out)};
          },
          [&](const sp::Cond& x) -> std::optional<Behaviour> {
            const auto& y = std::get<sp::Cond>(b.node);
            if (x.guard != y.guard) return std::nullopt;
            auto then_branch = merge(*x.then_branch, *y.then_branch);
            auto else_branch = merge(*x.else_branch, *y.else_branch);
            if (!then_branch || !else_branch) return std::nullopt;
            return sp::cond(x.guard, std::move(*then_branch),
                            std::move(*else_branch));
          },
          [&](const sp::Call& x) -> std::optional<Behaviour> {
            if (x.name != std::get<sp::Call>(b.node).name) return std::nullopt;
            return a;
          },
          [&](const sp::End&) -> std::optional<Behaviour> { return a; },
      },
      a.node);
}

RecVar instance_name(const RecVar& x, const Pid& p) {
  return RecVar(x.str() + "@" + p.str());
}

std::optional<Behaviour> project(const cc::DefSet& defs,
                                 const cc::Choreography& c, const Pid& r,
                                 std::optional<cc::Choreography>* blame) {
  return std::visit(
      Overloaded{
          [&](const cc::Prefix& n) -> std::optional<Behaviour> {
            auto cont = project(defs, *n.cont, r, blame);
            if (!cont) return std::nullopt;
            return std::visit(
                Overloaded{
                    [&](const cc::Com& e) -> Behaviour {
                      if (r == e.sender) {
                        return sp::send(e.receiver, e.expr, std::move(*cont));
                      }
                      if (r == e.receiver) {
                        return sp::recv(e.sender, e.var, std::move(*cont));
                      }
                      return std::move(*cont);
                    },
                    [&](const cc::Sel& e) -> Behaviour {
                      if (r == e.sender) {
                        return sp::choose(e.receiver, e.label,
                                          std::move(*cont));
                      }
                      if (r == e.receiver) {
                        if (e.label == Label::kLeft) {
                          return sp::branch(e.sender, std::move(*cont),
                                            std::nullopt);
                        }
                        return sp::branch(e.sender, std::nullopt,
                                          std::move(*cont));
                      }
                      return std::move(*cont);
                    },
                },
                n.eta);
          },
          [&](const cc::Cond& n) -> std::optional<Behaviour> {
            auto then_branch = project(defs, *n.then_branch, r, blame);
            if (!then_branch) return std::nullopt;
            auto else_branch = project(defs, *n.else_branch, r, blame);
            if (!else_branch) return std::nullopt;
            if (r == n.evaluator) {
              return sp::cond(n.guard, std::move(*then_branch),
                              std::move(*else_branch));
            }
            auto merged = merge(*then_branch, *else_branch);
            if (!merged && blame != nullptr && !blame->has_value()) {
              *blame = c;
            }
            return merged;
          },
          [&](const cc::Call& n) -> std::optional<Behaviour> {
            auto it = defs.find(n.name);
            if (it != defs.end() &&
                std::find(it->second.pids.begin(), it->second.pids.end(), r) !=
                    it->second.pids.end()) {
              return sp::call(instance_name(n.name, r));
            }
            return sp::end();
          },
          [&](const cc::RTCall& n) -> std::optional<Behaviour> {
            if (std::find(n.pending.begin(), n.pending.end(), r) !=
                n.pending.end()) {
              return sp::call(instance_name(n.name, r));
            }
            return project(defs, *n.body, r, blame);
          },
          [](const cc::End&) -> std::optional<Behaviour> { return sp::end(); },
      },
      c.node);
}

std::optional<Behaviour> project(const cc::DefSet& defs,
                                 const cc::Choreography& c, const Pid& r) {
  return project(defs, c, r, nullptr);
}

bool projectable(const cc::DefSet& defs, const cc::Choreography& c,
                 const Pid& p) {
  return project(defs, c, p).has_value();
}

bool projectable(const cc::DefSet& defs, const cc::Choreography& c,
                 const std::vector<Pid>& ps) {
  return std::all_of(ps.begin(), ps.end(),
                     [&](const Pid& p) { return projectable(defs, c, p); });
}

EppResult epp(const cc::Program& p) {
  if (!cc::program_wf(p)) {
    throw std::invalid_argument("epp: program is not well-formed");
  }
  EppResult result;
  sp::Program out;
  auto project_into = [&](const std::string& context,
                          const cc::Choreography& c, const Pid& r,
                          auto&& store) {
    std::optional<cc::Choreography> blame;
    auto b = project(p.procedures, c, r, &blame);
    if (b) {
      store(std::move(*b));
    } else {
      result.failures.push_back({context, blame.value_or(c), r});
    }
  };

  for (const auto& r : cc::pn(p)) {
    project_into("main", p.main, r, [&](Behaviour b) {
      out.network = out.network.with(r, std::move(b));
    });
  }
  for (const auto& [name, proc] : p.procedures) {
    for (const auto& r : proc.pids) {
      project_into(name.str(), proc.body, r, [&](Behaviour b) {
        out.procedures.insert_or_assign(instance_name(name, r), std::move(b));
      });
    }
  }
  if (result.failures.empty()) result.program = std::move(out);
  return result;
}

}  // namespace choreo
