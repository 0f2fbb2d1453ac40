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

#include "choreo/sp.hpp"

namespace choreo::sp {

Behaviour end() { return Behaviour{End{}}; }

Behaviour send(const Pid& to, Expr e, Behaviour cont) {
  return Behaviour{Send{to, std::move(e), std::move(cont)}};
}

Behaviour recv(const Pid& from, const Var& x, Behaviour cont) {
  return Behaviour{Recv{from, x, std::move(cont)}};
}

Behaviour choose(const Pid& to, Label l, Behaviour cont) {
  return Behaviour{Choose{to, l, std::move(cont)}};
}

Behaviour branch(const Pid& from, std::optional<Behaviour> left,
                 std::optional<Behaviour> right) {
  Branch b{from, std::nullopt, std::nullopt};
  if (left) b.left = Box<Behaviour>(std::move(*left));
  if (right) b.right = Box<Behaviour>(std::move(*right));
  return Behaviour{std::move(b)};
}

Behaviour cond(BExpr b, Behaviour then_branch, Behaviour else_branch) {
  return Behaviour{
      Cond{std::move(b), std::move(then_branch), std::move(else_branch)}};
}

Behaviour call(const RecVar& x) { return Behaviour{Call{x}}; }

Network Network::singleton(const Pid& p, Behaviour b) {
  return Network().with(p, std::move(b));
}

Behaviour Network::at(const Pid& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? end() : it->second;
}

Network Network::with(const Pid& p, Behaviour b) const {
  Network n = *this;
  if (b.is_end()) {
    n.entries_.erase(p);
  } else {
    n.entries_.insert_or_assign(p, std::move(b));
  }
  return n;
}

Network Network::without(const Pid& p) const { return with(p, end()); }

Network compose(const Network& n, const Network& m) {
  Network out = m;
  for (const auto& [p, b] : n.entries()) out = out.with(p, b);
  return out;
}

namespace {

bool addresses(const Behaviour& b, const Pid& self) {
  return std::visit(
      Overloaded{
          [&](const Send& n) { return n.to == self || addresses(*n.cont, self); },
          [&](const Recv& n) {
            return n.from == self || addresses(*n.cont, self);
          },
          [&](const Choose& n) {
            return n.to == self || addresses(*n.cont, self);
          },
          [&](const Branch& n) {
            return n.from == self || (n.left && addresses(**n.left, self)) ||
                   (n.right && addresses(**n.right, self));
          },
          [&](const Cond& n) {
            return addresses(*n.then_branch, self) ||
                   addresses(*n.else_branch, self);
          },
          [](const Call&) { return false; },
          [](const End&) { return false; },
      },
      b.node);
}

}  // namespace

bool wf(const Network& n) {
  for (const auto& [p, b] : n.entries()) {
    if (addresses(b, p)) return false;
  }
  return true;
}

}  // namespace choreo::sp
