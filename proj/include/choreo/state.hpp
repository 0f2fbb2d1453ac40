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

#ifndef CHOREO_STATE_HPP_
#define CHOREO_STATE_HPP_

#include <compare>
#include <map>
#include <utility>

#include "choreo/names.hpp"

namespace choreo {

/// Memory of every process: (process, variable) -> value, where absent
/// entries read as 0. Entries equal to 0 are never stored, so structural
/// equality of two states is extensional equality.
class State {
 public:
  using Key = std::pair<Pid, Var>;
  using Entries = std::map<Key, Value>;

  State() = default;

  Value get(const Pid& p, const Var& x) const;

  /// s[[p,x => v]]
  State updated(const Pid& p, const Var& x, Value v) const;
  void set(const Pid& p, const Var& x, Value v);

  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const State&, const State&) = default;
  friend std::strong_ordering operator<=>(const State& a, const State& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  Entries entries_;
};

}  // namespace choreo

#endif  // CHOREO_STATE_HPP_
