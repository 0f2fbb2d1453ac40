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

#include "choreo/state.hpp"

namespace choreo {

Value State::get(const Pid& p, const Var& x) const {
  auto it = entries_.find(Key(p, x));
  return it == entries_.end() ? 0 : it->second;
}

State State::updated(const Pid& p, const Var& x, Value v) const {
  State s = *this;
  s.set(p, x, v);
  return s;
}

void State::set(const Pid& p, const Var& x, Value v) {
  if (v == 0) {
    entries_.erase(Key(p, x));
  } else {
    entries_[Key(p, x)] = v;
  }
}

}  // namespace choreo
