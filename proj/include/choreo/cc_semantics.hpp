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

#ifndef CHOREO_CC_SEMANTICS_HPP_
#define CHOREO_CC_SEMANTICS_HPP_

#include <compare>
#include <cstddef>
#include <vector>

#include "choreo/cc.hpp"
#include "choreo/state.hpp"
#include "choreo/transition_label.hpp"

namespace choreo::cc {

/// A choreographic configuration without its (fixed) procedure set.
struct Config {
  Choreography chor;
  State state;
  friend bool operator==(const Config&, const Config&) = default;
  friend std::strong_ordering operator<=>(const Config&,
                                          const Config&) = default;
};

struct Step {
  TransitionLabel label;
  Choreography next;
  State state;
  friend bool operator==(const Step&, const Step&) = default;
  friend std::strong_ordering operator<=>(const Step&, const Step&) = default;
};

struct Run {
  Trace trace;
  Choreography chor;
  State state;
  friend bool operator==(const Run&, const Run&) = default;
  friend std::strong_ordering operator<=>(const Run&, const Run&) = default;
};

/// All transitions of (D, C, s), sorted and duplicate-free. Throws
/// std::invalid_argument when (D, C) is not well-formed.
std::vector<Step> enabled(const DefSet& defs, const Choreography& c,
                          const State& s);

/// Same as `enabled` without the well-formedness check. Meant for explorers
/// that checked the initial program once; well-formedness is preserved by
/// every transition.
std::vector<Step> successors(const DefSet& defs, const Choreography& c,
                             const State& s);

/// Every (trace, configuration) reachable in at most `depth` steps, including
/// the empty trace. Sorted.
std::vector<Run> traces(const DefSet& defs, const Choreography& c,
                        const State& s, std::size_t depth);

/// Configurations reached by executing exactly `trace` from (C, s).
std::vector<Config> replay(const DefSet& defs, const Choreography& c,
                           const State& s, const Trace& trace);

}  // namespace choreo::cc

#endif  // CHOREO_CC_SEMANTICS_HPP_
