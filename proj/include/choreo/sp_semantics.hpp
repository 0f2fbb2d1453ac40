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

#ifndef CHOREO_SP_SEMANTICS_HPP_
#define CHOREO_SP_SEMANTICS_HPP_

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "choreo/sp.hpp"
#include "choreo/state.hpp"
#include "choreo/transition_label.hpp"

namespace choreo::sp {

/// Raised when a process calls a procedure that is not defined.
class ExecutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  Network network;
  State state;
  friend bool operator==(const Config&, const Config&) = default;
  friend std::strong_ordering operator<=>(const Config&,
                                          const Config&) = default;
};

struct Step {
  TransitionLabel label;
  Network next;
  State state;
  friend bool operator==(const Step&, const Step&) = default;
  friend std::strong_ordering operator<=>(const Step&, const Step&) = default;
};

struct Run {
  Trace trace;
  Network network;
  State state;
  friend bool operator==(const Run&, const Run&) = default;
  friend std::strong_ordering operator<=>(const Run&, const Run&) = default;
};

/// All transitions of (D, N, s), sorted and duplicate-free. Throws
/// std::invalid_argument for ill-formed networks and ExecutionError for calls
/// to undefined procedures.
std::vector<Step> enabled(const DefSet& defs, const Network& n,
                          const State& s);

/// `enabled` without the well-formedness check.
std::vector<Step> successors(const DefSet& defs, const Network& n,
                             const State& s);

std::vector<Run> traces(const DefSet& defs, const Network& n, const State& s,
                        std::size_t depth);

std::vector<Config> replay(const DefSet& defs, const Network& n,
                           const State& s, const Trace& trace);

}  // namespace choreo::sp

#endif  // CHOREO_SP_SEMANTICS_HPP_
