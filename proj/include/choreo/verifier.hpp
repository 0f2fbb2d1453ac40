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

#ifndef CHOREO_VERIFIER_HPP_
#define CHOREO_VERIFIER_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "choreo/cc.hpp"
#include "choreo/sp.hpp"
#include "choreo/state.hpp"
#include "choreo/transition_label.hpp"

// Bounded state-space checks relating choreographies, their amendments and
// their projections.
namespace choreo::verify {

enum class Verdict { kHolds, kCounterexample, kResourceExhausted };

/// "holds-within-bound", "counterexample", "resource-exhausted".
std::string_view to_string(Verdict v);

struct Limits {
  /// Length of the traces whose correspondence is checked.
  std::size_t depth = 6;
  /// Extra steps allowed when looking for a matching configuration.
  std::size_t search_bound = 6;
  /// Maximum number of explored nodes per check.
  std::size_t state_budget = 1'000'000;
};

/// Which transition system a witness trace runs on.
enum class System { kOriginal, kAmended, kNetwork };

std::string_view to_string(System s);

/// A trace from `initial_state` of `system`, and the configuration it
/// reaches.
struct Witness {
  std::string summary;
  System system = System::kOriginal;
  State initial_state;
  Trace trace;
  std::optional<cc::Choreography> choreography;
  std::optional<sp::Network> network;
  State state;
};

struct Stats {
  std::size_t explored = 0;
  std::size_t max_depth = 0;
};

struct Report {
  std::string check;
  Verdict verdict = Verdict::kHolds;
  std::optional<Witness> witness;
  Stats stats;
  std::string note;
};

/// Reachability correspondence in its original, too strong form: every
/// (C', s') reached by the program must be matched by the amended program
/// reaching (amend C', s'). The search on the amended side is exact.
Report check_naive_correspondence(const cc::Program& p, const State& s,
                                  const Limits& limits = {});

/// Every trace tl of the program, extended by at most `search_bound` steps
/// tl', is matched by a trace tl'' of the amended program reaching the
/// amendment of the extension's end, with sel_exp(tl ++ tl', tl'').
Report check_amend_complete(const cc::Program& p, const State& s,
                            const Limits& limits = {});

/// Dual of check_amend_complete: the amended program moves first.
Report check_amend_sound(const cc::Program& p, const State& s,
                         const Limits& limits = {});

/// The amendment must perform the same first transition as the original and
/// then catch up, allowed only to insert selections.
Report check_intermediate_formulation(const cc::Program& p, const State& s,
                                      const Limits& limits = {});

/// Compares label traces of length <= depth of the choreography and of its
/// endpoint projection. Throws std::invalid_argument when `p` is not
/// projectable.
Report check_epp_correspondence(const cc::Program& p, const State& s,
                                const Limits& limits = {});

/// Finite description of a partial function on naturals. A missing value
/// marks a point where the function is undefined.
struct FnTable {
  std::size_t arity = 0;
  std::map<std::vector<Value>, std::optional<Value>> entries;
};

/// For each entry, runs the program from the state storing the inputs in the
/// variable x of `inputs` and checks every execution within `bound` steps.
Report check_implements(const cc::Program& p, const FnTable& table,
                        const std::vector<Pid>& inputs, const Pid& output,
                        std::size_t bound, std::size_t state_budget = 1'000'000);

/// The network analogue of check_implements.
Report check_implements(const sp::Program& p, const FnTable& table,
                        const std::vector<Pid>& inputs, const Pid& output,
                        std::size_t bound, std::size_t state_budget = 1'000'000);

}  // namespace choreo::verify

#endif  // CHOREO_VERIFIER_HPP_
