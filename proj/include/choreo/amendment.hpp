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

#ifndef CHOREO_AMENDMENT_HPP_
#define CHOREO_AMENDMENT_HPP_

#include <vector>

#include "choreo/cc.hpp"
#include "choreo/transition_label.hpp"

namespace choreo {

/// Processes of `ps` (in order) other than `p` on which
/// If p.b Then c1 Else c2 is not projectable.
std::vector<Pid> unprojectable_processes(const cc::DefSet& defs, const Pid& p,
                                         const BExpr& b,
                                         const std::vector<Pid>& ps,
                                         const cc::Choreography& c1,
                                         const cc::Choreography& c2);

/// p --> r[l]; ... for every r in ps, then c.
cc::Choreography add_selections(const Pid& p, Label l,
                                const std::vector<Pid>& ps,
                                cc::Choreography c);

/// Inserts selections at every conditional so that the result is projectable
/// on every process of `ps`.
cc::Choreography amend(const cc::DefSet& defs, const std::vector<Pid>& ps,
                       const cc::Choreography& c);

/// Amends every procedure body, always against the original `defs`.
cc::DefSet amend_defs(const cc::DefSet& defs, const std::vector<Pid>& ps);

/// Amends main and procedures for all processes of the program. Throws
/// std::invalid_argument for ill-formed programs.
cc::Program amend_program(const cc::Program& p);

/// Selection expansion: `expanded` is a permutation of `base` with zero or
/// more extra selection labels.
bool sel_exp(const Trace& base, const Trace& expanded);

}  // namespace choreo

#endif  // CHOREO_AMENDMENT_HPP_
