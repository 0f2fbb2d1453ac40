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

#ifndef CHOREO_PROJECTION_HPP_
#define CHOREO_PROJECTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "choreo/cc.hpp"
#include "choreo/sp.hpp"

namespace choreo {

/// Partial merge of two behaviours. Branchings on the same partner are joined
/// slot by slot; everything else must agree on the head and is merged
/// homomorphically. std::nullopt when undefined.
std::optional<sp::Behaviour> merge(const sp::Behaviour& a,
                                   const sp::Behaviour& b);

/// Name of the per-process instance of procedure `x` for process `p`.
RecVar instance_name(const RecVar& x, const Pid& p);

/// Behaviour projection of `c` on `r`; std::nullopt when some merge on the
/// way is undefined.
std::optional<sp::Behaviour> project(const cc::DefSet& defs,
                                     const cc::Choreography& c, const Pid& r);

/// Like `project`, reporting the innermost conditional whose branches could
/// not be merged for `r`.
std::optional<sp::Behaviour> project(const cc::DefSet& defs,
                                     const cc::Choreography& c, const Pid& r,
                                     std::optional<cc::Choreography>* blame);

bool projectable(const cc::DefSet& defs, const cc::Choreography& c,
                 const Pid& p);
bool projectable(const cc::DefSet& defs, const cc::Choreography& c,
                 const std::vector<Pid>& ps);

struct ProjectionFailure {
  /// "main" or the procedure name.
  std::string context;
  /// The conditional whose branch projections do not merge.
  cc::Choreography term;
  Pid process;
};

struct EppResult {
  std::optional<sp::Program> program;
  std::vector<ProjectionFailure> failures;

  bool ok() const { return program.has_value(); }
};

/// Endpoint projection of a whole program. Procedure X with processes ps
/// becomes one procedure per p in ps, named instance_name(X, p).
/// Throws std::invalid_argument for ill-formed programs.
EppResult epp(const cc::Program& p);

}  // namespace choreo

#endif  // CHOREO_PROJECTION_HPP_
