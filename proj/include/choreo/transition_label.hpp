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

#ifndef CHOREO_TRANSITION_LABEL_HPP_
#define CHOREO_TRANSITION_LABEL_HPP_

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "choreo/names.hpp"

namespace choreo {

/// p sent value v to q.
struct TLCom {
  Pid sender;
  Value value = 0;
  Pid receiver;
  friend bool operator==(const TLCom&, const TLCom&) = default;
  friend std::strong_ordering operator<=>(const TLCom&, const TLCom&) = default;
};

/// p sent label l to q.
struct TLSel {
  Pid sender;
  Pid receiver;
  Label label = Label::kLeft;
  friend bool operator==(const TLSel&, const TLSel&) = default;
  friend std::strong_ordering operator<=>(const TLSel&, const TLSel&) = default;
};

/// Internal action of p (guard evaluation, procedure entry).
struct TLTau {
  Pid process;
  friend bool operator==(const TLTau&, const TLTau&) = default;
  friend std::strong_ordering operator<=>(const TLTau&, const TLTau&) = default;
};

/// Observable event of either transition system. The variant order gives the
/// canonical enumeration order of transitions.
using TransitionLabel = std::variant<TLCom, TLSel, TLTau>;
using Trace = std::vector<TransitionLabel>;

/// Processes mentioned by the label: {p, q} or {p}.
std::vector<Pid> processes(const TransitionLabel& t);
bool mentions(const TransitionLabel& t, const Pid& p);
bool is_selection(const TransitionLabel& t);

/// "com(p,3,q)", "sel(p,q,left)", "tau(p)".
std::string to_string(const TransitionLabel& t);
std::string to_string(const Trace& trace);

}  // namespace choreo

#endif  // CHOREO_TRANSITION_LABEL_HPP_
