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

#include "choreo/transition_label.hpp"

#include <algorithm>
#include <sstream>

namespace choreo {

std::vector<Pid> processes(const TransitionLabel& t) {
  return std::visit(
      Overloaded{
          [](const TLCom& c) { return std::vector<Pid>{c.sender, c.receiver}; },
          [](const TLSel& c) { return std::vector<Pid>{c.sender, c.receiver}; },
          [](const TLTau& c) { return std::vector<Pid>{c.process}; },
      },
      t);
}

bool mentions(const TransitionLabel& t, const Pid& p) {
  auto ps = processes(t);
  return std::find(ps.begin(), ps.end(), p) != ps.end();
}

bool is_selection(const TransitionLabel& t) {
  return std::holds_alternative<TLSel>(t);
}

std::string to_string(const TransitionLabel& t) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const TLCom& c) {
                   os << "com(" << c.sender << ',' << c.value << ','
                      << c.receiver << ')';
                 },
                 [&](const TLSel& c) {
                   os << "sel(" << c.sender << ',' << c.receiver << ','
                      << to_string(c.label) << ')';
                 },
                 [&](const TLTau& c) { os << "tau(" << c.process << ')'; },
             },
             t);
  return os.str();
}

std::string to_string(const Trace& trace) {
  std::string out = "[";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(trace[i]);
  }
  return out + "]";
}

}  // namespace choreo
