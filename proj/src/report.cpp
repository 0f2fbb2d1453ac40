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

#include "choreo/report.hpp"

#include <sstream>

#include "choreo/syntax.hpp"
#include "json.hpp"

namespace choreo::verify {

namespace {

std::string indent(const std::string& text, const std::string& pad) {
  std::string out = pad;
  for (char c : text) {
    out += c;
    if (c == '\n') out += pad;
  }
  return out;
}

std::string state_line(const State& s) {
  if (s.empty()) return "(all zero)";
  std::string out;
  for (const auto& [key, v] : s.entries()) {
    if (!out.empty()) out += ", ";
    out += key.first.str() + "." + key.second.str() + "=" + std::to_string(v);
  }
  return out;
}

nlohmann::json witness_json(const Witness& w) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& label : w.trace) trace.push_back(to_string(label));
  nlohmann::json out = {
      {"summary", w.summary},
      {"system", std::string(to_string(w.system))},
      {"initial_state", syntax::render(w.initial_state)},
      {"trace", trace},
      {"state", syntax::render(w.state)},
  };
  if (w.choreography) out["choreography"] = syntax::render(*w.choreography);
  if (w.network) out["network"] = syntax::render(*w.network);
  return out;
}

}  // namespace

std::string format_text(const Report& report) {
  std::ostringstream os;
  os << report.check << ": " << to_string(report.verdict) << "\n";
  os << "  explored " << report.stats.explored << " configurations, depth "
     << report.stats.max_depth << "\n";
  if (!report.note.empty()) os << "  note: " << report.note << "\n";
  if (report.witness) {
    const Witness& w = *report.witness;
    os << "  witness: " << w.summary << "\n";
    os << "  system: " << to_string(w.system) << "\n";
    os << "  initial state: " << state_line(w.initial_state) << "\n";
    os << "  trace: " << to_string(w.trace) << "\n";
    if (w.choreography) {
      os << "  reaches:\n" << indent(syntax::render(*w.choreography), "    ")
         << "\n";
    }
    if (w.network) {
      os << "  reaches:\n" << indent(syntax::render(*w.network), "    ")
         << "\n";
    }
    os << "  with state: " << state_line(w.state) << "\n";
  }
  return os.str();
}

std::string format_json(const std::vector<Report>& reports) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json record = {
        {"check", r.check},
        {"verdict", std::string(to_string(r.verdict))},
        {"stats",
         {{"explored", r.stats.explored}, {"max_depth", r.stats.max_depth}}},
        {"witness", r.witness ? witness_json(*r.witness) : nlohmann::json()},
    };
    if (!r.note.empty()) record["note"] = r.note;
    doc.push_back(std::move(record));
  }
  return doc.dump(2) + "\n";
}

}  // namespace choreo::verify
