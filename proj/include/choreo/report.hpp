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

#ifndef CHOREO_REPORT_HPP_
#define CHOREO_REPORT_HPP_

#include <string>
#include <vector>

#include "choreo/verifier.hpp"

namespace choreo::verify {

/// Human-readable report, several lines, ending in a newline.
std::string format_text(const Report& report);

/// A JSON document holding one record per report: check, verdict, witness
/// (labels as strings), stats and note.
std::string format_json(const std::vector<Report>& reports);

}  // namespace choreo::verify

#endif  // CHOREO_REPORT_HPP_
