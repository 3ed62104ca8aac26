// Copyright 2026 The gpcs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPCS_REPORT_HPP
#define GPCS_REPORT_HPP

#include <ostream>
#include <string>

#include <json.hpp>

namespace gpcs {

/// One named numerical check: parameter point, measured error, tolerance.
struct VerificationReport {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    double error = 0.0;
    double tol = 0.0;
    bool pass = false;
};

inline nlohmann::json to_json(const VerificationReport& r) {
    return nlohmann::json{{"check", r.check}, {"params", r.params}, {"error", r.error}, {"tol", r.tol}, {"pass", r.pass}};
}

/// JSON-lines serialization, one report per line.
inline void write_jsonl(std::ostream& os, const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) os << to_json(r).dump() << "\n";
}

}  // namespace gpcs

#endif  // GPCS_REPORT_HPP
