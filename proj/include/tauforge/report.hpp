// Copyright 2026 the tauforge authors
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

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace tauforge {

// Machine-readable result of one identity check. Field names are frozen;
// `elapsed_ms` is excluded from any determinism guarantee.
struct IdentityReport {
    std::string check;
    std::string tau_id;
    nlohmann::json params = nlohmann::json::object();
    std::string status; // "pass" | "fail" | "error"
    long long residual_terms = 0;
    long long lhs_terms = 0;
    long long rhs_terms = 0;
    double elapsed_ms = 0.0;
    std::uint64_t seed = 0;
    std::string note;

    bool passed() const { return status == "pass"; }

    nlohmann::json to_json() const {
        nlohmann::json j{
            {"check", check},
            {"tau", tau_id},
            {"params", params},
            {"status", status},
            {"residual_terms", residual_terms},
            {"lhs_terms", lhs_terms},
            {"rhs_terms", rhs_terms},
            {"elapsed_ms", elapsed_ms},
            {"seed", seed},
        };
        if (!note.empty()) j["note"] = note;
        return j;
    }

    std::string text_line() const {
        std::string s = status;
        for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        std::string line = s + "  " + check;
        if (!tau_id.empty()) line += " [" + tau_id + "]";
        line += "  residual_terms=" + std::to_string(residual_terms);
        if (!note.empty()) line += "  (" + note + ")";
        return line;
    }
};

} // namespace tauforge
