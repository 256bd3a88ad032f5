/*
   Copyright 2026 The arteq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// One report per command. Tables are sorted by (p, prime index); the same
// inputs always produce the same bytes.

#ifndef ARTEQ_TOOLS_REPORTS_HPP
#define ARTEQ_TOOLS_REPORTS_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "job_config.hpp"

namespace arteq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNegative = 2;

struct TaskOptions {
    std::string command;
    std::string name;
    u64 bound = 100;
    u64 seed = 0;
    std::string field = "Q";
    std::string field2;
    std::string character = "trivial";
    std::string character2 = "trivial";
    unsigned l = 2;
    /// identity | sigma | remark | table
    std::string rule = "sigma";
    std::size_t sigma_index = 0;
    /// key=image character references for the table rule.
    std::vector<std::string> table;
    u64 p = 5;
    long dmax = 30;
};

struct Report {
    std::string name;
    std::string tsv;
    nlohmann::json json;
    /// kExitOk, or kExitNegative for a falsified or empty verdict.
    int verdict = kExitOk;

    std::string render(const std::string& format) const;
};

/// Task options from a config task object, defaults from the config.
TaskOptions options_from_task(const JobConfig& cfg, const nlohmann::json& task, std::size_t position);

Report run_task(const JobConfig& cfg, const TaskOptions& opt);

}  // namespace arteq::cli

#endif  // ARTEQ_TOOLS_REPORTS_HPP
