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

// Job configuration: a single JSON document naming fields, characters and
// tasks. Schema violations carry the line and column of the offending value.

#ifndef ARTEQ_TOOLS_JOB_CONFIG_HPP
#define ARTEQ_TOOLS_JOB_CONFIG_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arteq/characters.hpp"

namespace arteq::cli {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Line and column (1-based) of every value, keyed by JSON pointer. The text
/// must already be valid JSON.
std::map<std::string, std::pair<int, int>> value_positions(const std::string& text);

struct JobConfig {
    std::string source = "<none>";
    std::map<std::string, FieldPtr> fields;
    std::map<std::string, CharacterRep> characters;
    std::vector<nlohmann::json> tasks;
    std::optional<u64> bound;
    std::optional<u64> seed;
    std::optional<std::string> format;

    /// Config fields first, then built-in fixtures.
    FieldPtr field(const std::string& label) const;
    /// A configured name, "trivial" (over `base`), or an inline JSON object.
    CharacterRep character(const std::string& ref, const FieldPtr& base, unsigned l = 2) const;
};

JobConfig parse_config(const std::string& text, const std::string& source);
JobConfig load_config(const std::string& path);

}  // namespace arteq::cli

#endif  // ARTEQ_TOOLS_JOB_CONFIG_HPP
