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

// Built-in fields, available by label from the CLI and the test suites.

#ifndef ARTEQ_FIXTURES_HPP
#define ARTEQ_FIXTURES_HPP

#include <string>
#include <vector>

#include "arteq/number_field.hpp"

namespace arteq::fixtures {

/// Labels in registry order.
const std::vector<std::string>& labels();

/// Throws InvalidArgument for an unknown label.
FieldPtr field(const std::string& label);

/// The arithmetically equivalent, non-isomorphic octic pair x^8 - 97 and
/// x^8 - 1552 (1552 = 16 * 97).
FieldPtr octic_a();
FieldPtr octic_b();

}  // namespace arteq::fixtures

#endif  // ARTEQ_FIXTURES_HPP
