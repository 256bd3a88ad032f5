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

#include "arteq/fixtures.hpp"

#include <map>
#include <mutex>

#include "arteq/error.hpp"

namespace arteq::fixtures {

namespace {

const std::vector<std::pair<std::string, IntPoly>>& table() {
    static const std::vector<std::pair<std::string, IntPoly>> t = {
        {"Q", int_poly({0, 1})},
        {"Qi", int_poly({1, 0, 1})},
        {"Qsqrt2", int_poly({-2, 0, 1})},
        {"Qsqrt8", int_poly({-8, 0, 1})},
        {"Qsqrtm2", int_poly({2, 0, 1})},
        {"Qsqrt3", int_poly({-3, 0, 1})},
        {"Qsqrtm3", int_poly({3, 0, 1})},
        {"Qcbrt2", int_poly({-2, 0, 0, 1})},
        {"Qcbrt16", int_poly({-16, 0, 0, 1})},
        {"Qzeta8", int_poly({1, 0, 0, 0, 1})},
        {"Oct97", int_poly({-97, 0, 0, 0, 0, 0, 0, 0, 1})},
        {"Oct1552", int_poly({-1552, 0, 0, 0, 0, 0, 0, 0, 1})},
    };
    return t;
}

}  // namespace

const std::vector<std::string>& labels() {
    static const std::vector<std::string> out = [] {
        std::vector<std::string> v;
        for (const auto& [label, poly] : table()) v.push_back(label);
        return v;
    }();
    return out;
}

FieldPtr field(const std::string& label) {
    // Fields are built once; irreducibility certification is not free.
    static std::mutex mutex;
    static std::map<std::string, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(label); it != cache.end()) return it->second;
    for (const auto& [name, poly] : table()) {
        if (name == label) return cache[label] = NumberField::make(name, poly);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown field label " + label);
}

FieldPtr octic_a() { return field("Oct97"); }
FieldPtr octic_b() { return field("Oct1552"); }

}  // namespace arteq::fixtures
