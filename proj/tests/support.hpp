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

// Shared fixtures for the reconstruction and acceptance suites.

#ifndef ARTEQ_TESTS_SUPPORT_HPP
#define ARTEQ_TESTS_SUPPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "arteq/arith.hpp"
#include "arteq/characters.hpp"
#include "arteq/fixtures.hpp"
#include "arteq/lseries.hpp"
#include "arteq/reconstruction.hpp"

namespace arteq::testing_support {

inline FieldElement elem(const FieldPtr& K, std::vector<long> num) {
    RatPoly rep(num.begin(), num.end());
    return FieldElement(K, rep);
}

inline bool is_squarefree(long d) {
    if (d == 0) return false;
    const u64 n = static_cast<u64>(d < 0 ? -d : d);
    for (const auto& [q, e] : factor_u64(n)) {
        if (e > 1) return false;
    }
    return true;
}

/// chi_sqrt(d) over Q for squarefree d != 1 with |d| <= dmax.
inline std::vector<CharacterRep> rational_quadratic_sample(long dmax) {
    const FieldPtr Q = fixtures::field("Q");
    std::vector<CharacterRep> out;
    for (long d = -dmax; d <= dmax; ++d) {
        if (d == 1 || !is_squarefree(d)) continue;
        out.push_back(quad_char(FieldElement::from_int(Q, d)));
    }
    return out;
}

/// Nontrivial chi_sqrt(a + b theta) over K with small a, b.
inline std::vector<CharacterRep> field_quadratic_sample(const FieldPtr& K, long range) {
    std::vector<CharacterRep> out;
    for (long a = -range; a <= range; ++a) {
        for (long b = -range; b <= range; ++b) {
            if (a == 0 && b == 0) continue;
            if (K->is_rationals() && b != 0) continue;
            const CharacterRep chi = quad_char(elem(K, {a, b}));
            if (chi.is_trivial()) continue;
            bool seen = false;
            for (const auto& c : out) seen = seen || c == chi;
            if (!seen) out.push_back(chi);
        }
    }
    return out;
}

/// Every isomorphism between fixture fields of equal degree, automorphisms
/// included. The octic pair is skipped unless asked for.
inline std::vector<FieldIso> fixture_isomorphisms(bool with_octics = false) {
    std::vector<FieldIso> out;
    for (const auto& a : fixtures::labels()) {
        for (const auto& b : fixtures::labels()) {
            const FieldPtr K = fixtures::field(a);
            const FieldPtr Kp = fixtures::field(b);
            if (K->degree() != Kp->degree()) continue;
            if (!with_octics && K->degree() == 8) continue;
            for (auto& s : find_isomorphisms(K, Kp)) out.push_back(std::move(s));
        }
    }
    return out;
}

/// Odd primes <= B usable for reconstruction between K and Kp.
inline std::vector<u64> valid_primes(const NumberField& K, const NumberField& Kp, u64 B) {
    const auto ex = reconstruction_exclusions(K, Kp, B);
    std::vector<u64> out;
    for (u64 p : primes_up_to(B)) {
        bool bad = false;
        for (const auto& e : ex) bad = bad || e.p == p;
        if (!bad) out.push_back(p);
    }
    return out;
}

inline std::map<u64, PrimeMatching> identity_matchings(const NumberField& K, u64 B) {
    std::map<u64, PrimeMatching> out;
    for (u64 p : primes_up_to(B)) {
        try {
            out.emplace(p, identity_matching(K, p));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotPMaximal) throw;
        }
    }
    return out;
}

/// chi_sqrt(2) <-> chi_sqrt(3) over Q, extended multiplicatively. Not
/// L-series preserving.
inline CharIso swap_two_three() {
    const FieldPtr Q = fixtures::field("Q");
    const CharacterRep s2 = quad_char(FieldElement::from_int(Q, 2));
    const CharacterRep s3 = quad_char(FieldElement::from_int(Q, 3));
    return CharIso(2, Q, Q, TableRule{{{s2, s3}, {s3, s2}}});
}

}  // namespace arteq::testing_support

#endif  // ARTEQ_TESTS_SUPPORT_HPP
