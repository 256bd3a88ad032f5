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

#ifndef ARTEQ_LSERIES_HPP
#define ARTEQ_LSERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arteq/characters.hpp"

namespace arteq {

/// Polynomial in T over Z[zeta_l]; coefficients[0] == 1.
struct LocalFactor {
    unsigned l = 2;
    std::vector<CycInt> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    std::string to_string() const;
    friend bool operator==(const LocalFactor&, const LocalFactor&) = default;
};

LocalFactor local_factor_one(unsigned l);
LocalFactor multiply(const LocalFactor& a, const LocalFactor& b);

/// 1 - chi(P) T^f, or 1 when chi(P) is zero.
LocalFactor local_factor_at_prime_ideal(const CharacterRep& chi, const NumberField& K, const PrimeIdealData& P);

/// Product of the prime-ideal factors over all primes of K above p.
LocalFactor local_factor_at_p(const CharacterRep& chi, const NumberField& K, u64 p);

/// Multiplicity of T = 1 as a root.
unsigned vanishing_order_at_one(const LocalFactor& F);

/// A prime left out of a sweep, with the reason.
struct Exclusion {
    u64 p = 0;
    std::string reason;
    friend bool operator==(const Exclusion&, const Exclusion&) = default;
};

/// Primes p <= bound at which Z[theta] is not p-maximal.
std::vector<Exclusion> excluded_primes(const NumberField& K, u64 bound);
/// Union of the exclusions of both fields, ascending, one entry per prime.
std::vector<Exclusion> excluded_primes(const NumberField& K, const NumberField& Kp, u64 bound);

struct DirichletCoefficients {
    u64 bound = 0;
    unsigned l = 2;
    /// a[n] for 0 <= n <= bound; a[0] is unused. Empty where n is divisible
    /// by an excluded prime.
    std::vector<std::optional<CycInt>> a;
    std::vector<Exclusion> excluded;
};

/// Truncated Euler product up to n <= N. Throws BoundTooLarge when an
/// excluded prime lies below N.
DirichletCoefficients dirichlet_coefficients(const CharacterRep& chi, const NumberField& K, u64 N);
/// Same, but excluded primes are skipped and a_n is defined only for n
/// coprime to them.
DirichletCoefficients dirichlet_coefficients_skipping(const CharacterRep& chi, const NumberField& K, u64 N);

struct LComparison {
    bool equal = true;
    u64 first_mismatch = 0;
    u64 bound = 0;
    std::size_t tested = 0;
    std::vector<Exclusion> excluded;
    std::optional<LocalFactor> left;
    std::optional<LocalFactor> right;
};

/// Local factors compared for p <= B in increasing order; primes excluded in
/// either field are skipped and listed.
LComparison compare_lseries(const CharacterRep& chi, const NumberField& K, const CharacterRep& chip,
                            const NumberField& Kp, u64 B);

nlohmann::json to_json(const LocalFactor& F);
nlohmann::json to_json(const DirichletCoefficients& c);
nlohmann::json to_json(const LComparison& c);
nlohmann::json to_json(const Exclusion& e);
/// One line per defined n: n, then the coordinates of a_n.
std::string to_tsv(const DirichletCoefficients& c);

}  // namespace arteq

#endif  // ARTEQ_LSERIES_HPP
