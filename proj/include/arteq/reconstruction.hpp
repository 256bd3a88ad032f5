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

// Isomorphisms of order-l character groups presented as evaluation rules,
// the prime bijection they determine through vanishing orders of local
// factors, and the character isomorphism induced by a field isomorphism.

#ifndef ARTEQ_RECONSTRUCTION_HPP
#define ARTEQ_RECONSTRUCTION_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "arteq/characters.hpp"
#include "arteq/lseries.hpp"

namespace arteq {

struct IdentityRule {};
struct InducedBySigma {
    FieldIso sigma;
};
/// Over Q, l = 2: chi_sqrt(d) is kept when the p-free part of d is a square
/// mod p and sent to chi_sqrt(-d) otherwise.
struct RemarkRule {
    u64 p = 0;
};
/// Finite table of generator images. Over Q with l = 2 the keys are the
/// generators chi_sqrt(-1), chi_sqrt(q) and the rule extends
/// multiplicatively; unlisted generators are fixed. Elsewhere a character
/// absent from the table is fixed.
struct TableRule {
    std::vector<std::pair<CharacterRep, CharacterRep>> entries;
};

using IsoRule = std::variant<IdentityRule, InducedBySigma, RemarkRule, TableRule>;

class CharIso {
  public:
    CharIso(unsigned l, FieldPtr source, FieldPtr target, IsoRule rule);

    static CharIso identity(const FieldPtr& K, unsigned l);
    static CharIso induced_by(const FieldIso& sigma, unsigned l);

    unsigned l() const noexcept { return l_; }
    const FieldPtr& source() const noexcept { return source_; }
    const FieldPtr& target() const noexcept { return target_; }
    const IsoRule& rule() const noexcept { return rule_; }
    std::string describe() const;

    /// Throws BaseFieldMismatch, MixedOrder, IncompatibleRepresentation.
    CharacterRep apply(const CharacterRep& chi) const;

  private:
    unsigned l_;
    FieldPtr source_;
    FieldPtr target_;
    IsoRule rule_;
};

/// Throws BadModulus unless p = 1 mod 4.
CharIso remark_rule(u64 p);

/// chi_sqrt(d) -> chi_sqrt(sigma(d)); the identity on characters over Q.
CharacterRep psi_sigma(const FieldIso& sigma, const CharacterRep& chi);

/// Pairs (chi1, chi2) from the sample on which psi(chi1 chi2) and
/// psi(chi1) psi(chi2) take different values at some prime <= B, plus a
/// check that psi fixes the trivial character.
std::vector<std::string> homomorphism_failures(const CharIso& psi, const std::vector<CharacterRep>& sample, u64 B);

/// The bijection of primes over p determined by psi: X_P is sent by psi to a
/// character equal to 1 at all but one prime over p. Throws PrimeExcluded
/// for p = 2, RamifiedBase, NotPMaximal, and as falsification verdicts
/// NotSinglePrime(p, i), NormMismatch(p, i), ValueMismatch(p, i),
/// NotBijective(p).
PrimeMatching reconstruct_prime_matching(const CharIso& psi, u64 p, u64 aux_bound = 10000);

/// Primes <= B unusable for reconstruction: 2, ramified in either field, or
/// not p-maximal in either field. Ascending.
std::vector<Exclusion> reconstruction_exclusions(const NumberField& K, const NumberField& Kp, u64 B);

struct CompatFailure {
    u64 p = 0;
    std::size_t source_index = 0;
    std::string character;
    std::optional<CycInt> expected;
    std::optional<CycInt> got;
};

struct CompatReport {
    u64 bound = 0;
    std::vector<u64> tested;
    std::vector<Exclusion> excluded;
    std::vector<CompatFailure> failures;
    /// Checks where chi(P) = 0 and the image was required to vanish too.
    std::size_t ramified_checks = 0;

    bool passed() const { return failures.empty(); }
};

/// chi(P) = psi(chi)(phi(P)) for every sampled chi and every prime over
/// every p <= B with a matching; primes without one are listed as excluded.
CompatReport verify_compatibility(const CharIso& psi, const std::map<u64, PrimeMatching>& phi, u64 B,
                                  const std::vector<CharacterRep>& sample);

struct UniquenessWitness {
    bool equal = true;
    std::size_t source_index = 0;
    std::optional<CharacterRep> separating;
    std::optional<CycInt> value_at_first;
    std::optional<CycInt> value_at_second;
};

/// Equal, or a character over the target equal to 1 at phi1(P) and not 1 at
/// phi2(P) for the first P where the matchings differ.
UniquenessWitness uniqueness_check(const CharIso& psi, const PrimeMatching& phi1, const PrimeMatching& phi2,
                                   u64 aux_bound = 10000);

struct GassmannReport {
    u64 bound = 0;
    LComparison zeta;
    std::size_t isomorphisms = 0;
    bool splitting_types_equal = true;
    u64 first_type_mismatch = 0;
    std::size_t tested = 0;
    std::vector<Exclusion> excluded;
};

GassmannReport gassmann_check(const FieldPtr& K, const FieldPtr& Kp, u64 B);

/// Field isomorphism search standing in for the non-effective descent:
/// reconstruct matchings at every usable p <= B, then keep the field
/// isomorphisms whose induced matchings agree wherever both are defined.
struct SigmaSearch {
    u64 bound = 0;
    std::map<u64, PrimeMatching> matchings;
    std::vector<Exclusion> excluded;
    /// Set when reconstruction raised a verdict error.
    std::optional<u64> failure_prime;
    std::string failure;
    std::size_t candidates = 0;
    std::vector<FieldIso> agreeing;

    bool falsified() const { return failure_prime.has_value(); }
    bool unique() const { return !falsified() && agreeing.size() == 1; }
    /// "unique sigma found", "falsified", "ambiguous" or "none found".
    std::string verdict() const;
};

SigmaSearch recover_isomorphism(const CharIso& psi, u64 B, u64 aux_bound = 10000);

nlohmann::json to_json(const PrimeMatching& m);
nlohmann::json to_json(const CompatReport& r);
nlohmann::json to_json(const UniquenessWitness& w);
nlohmann::json to_json(const GassmannReport& r);
nlohmann::json to_json(const SigmaSearch& s);
nlohmann::json to_json(const FieldIso& sigma);

}  // namespace arteq

#endif  // ARTEQ_RECONSTRUCTION_HPP
