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

// Characters of prime order l: classical characters modulo m over Q,
// quadratic characters chi_sqrt(d) over an arbitrary base field, and the
// trivial character. Values are l-th roots of unity in CycInt, or the zero
// flag (nullopt) at ramified primes.

#ifndef ARTEQ_CHARACTERS_HPP
#define ARTEQ_CHARACTERS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "arteq/cyc_int.hpp"
#include "arteq/number_field.hpp"

namespace arteq {

/// One cyclic factor of (Z/mZ)^x: generator (as a residue mod m, equal to 1
/// on every other prime-power component) of the given order.
struct UnitGenerator {
    u64 prime = 0;
    u64 prime_power = 0;
    u64 generator = 0;
    u64 order = 0;
};

/// Canonical generators, ordered by prime-power component. Odd q^k gives the
/// smallest primitive root mod q^k; 2^2 gives -1; 2^k, k >= 3, gives -1 then 5.
std::vector<UnitGenerator> unit_group_generators(u64 m);

/// Largest modulus a product of characters over Q may reach.
inline constexpr u64 kDefaultModulusCap = 1000000000000ULL;

struct DirichletCharQ {
    unsigned l = 2;
    u64 modulus = 1;
    /// chi(generator_j) = zeta_l^exponents[j]; zero unless l | order_j.
    std::vector<unsigned> exponents;

    /// Exponent k with chi(n) = zeta_l^k, or nullopt if gcd(n, m) > 1.
    std::optional<unsigned> exponent_at(u64 n) const;
    friend bool operator==(const DirichletCharQ&, const DirichletCharQ&) = default;
};

/// Builds and validates exponent data; throws InvalidArgument when an
/// exponent is nonzero on a generator whose order l does not divide.
DirichletCharQ make_dirichlet(unsigned l, u64 modulus, std::vector<unsigned> exponents);

/// chi_sqrt(d); d is kept in canonical square-class form.
struct QuadCharK {
    FieldElement d;
    const FieldPtr& base() const { return d.field(); }
    friend bool operator==(const QuadCharK& a, const QuadCharK& b) { return a.d == b.d; }
};

struct TrivialChar {
    FieldPtr base;
    unsigned l = 2;
    friend bool operator==(const TrivialChar& a, const TrivialChar& b) {
        return a.l == b.l && same_field(a.base, b.base);
    }
};

/// A character of order dividing l over a fixed base field.
class CharacterRep {
  public:
    using Variant = std::variant<TrivialChar, DirichletCharQ, QuadCharK>;

    CharacterRep(TrivialChar c) : v_(std::move(c)) {}
    /// Over Q; base is the built-in field "Q".
    CharacterRep(DirichletCharQ c);
    CharacterRep(QuadCharK c) : v_(std::move(c)) {}

    const Variant& variant() const noexcept { return v_; }
    unsigned order_l() const;
    const FieldPtr& base() const;
    bool is_trivial() const;
    std::string describe() const;

    friend bool operator==(const CharacterRep& a, const CharacterRep& b) { return a.v_ == b.v_; }

  private:
    Variant v_;
    FieldPtr rationals_;
};

/// chi_sqrt(d) with d reduced modulo squares, or the trivial character
/// when d is a square. Throws InvalidArgument for d = 0.
CharacterRep quad_char(const FieldElement& d);

/// Canonical representative of the square class of a nonzero d: scalar part
/// squarefree with sign, polynomial part with even multiplicities removed.
FieldElement canonical_square_class(const FieldElement& d);

/// Value at a prime of K; nullopt is the zero flag. Quadratic characters are
/// zero above 2. Throws BaseFieldMismatch when K is not the base field.
std::optional<CycInt> eval_char(const CharacterRep& chi, const NumberField& K, const PrimeIdealData& P);

/// Group law. Throws BaseFieldMismatch, MixedOrder, IncompatibleRepresentation
/// for a Dirichlet/quadratic pair, ModulusOverflow past the cap.
CharacterRep char_mul(const CharacterRep& a, const CharacterRep& b, u64 modulus_cap = kDefaultModulusCap);
CharacterRep char_pow(const CharacterRep& a, unsigned k, u64 modulus_cap = kDefaultModulusCap);

struct GwTarget {
    u64 p = 0;
    unsigned exponent = 0;
};

/// Character over Q with chi(p_i) = zeta_l^(a_i) and modulus coprime to every
/// p_i. Auxiliary moduli are scanned in ascending order; the first solvable
/// system wins. Throws SolverBoundExceeded past aux_bound.
DirichletCharQ grunwald_wang_Q(unsigned l, const std::vector<GwTarget>& targets, u64 aux_bound = 10000,
                               u64 modulus_cap = kDefaultModulusCap);

/// chi_sqrt(d) over K with value sign_i at P_i, all P_i above one odd
/// unramified p; primes over p that are not targeted get value 1.
CharacterRep grunwald_wang_quad_K(const FieldPtr& K, const std::vector<std::pair<PrimeIdealData, int>>& targets);

/// Character of order exactly l with value zeta_l at P and 1 at every other
/// prime over p. l > 2 requires K = Q.
CharacterRep x_p_character(const FieldPtr& K, const PrimeIdealData& P, unsigned l, u64 aux_bound = 10000);

using FieldResolver = std::function<FieldPtr(const std::string&)>;

nlohmann::json to_json(const CharacterRep& chi);
/// Throws InvalidArgument on schema violations.
CharacterRep character_from_json(const nlohmann::json& j, const FieldResolver& resolve);

}  // namespace arteq

#endif  // ARTEQ_CHARACTERS_HPP
