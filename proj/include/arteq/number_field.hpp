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

#ifndef ARTEQ_NUMBER_FIELD_HPP
#define ARTEQ_NUMBER_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "arteq/cyc_int.hpp"
#include "arteq/fq.hpp"
#include "arteq/int_poly.hpp"
#include "arteq/poly_zp.hpp"

namespace arteq {

/// Q(theta) with theta a root of a monic irreducible integer polynomial.
class NumberField {
  public:
    /// Throws NotMonic or NotIrreducible.
    NumberField(std::string label, IntPoly defining_poly);

    static std::shared_ptr<const NumberField> make(std::string label, IntPoly defining_poly);

    const std::string& label() const noexcept { return label_; }
    const IntPoly& poly() const noexcept { return poly_; }
    const RatPoly& rat_poly() const noexcept { return rat_poly_; }
    int degree() const noexcept { return arteq::degree(poly_); }
    bool is_rationals() const noexcept { return degree() == 1; }
    /// Discriminant of the defining polynomial.
    const mpz_class& discriminant() const noexcept { return disc_; }

  private:
    std::string label_;
    IntPoly poly_;
    RatPoly rat_poly_;
    mpz_class disc_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Fields are identified by label and defining polynomial.
bool same_field(const NumberField& a, const NumberField& b);
inline bool same_field(const FieldPtr& a, const FieldPtr& b) { return same_field(*a, *b); }

/// A prime of K above p, presented as (p, g(theta)) for the irreducible
/// factor g = local_factor of the defining polynomial mod p.
struct PrimeIdealData {
    u64 p = 0;
    std::size_t index = 0;
    unsigned e = 1;
    unsigned f = 1;
    PolyZp local_factor;

    mpz_class norm() const;
    friend bool operator==(const PrimeIdealData&, const PrimeIdealData&) = default;
};

/// Dedekind criterion: true iff Z[theta] is p-maximal.
bool is_p_maximal(const NumberField& K, u64 p);

/// Primes of K above p in canonical order. Throws NotPMaximal(p) when the
/// Dedekind criterion fails at p.
std::vector<PrimeIdealData> split_prime(const NumberField& K, u64 p, std::uint64_t seed = 0);

/// Element of K as a rational polynomial of degree < [K:Q] in theta.
class FieldElement {
  public:
    FieldElement(FieldPtr field, RatPoly rep);

    static FieldElement from_int(FieldPtr field, const mpz_class& n);
    static FieldElement generator(FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }
    const RatPoly& rep() const noexcept { return rep_; }
    bool is_zero() const noexcept { return rep_.empty(); }
    /// Least common denominator of the coefficients.
    mpz_class denominator() const;
    bool is_integral() const { return denominator() == 1; }

    FieldElement pow(unsigned e) const;
    std::string to_string() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

  private:
    FieldPtr field_;
    RatPoly rep_;
};

/// Image of d in the residue field O_K / P. Throws DenominatorClash if a
/// denominator of d is divisible by p.
FqElem reduce_at(const FieldElement& d, const PrimeIdealData& P);

/// l-th power residue symbol of d at P: nullopt (the zero flag) when the
/// character attached to d^(1/l) is treated as ramified at P. At an
/// unramified P the p-adic valuation of d is divided out first, so the zero
/// flag appears exactly when l does not divide v_P(d); at a ramified P the
/// zero flag means d is in P. Throws EvenPrime for p = 2.
std::optional<CycInt> residue_symbol(const FieldElement& d, const PrimeIdealData& P, unsigned l);

/// Valuation of a nonzero d at an unramified prime P (p is a uniformizer).
unsigned unramified_valuation(const FieldElement& d, const PrimeIdealData& P);

/// Roots in K of the monic polynomial sum_i coeffs[i] x^i whose
/// coefficients are integral elements of K. Results are sorted by
/// coefficient vector.
std::vector<FieldElement> roots_in_field(const FieldPtr& K, const std::vector<FieldElement>& coeffs,
                                         std::uint64_t seed = 0);

bool is_square(const FieldElement& d);

/// Field isomorphism source -> target, determined by the image of theta.
class FieldIso {
  public:
    /// Verifies that source.poly vanishes at the image.
    FieldIso(FieldPtr source, FieldPtr target, FieldElement image);

    static FieldIso identity(const FieldPtr& K);

    const FieldPtr& source() const noexcept { return source_; }
    const FieldPtr& target() const noexcept { return target_; }
    const FieldElement& image_of_generator() const noexcept { return image_; }

    FieldElement apply(const FieldElement& x) const;
    bool is_identity() const;

    friend bool operator==(const FieldIso& a, const FieldIso& b);

  private:
    FieldPtr source_;
    FieldPtr target_;
    FieldElement image_;
};

/// outer o inner.
FieldIso compose(const FieldIso& outer, const FieldIso& inner);

/// All isomorphisms K -> K'; for K = K' the automorphism group.
std::vector<FieldIso> find_isomorphisms(const FieldPtr& K, const FieldPtr& Kp);

/// Bijection between the primes of two fields above one rational prime.
/// pairs[k] = (source index, target index), sorted by source index; f[k]
/// is the common inertia degree.
struct PrimeMatching {
    u64 p = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<unsigned> f;

    std::optional<std::size_t> image_of(std::size_t source_index) const;
    friend bool operator==(const PrimeMatching&, const PrimeMatching&) = default;
};

PrimeMatching identity_matching(const NumberField& K, u64 p);

/// outer o inner, for matchings at the same p.
PrimeMatching compose(const PrimeMatching& outer, const PrimeMatching& inner);

/// The prime bijection induced by sigma at p. Throws DenominatorClash when
/// sigma does not reduce mod p, NotPMaximal from splitting.
PrimeMatching prime_map_of_iso(const FieldIso& sigma, u64 p);

}  // namespace arteq

#endif  // ARTEQ_NUMBER_FIELD_HPP
