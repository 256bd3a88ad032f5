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

#ifndef ARTEQ_FQ_HPP
#define ARTEQ_FQ_HPP

#include <memory>
#include <optional>

#include <gmpxx.h>

#include "arteq/cyc_int.hpp"
#include "arteq/poly_zp.hpp"

namespace arteq {

/// F_p[x]/(modulus) for a monic irreducible modulus.
class FiniteField {
  public:
    /// Verifies that the modulus is irreducible.
    static std::shared_ptr<const FiniteField> make(const PolyZp& modulus);
    /// Trusts the caller that the modulus is irreducible (e.g. a factor
    /// returned by poly_factor_mod_p).
    static std::shared_ptr<const FiniteField> make_unchecked(const PolyZp& modulus);
    /// F_{p^f} presented by the canonically-first monic irreducible of degree f.
    static std::shared_ptr<const FiniteField> standard(u64 p, unsigned f);

    u64 prime() const noexcept { return modulus_.prime(); }
    unsigned degree() const noexcept { return static_cast<unsigned>(modulus_.degree()); }
    const PolyZp& modulus() const noexcept { return modulus_; }
    /// p^f
    const mpz_class& order() const noexcept { return order_; }

  private:
    explicit FiniteField(PolyZp modulus);

    PolyZp modulus_;
    mpz_class order_;
};

using FiniteFieldPtr = std::shared_ptr<const FiniteField>;

class FqElem {
  public:
    FqElem(FiniteFieldPtr field, const PolyZp& rep);

    static FqElem zero(FiniteFieldPtr field);
    static FqElem one(FiniteFieldPtr field);
    /// Element whose coefficients are the base-p digits of index; this
    /// enumerates the field as index runs over [0, p^f).
    static FqElem from_index(FiniteFieldPtr field, const mpz_class& index);

    const FiniteFieldPtr& field() const noexcept { return field_; }
    const PolyZp& rep() const noexcept { return rep_; }
    bool is_zero() const noexcept { return rep_.is_zero(); }
    bool is_one() const noexcept { return rep_.is_one(); }

    FqElem pow(const mpz_class& e) const;
    FqElem inverse() const;

    friend FqElem operator+(const FqElem& a, const FqElem& b);
    friend FqElem operator-(const FqElem& a, const FqElem& b);
    friend FqElem operator*(const FqElem& a, const FqElem& b);
    friend bool operator==(const FqElem& a, const FqElem& b);

  private:
    FiniteFieldPtr field_;
    PolyZp rep_;
};

/// l-th power residue symbol of a in F_q: nullopt when a = 0, otherwise
/// zeta_l^k where a^((q-1)/l) = omega^k. For l = 2, omega = -1; for l > 2,
/// omega = h^((q-1)/l) with h the first element in from_index order for
/// which this is not 1. Throws UnsupportedOrder if l does not divide q - 1.
std::optional<CycInt> fq_pow_residue(const FqElem& a, unsigned l);

}  // namespace arteq

#endif  // ARTEQ_FQ_HPP
