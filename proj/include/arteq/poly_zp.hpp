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

#ifndef ARTEQ_POLY_ZP_HPP
#define ARTEQ_POLY_ZP_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "arteq/arith.hpp"
#include "arteq/int_poly.hpp"

namespace arteq {

/// Polynomial over F_p, p < 2^32. Coefficients are stored constant term
/// first, reduced into [0, p) and trimmed, so the zero polynomial has no
/// coefficients and every other value has a nonzero leading coefficient.
class PolyZp {
  public:
    PolyZp() = default;
    explicit PolyZp(u64 p);
    PolyZp(u64 p, std::vector<u64> coeffs);

    static PolyZp constant(u64 p, u64 c);
    static PolyZp monomial(u64 p, unsigned deg, u64 c = 1);
    static PolyZp x(u64 p) { return monomial(p, 1); }
    static PolyZp from_int_poly(const IntPoly& f, u64 p);

    u64 prime() const noexcept { return p_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    u64 lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    u64 coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    const std::vector<u64>& coeffs() const noexcept { return c_; }

    /// Lift with coefficients in [0, p).
    IntPoly to_int_poly() const;

    PolyZp& operator+=(const PolyZp& o);
    PolyZp& operator-=(const PolyZp& o);
    PolyZp& operator*=(const PolyZp& o);
    PolyZp operator-() const;
    PolyZp scaled(u64 c) const;

    friend PolyZp operator+(PolyZp a, const PolyZp& b) { return a += b; }
    friend PolyZp operator-(PolyZp a, const PolyZp& b) { return a -= b; }
    friend PolyZp operator*(PolyZp a, const PolyZp& b) { return a *= b; }
    friend bool operator==(const PolyZp& a, const PolyZp& b) = default;

    u64 eval(u64 x) const;
    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();

    u64 p_ = 2;
    std::vector<u64> c_;
};

std::pair<PolyZp, PolyZp> divmod(const PolyZp& a, const PolyZp& b);
PolyZp rem(const PolyZp& a, const PolyZp& b);
PolyZp make_monic(const PolyZp& a);
PolyZp gcd(PolyZp a, PolyZp b);
PolyZp derivative(const PolyZp& a);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct XgcdResult {
    PolyZp g;
    PolyZp s;
    PolyZp t;
};
XgcdResult xgcd(const PolyZp& a, const PolyZp& b);

PolyZp mul_mod(const PolyZp& a, const PolyZp& b, const PolyZp& m);
PolyZp pow_mod(const PolyZp& base, const mpz_class& exp, const PolyZp& m);

/// Canonical factor order: by degree, then lexicographically on the
/// coefficient list read from the leading coefficient down.
std::strong_ordering canonical_compare(const PolyZp& a, const PolyZp& b);
inline bool canonical_less(const PolyZp& a, const PolyZp& b) { return canonical_compare(a, b) < 0; }

bool is_irreducible(const PolyZp& f);

struct ZpFactor {
    PolyZp poly;
    unsigned multiplicity;
    friend bool operator==(const ZpFactor&, const ZpFactor&) = default;
};

/// Complete factorization of f mod p into monic irreducibles with
/// multiplicities, sorted canonically. The seed drives the randomized
/// equal-degree splitting only; the output does not depend on it.
/// Throws ZeroPolynomial when f vanishes mod p.
std::vector<ZpFactor> poly_factor_mod_p(const IntPoly& f, u64 p, std::uint64_t seed = 0);
std::vector<ZpFactor> factor(const PolyZp& f, std::uint64_t seed = 0);

}  // namespace arteq

#endif  // ARTEQ_POLY_ZP_HPP
