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

#ifndef ARTEQ_CYC_INT_HPP
#define ARTEQ_CYC_INT_HPP

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace arteq {

/// Exact element of Z[zeta_l] for a prime l, stored on the power basis
/// 1, zeta, ..., zeta^(l-2). The representation is canonical: two values
/// are equal iff their coordinate vectors are equal. For l = 2 the single
/// coordinate is an ordinary integer (zeta_2 = -1).
class CycInt {
  public:
    CycInt() = default;

    static CycInt zero(unsigned l);
    static CycInt one(unsigned l);
    static CycInt from_int(unsigned l, const mpz_class& n);
    /// zeta_l^k for any integer k.
    static CycInt zeta_pow(unsigned l, long k);
    /// Reduces coefficients given on 1, zeta, zeta^2, ... (any length)
    /// modulo zeta^l = 1 and the l-th cyclotomic polynomial.
    static CycInt normalize(unsigned l, const std::vector<mpz_class>& power_coeffs);

    unsigned order() const noexcept { return l_; }
    const std::vector<mpz_class>& coords() const noexcept { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// If this is a root of unity zeta^k, returns k in [0, l); else -1.
    int root_of_unity_exponent() const;

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const CycInt& o);
    CycInt operator-() const;
    CycInt pow(unsigned e) const;

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
    friend bool operator==(const CycInt& a, const CycInt& b);

    std::complex<double> to_complex() const;
    std::string to_string() const;

  private:
    CycInt(unsigned l, std::vector<mpz_class> coords) : l_(l), c_(std::move(coords)) {}
    void check_order(const CycInt& o) const;

    unsigned l_ = 2;
    std::vector<mpz_class> c_{0};
};

}  // namespace arteq

#endif  // ARTEQ_CYC_INT_HPP
