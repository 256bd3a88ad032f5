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

// Word-size modular arithmetic and small prime utilities.

#ifndef ARTEQ_ARITH_HPP
#define ARTEQ_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace arteq {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 inv_mod(u64 a, u64 m);

/// Reduces an arbitrary integer into [0, m).
u64 reduce_mod(const mpz_class& a, u64 m);

bool is_prime(u64 n);

/// All primes p with lo <= p <= hi, ascending.
std::vector<u64> primes_between(u64 lo, u64 hi);

inline std::vector<u64> primes_up_to(u64 hi) { return primes_between(2, hi); }

/// Trial-division factorization into (prime, exponent), ascending primes.
std::vector<std::pair<u64, unsigned>> factor_u64(u64 n);

/// Legendre symbol (a/p) for an odd prime p, returned in {-1, 0, 1}.
int legendre(const mpz_class& a, u64 p);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const mpz_class& a, u64 p);

}  // namespace arteq

#endif  // ARTEQ_ARITH_HPP
