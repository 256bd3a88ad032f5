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

#include "arteq/arith.hpp"

#include "arteq/error.hpp"

namespace arteq {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::MixedOrder: return "MixedOrder";
        case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::NotPMaximal: return "NotPMaximal";
        case ErrorKind::EvenPrime: return "EvenPrime";
        case ErrorKind::DenominatorClash: return "DenominatorClash";
        case ErrorKind::BaseFieldMismatch: return "BaseFieldMismatch";
        case ErrorKind::IncompatibleRepresentation: return "IncompatibleRepresentation";
        case ErrorKind::SolverBoundExceeded: return "SolverBoundExceeded";
        case ErrorKind::RamifiedBase: return "RamifiedBase";
        case ErrorKind::ModulusOverflow: return "ModulusOverflow";
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::BoundTooLarge: return "BoundTooLarge";
        case ErrorKind::NotSinglePrime: return "NotSinglePrime";
        case ErrorKind::NormMismatch: return "NormMismatch";
        case ErrorKind::ValueMismatch: return "ValueMismatch";
        case ErrorKind::NotBijective: return "NotBijective";
        case ErrorKind::PrimeExcluded: return "PrimeExcluded";
        case ErrorKind::BadModulus: return "BadModulus";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

u64 inv_mod(u64 a, u64 m) {
    i64 t = 0;
    i64 new_t = 1;
    i64 r = static_cast<i64>(m);
    i64 new_r = static_cast<i64>(a % m);
    while (new_r != 0) {
        const i64 q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw Error(ErrorKind::InvalidArgument, "element is not invertible");
    if (t < 0) t += static_cast<i64>(m);
    return static_cast<u64>(t);
}

u64 reduce_mod(const mpz_class& a, u64 m) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), m);
    return r.get_ui();
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // Deterministic Miller-Rabin base set for 64-bit inputs.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> primes_between(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi < 2) return out;
    std::vector<bool> sieve(hi + 1, true);
    sieve[0] = false;
    sieve[1] = false;
    for (u64 i = 2; i * i <= hi; ++i) {
        if (!sieve[i]) continue;
        for (u64 j = i * i; j <= hi; j += i) sieve[j] = false;
    }
    for (u64 i = std::max<u64>(lo, 2); i <= hi; ++i) {
        if (sieve[i]) out.push_back(i);
    }
    return out;
}

std::vector<std::pair<u64, unsigned>> factor_u64(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q != 0) continue;
        unsigned e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        out.emplace_back(q, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int legendre(const mpz_class& a, u64 p) {
    const u64 r = reduce_mod(a, p);
    if (r == 0) return 0;
    if (p == 2) return 1;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

unsigned valuation(const mpz_class& a, u64 p) {
    if (a == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
    mpz_class x = a;
    unsigned v = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
        ++v;
    }
    return v;
}

}  // namespace arteq
