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

// Arithmetic in (Z/mZ)[x] and Hensel lifting of factorizations from F_p to
// Z/p^k. Used for the irreducibility certificate over Q, for local
// valuations at unramified primes, and for lifting roots in number fields.

#ifndef ARTEQ_PADIC_HPP
#define ARTEQ_PADIC_HPP

#include <vector>

#include <gmpxx.h>

#include "arteq/int_poly.hpp"
#include "arteq/poly_zp.hpp"

namespace arteq {

/// Coefficients reduced into [0, m), trimmed.
IntPoly reduce_coeffs(const IntPoly& f, const mpz_class& m);
/// Coefficients reduced into (-m/2, m/2], trimmed.
IntPoly symmetric_coeffs(const IntPoly& f, const mpz_class& m);

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const mpz_class& m);
/// Remainder of a modulo a monic b with coefficients reduced mod m.
IntPoly rem_monic_mod(const IntPoly& a, const IntPoly& b, const mpz_class& m);

mpz_class pow_ui(u64 p, unsigned k);

/// Lifts f = g * h (mod p), with f and g monic and gcd(g, h) = 1 mod p,
/// to f = G * H (mod p^k). Returns {G, H} with G monic.
std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& f, const PolyZp& g, const PolyZp& h, unsigned k);

/// Lifts a factorization of a monic f into pairwise coprime monic factors
/// mod p to one mod p^k (factor order preserved).
std::vector<IntPoly> hensel_lift_factors(const IntPoly& f, const std::vector<PolyZp>& factors, unsigned k);

/// Irreducibility over Q of a monic integer polynomial: degree analysis over
/// several primes, then Zassenhaus recombination of a Hensel-lifted
/// factorization when the degree analysis is inconclusive.
bool is_irreducible_over_q(const IntPoly& f);

}  // namespace arteq

#endif  // ARTEQ_PADIC_HPP
