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

// Dense univariate polynomials over Z and Q. Coefficients are stored
// constant term first and kept trimmed (no trailing zeros); the zero
// polynomial is the empty vector.

#ifndef ARTEQ_INT_POLY_HPP
#define ARTEQ_INT_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace arteq {

using IntPoly = std::vector<mpz_class>;
using RatPoly = std::vector<mpq_class>;

template <class Poly>
void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

template <class Poly>
int degree(const Poly& f) {
    return static_cast<int>(f.size()) - 1;
}

IntPoly int_poly(std::initializer_list<long> coeffs);
RatPoly to_rat(const IntPoly& f);

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly scale(const IntPoly& a, const mpz_class& c);
mpz_class eval(const IntPoly& f, const mpz_class& x);

/// Positive gcd of the coefficients (0 for the zero polynomial).
mpz_class content(const IntPoly& f);

/// Exact quotient a / b over Z if b divides a, otherwise nullopt.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

/// Remainder of a modulo a monic b, over Z.
IntPoly rem_monic(const IntPoly& a, const IntPoly& b);

RatPoly add(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
RatPoly mul(const RatPoly& a, const RatPoly& b);
RatPoly scale(const RatPoly& a, const mpq_class& c);
RatPoly derivative(const RatPoly& f);
mpq_class eval(const RatPoly& f, const mpq_class& x);

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly rem(const RatPoly& a, const RatPoly& b);

/// Monic gcd over Q (zero if both inputs are zero).
RatPoly gcd(RatPoly a, RatPoly b);

/// Substitutes g for the variable of f and reduces modulo m.
RatPoly compose_mod(const RatPoly& f, const RatPoly& g, const RatPoly& m);

/// Yun's square-free decomposition over Q: f = lc * prod_i parts[i]^(i+1),
/// each part monic and square-free, pairwise coprime.
std::vector<RatPoly> squarefree_decomposition(const RatPoly& f);

mpq_class resultant(const RatPoly& a, const RatPoly& b);

/// Discriminant of a monic integer polynomial of degree >= 1.
mpz_class discriminant(const IntPoly& f);

/// Clears denominators: f = primitive * c with primitive in Z[x] having
/// positive content 1 and c rational (sign carried by c).
std::pair<IntPoly, mpq_class> primitive_part(const RatPoly& f);

std::string to_string(const IntPoly& f, const std::string& var = "x");
std::string to_string(const RatPoly& f, const std::string& var = "x");

}  // namespace arteq

#endif  // ARTEQ_INT_POLY_HPP
