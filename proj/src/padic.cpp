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

#include "arteq/padic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "arteq/error.hpp"

namespace arteq {

IntPoly reduce_coeffs(const IntPoly& f, const mpz_class& m) {
    IntPoly out = f;
    for (auto& c : out) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    trim(out);
    return out;
}

IntPoly symmetric_coeffs(const IntPoly& f, const mpz_class& m) {
    IntPoly out = reduce_coeffs(f, m);
    const mpz_class half = m / 2;
    for (auto& c : out) {
        if (c > half) c -= m;
    }
    trim(out);
    return out;
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const mpz_class& m) { return reduce_coeffs(mul(a, b), m); }

IntPoly rem_monic_mod(const IntPoly& a, const IntPoly& b, const mpz_class& m) {
    IntPoly r = reduce_coeffs(a, m);
    while (r.size() >= b.size()) {
        const mpz_class c = r.back();
        const std::size_t shift = r.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        for (std::size_t j = 0; j < b.size(); ++j) mpz_fdiv_r(r[shift + j].get_mpz_t(), r[shift + j].get_mpz_t(), m.get_mpz_t());
        trim(r);
    }
    return r;
}

mpz_class pow_ui(u64 p, unsigned k) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), p, k);
    return out;
}

std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& f, const PolyZp& g, const PolyZp& h, unsigned k) {
    const u64 p = g.prime();
    const XgcdResult bez = xgcd(g, h);
    if (!bez.g.is_one()) throw Error(ErrorKind::InvalidArgument, "Hensel lifting needs coprime factors");
    IntPoly big_g = g.to_int_poly();
    IntPoly big_h = h.to_int_poly();
    mpz_class modulus = static_cast<unsigned long>(p);
    for (unsigned j = 1; j < k; ++j) {
        // f - G*H is divisible by p^j; solve e = dg*h + dh*g mod p.
        IntPoly diff = sub(f, mul(big_g, big_h));
        for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
        const PolyZp e = PolyZp::from_int_poly(diff, p);
        auto [quot, dg] = divmod(bez.t * e, g);
        const PolyZp dh = bez.s * e + quot * h;
        big_g = add(big_g, scale(dg.to_int_poly(), modulus));
        big_h = add(big_h, scale(dh.to_int_poly(), modulus));
        modulus *= static_cast<unsigned long>(p);
        big_g = reduce_coeffs(big_g, modulus);
        big_h = reduce_coeffs(big_h, modulus);
    }
    return {big_g, big_h};
}

std::vector<IntPoly> hensel_lift_factors(const IntPoly& f, const std::vector<PolyZp>& factors, unsigned k) {
    if (factors.empty()) return {};
    if (factors.size() == 1) {
        const mpz_class m = pow_ui(factors.front().prime(), k);
        return {reduce_coeffs(f, m)};
    }
    const u64 p = factors.front().prime();
    PolyZp rest = PolyZp::constant(p, 1);
    for (std::size_t i = 1; i < factors.size(); ++i) rest *= factors[i];
    auto [first, rest_lift] = hensel_lift(f, factors.front(), rest, k);
    std::vector<IntPoly> out{first};
    const std::vector<PolyZp> tail(factors.begin() + 1, factors.end());
    for (auto& g : hensel_lift_factors(rest_lift, tail, k)) out.push_back(std::move(g));
    return out;
}

namespace {

// Bitmask of achievable factor degrees from a list of modular factor degrees.
std::uint64_t subset_degrees(const std::vector<int>& degs) {
    std::uint64_t mask = 1;
    for (int d : degs) mask |= mask << d;
    return mask;
}

}  // namespace

bool is_irreducible_over_q(const IntPoly& f) {
    const int n = degree(f);
    if (n < 1) return false;
    if (f.back() != 1) throw Error(ErrorKind::NotMonic, "irreducibility test expects a monic polynomial");
    if (n == 1) return true;
    if (n > 60) throw Error(ErrorKind::InvalidArgument, "degree too large for the irreducibility test");

    const mpz_class disc = discriminant(f);
    if (disc == 0) return false;  // repeated factor over Q

    std::uint64_t possible = ~std::uint64_t{0};
    u64 best_prime = 0;
    std::vector<PolyZp> best_factors;
    int good = 0;
    for (u64 p : primes_up_to(2000)) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p) != 0) continue;
        const auto facs = poly_factor_mod_p(f, p);
        std::vector<int> degs;
        for (const auto& fac : facs) degs.push_back(fac.poly.degree());
        possible &= subset_degrees(degs);
        if (best_factors.empty() || facs.size() < best_factors.size()) {
            best_prime = p;
            best_factors.clear();
            for (const auto& fac : facs) best_factors.push_back(fac.poly);
        }
        const std::uint64_t proper = possible & ~std::uint64_t{1} & ~(std::uint64_t{1} << n);
        if (proper == 0) return true;
        if (++good >= 40) break;
    }
    if (best_factors.empty()) throw Error(ErrorKind::InvalidArgument, "no good prime for irreducibility test");

    // Mignotte: every factor of degree <= n has coefficients bounded by 2^n * ||f||_2.
    mpz_class norm_sq = 0;
    for (const auto& c : f) norm_sq += c * c;
    mpz_class norm_bound = sqrt(norm_sq) + 1;
    mpz_class bound = norm_bound << static_cast<unsigned>(n);
    unsigned k = 1;
    mpz_class modulus = static_cast<unsigned long>(best_prime);
    while (modulus <= 2 * bound) {
        modulus *= static_cast<unsigned long>(best_prime);
        ++k;
    }
    const auto lifted = hensel_lift_factors(f, best_factors, k);
    const std::size_t r = lifted.size();
    for (std::size_t size = 1; 2 * size <= r; ++size) {
        std::vector<bool> pick(r, false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
        do {
            IntPoly candidate = int_poly({1});
            for (std::size_t i = 0; i < r; ++i) {
                if (pick[i]) candidate = mul_mod(candidate, lifted[i], modulus);
            }
            const int d = degree(candidate);
            if (d < 1 || d >= n) continue;
            if (((possible >> d) & 1U) == 0) continue;
            candidate = symmetric_coeffs(candidate, modulus);
            if (divide_exact(f, candidate)) return false;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return true;
}

}  // namespace arteq
