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

#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "arteq/arith.hpp"
#include "arteq/cyc_int.hpp"
#include "arteq/error.hpp"
#include "arteq/fq.hpp"
#include "arteq/padic.hpp"
#include "arteq/poly_zp.hpp"

namespace arteq {
namespace {

PolyZp zp(u64 p, std::vector<u64> c) { return PolyZp(p, std::move(c)); }

TEST(PolyFactor, SumOfSquaresModFive) {
    const auto facs = poly_factor_mod_p(int_poly({1, 0, 1}), 5);
    ASSERT_EQ(facs.size(), 2U);
    EXPECT_EQ(facs[0].poly, zp(5, {2, 1}));
    EXPECT_EQ(facs[1].poly, zp(5, {3, 1}));
    EXPECT_EQ(facs[0].multiplicity, 1U);
    EXPECT_EQ(facs[1].multiplicity, 1U);
}

TEST(PolyFactor, SumOfSquaresInertModThree) {
    const auto facs = poly_factor_mod_p(int_poly({1, 0, 1}), 3);
    ASSERT_EQ(facs.size(), 1U);
    EXPECT_EQ(facs[0].poly, zp(3, {1, 0, 1}));
    EXPECT_EQ(facs[0].multiplicity, 1U);
}

TEST(PolyFactor, SumOfSquaresModTwoIsASquare) {
    const auto facs = poly_factor_mod_p(int_poly({1, 0, 1}), 2);
    ASSERT_EQ(facs.size(), 1U);
    EXPECT_EQ(facs[0].poly, zp(2, {1, 1}));
    EXPECT_EQ(facs[0].multiplicity, 2U);
}

TEST(PolyFactor, CubeRootOfTwoModFive) {
    const auto facs = poly_factor_mod_p(int_poly({-2, 0, 0, 1}), 5);
    ASSERT_EQ(facs.size(), 2U);
    EXPECT_EQ(facs[0].poly, zp(5, {2, 1}));
    EXPECT_EQ(facs[1].poly, zp(5, {4, 3, 1}));
}

TEST(PolyFactor, ZeroPolynomialRejected) {
    try {
        poly_factor_mod_p(int_poly({5, 0, 10}), 5);
        FAIL() << "expected ZeroPolynomial";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroPolynomial);
    }
}

// Oracle: a polynomial of degree d over F_p is irreducible iff it has no
// monic factor of degree in [1, d/2], checked by enumerating all of them.
bool brute_irreducible(const PolyZp& f) {
    const u64 p = f.prime();
    const int d = f.degree();
    for (int k = 1; 2 * k <= d; ++k) {
        u64 count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (u64 idx = 0; idx < count; ++idx) {
            std::vector<u64> c(static_cast<std::size_t>(k) + 1, 0);
            c[static_cast<std::size_t>(k)] = 1;
            u64 rest = idx;
            for (int i = 0; i < k; ++i) {
                c[static_cast<std::size_t>(i)] = rest % p;
                rest /= p;
            }
            if (rem(f, PolyZp(p, c)).is_zero()) return false;
        }
    }
    return d >= 1;
}

TEST(PolyFactor, IrreducibilityMatchesEnumeration) {
    for (u64 p : {2U, 3U, 5U}) {
        for (int d = 1; d <= 4; ++d) {
            u64 count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (u64 idx = 0; idx < count; ++idx) {
                std::vector<u64> c(static_cast<std::size_t>(d) + 1, 0);
                c[static_cast<std::size_t>(d)] = 1;
                u64 rest = idx;
                for (int i = 0; i < d; ++i) {
                    c[static_cast<std::size_t>(i)] = rest % p;
                    rest /= p;
                }
                const PolyZp f(p, c);
                EXPECT_EQ(is_irreducible(f), brute_irreducible(f)) << f.to_string() << " mod " << p;
            }
        }
    }
}

IntPoly random_poly(std::mt19937_64& rng, int deg, long range) {
    std::uniform_int_distribution<long> coeff(-range, range);
    IntPoly f;
    for (int i = 0; i <= deg; ++i) f.emplace_back(coeff(rng));
    if (f.back() == 0) f.back() = 1;
    return f;
}

TEST(PolyFactorProperty, ReexpansionAndDegreeSum) {
    std::mt19937_64 rng(20261016);
    const auto primes = primes_up_to(97);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<int> deg(1, 8);
    int checked = 0;
    while (checked < 200) {
        const u64 p = primes[pick(rng)];
        const IntPoly f = random_poly(rng, deg(rng), 50);
        const PolyZp fbar = PolyZp::from_int_poly(f, p);
        if (fbar.is_zero() || fbar.degree() < 1) continue;
        const auto facs = poly_factor_mod_p(f, p, rng());
        PolyZp product = PolyZp::constant(p, fbar.lead());
        int degree_sum = 0;
        for (std::size_t i = 0; i < facs.size(); ++i) {
            EXPECT_TRUE(facs[i].poly.is_monic());
            EXPECT_TRUE(is_irreducible(facs[i].poly));
            if (i > 0) EXPECT_TRUE(canonical_less(facs[i - 1].poly, facs[i].poly));
            for (unsigned k = 0; k < facs[i].multiplicity; ++k) product *= facs[i].poly;
            degree_sum += facs[i].poly.degree() * static_cast<int>(facs[i].multiplicity);
        }
        EXPECT_EQ(product, fbar);
        EXPECT_EQ(degree_sum, fbar.degree());
        ++checked;
    }
}

TEST(PolyFactorProperty, SeedIndependent) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const IntPoly f = random_poly(rng, 8, 30);
        for (u64 p : {3U, 7U, 31U}) {
            if (PolyZp::from_int_poly(f, p).degree() < 1) continue;
            EXPECT_EQ(poly_factor_mod_p(f, p, 1), poly_factor_mod_p(f, p, 987654321));
        }
    }
}

TEST(PowResidue, QuadraticExamplesModFive) {
    auto F = FiniteField::standard(5, 1);
    EXPECT_EQ(*fq_pow_residue(FqElem(F, PolyZp::constant(5, 2)), 2), CycInt::from_int(2, -1));
    EXPECT_EQ(*fq_pow_residue(FqElem(F, PolyZp::constant(5, 4)), 2), CycInt::one(2));
    EXPECT_FALSE(fq_pow_residue(FqElem::zero(F), 2).has_value());
    auto F7 = FiniteField::standard(7, 1);
    EXPECT_FALSE(fq_pow_residue(FqElem::zero(F7), 3).has_value());
}

TEST(PowResidue, UnsupportedOrder) {
    auto F = FiniteField::standard(5, 1);
    try {
        fq_pow_residue(FqElem::one(F), 3);
        FAIL() << "3 does not divide 4";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedOrder);
    }
}

std::vector<std::pair<u64, unsigned>> small_field_orders(u64 limit) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p : primes_up_to(limit)) {
        u64 q = p;
        for (unsigned f = 1; q <= limit; ++f, q *= p) out.emplace_back(p, f);
    }
    return out;
}

TEST(PowResidueProperty, QuadraticSymbolMultiplicativeExhaustive) {
    for (const auto& [p, f] : small_field_orders(121)) {
        if (p == 2) continue;
        auto F = FiniteField::standard(p, f);
        std::vector<FqElem> elems;
        std::vector<CycInt> sym;
        for (mpz_class idx = 1; idx < F->order(); ++idx) {
            elems.push_back(FqElem::from_index(F, idx));
            sym.push_back(*fq_pow_residue(elems.back(), 2));
        }
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (std::size_t j = i; j < elems.size(); ++j) {
                EXPECT_EQ(*fq_pow_residue(elems[i] * elems[j], 2), sym[i] * sym[j]);
            }
        }
    }
}

TEST(PowResidueProperty, MatchesSquareEnumeration) {
    for (const auto& [p, f] : small_field_orders(169)) {
        if (p == 2) continue;
        auto F = FiniteField::standard(p, f);
        std::vector<bool> square(mpz_class(F->order()).get_ui(), false);
        std::vector<FqElem> elems;
        for (mpz_class idx = 0; idx < F->order(); ++idx) elems.push_back(FqElem::from_index(F, idx));
        // Index of an element is its base-p coordinate expansion.
        auto index_of = [&](const FqElem& a) {
            u64 idx = 0;
            for (std::size_t i = F->degree(); i-- > 0;) idx = idx * p + a.rep().coeff(i);
            return idx;
        };
        for (const auto& a : elems) square[index_of(a * a)] = true;
        for (std::size_t i = 1; i < elems.size(); ++i) {
            const bool residue = fq_pow_residue(elems[i], 2)->is_one();
            EXPECT_EQ(residue, square[i]) << "p=" << p << " f=" << f << " idx=" << i;
        }
    }
}

TEST(PowResidueProperty, CubicSymbolIsRootOfUnity) {
    auto F = FiniteField::standard(7, 1);
    for (u64 a = 1; a < 7; ++a) {
        const auto v = fq_pow_residue(FqElem(F, PolyZp::constant(7, a)), 3);
        ASSERT_TRUE(v.has_value());
        EXPECT_TRUE(v->pow(3).is_one());
        // Cubes mod 7 are {1, 6}.
        EXPECT_EQ(v->is_one(), a == 1 || a == 6);
    }
}

TEST(CycInt, ZetaThreeTimesZetaThreeSquared) {
    EXPECT_TRUE((CycInt::zeta_pow(3, 1) * CycInt::zeta_pow(3, 2)).is_one());
}

TEST(CycInt, CyclotomicRelationSumsToZero) {
    CycInt sum = CycInt::zero(5);
    for (long k = 0; k < 5; ++k) sum += CycInt::zeta_pow(5, k);
    EXPECT_TRUE(sum.is_zero());
}

TEST(CycInt, MinusOneSquaredOrderTwo) {
    const CycInt m = CycInt::from_int(2, -1);
    EXPECT_TRUE((m * m).is_one());
    EXPECT_EQ(m.coords().size(), 1U);
}

TEST(CycInt, MixedOrderRejected) {
    try {
        (void)(CycInt::one(3) * CycInt::one(5));
        FAIL() << "expected MixedOrder";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MixedOrder);
    }
}

TEST(CycInt, NormalizeIdempotentAndCanonical) {
    const CycInt a = CycInt::normalize(5, {mpz_class(3), mpz_class(1), mpz_class(0), mpz_class(2), mpz_class(7)});
    std::vector<mpz_class> coords = a.coords();
    EXPECT_EQ(CycInt::normalize(5, coords), a);
    // Adding the cyclotomic relation does not change the class.
    const CycInt b = CycInt::normalize(5, {mpz_class(4), mpz_class(2), mpz_class(1), mpz_class(3), mpz_class(8)});
    EXPECT_EQ(a, b);
    EXPECT_EQ(CycInt::zeta_pow(5, 5), CycInt::one(5));
    EXPECT_EQ(CycInt::zeta_pow(5, -1), CycInt::zeta_pow(5, 4));
}

TEST(CycInt, RootOfUnityExponent) {
    for (long k = 0; k < 7; ++k) EXPECT_EQ(CycInt::zeta_pow(7, k).root_of_unity_exponent(), k);
    EXPECT_EQ(CycInt::from_int(7, 2).root_of_unity_exponent(), -1);
    EXPECT_EQ(CycInt::from_int(2, -1).root_of_unity_exponent(), 1);
}

TEST(CycIntProperty, AgreesWithComplexArithmetic) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coeff(-20, 20);
    for (unsigned l : {2U, 3U, 5U, 7U}) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<mpz_class> a(l), b(l);
            for (auto& c : a) c = coeff(rng);
            for (auto& c : b) c = coeff(rng);
            const CycInt x = CycInt::normalize(l, a);
            const CycInt y = CycInt::normalize(l, b);
            const std::complex<double> got = (x * y).to_complex();
            const std::complex<double> want = x.to_complex() * y.to_complex();
            EXPECT_NEAR(got.real(), want.real(), 1e-9 * (1 + std::abs(want)));
            EXPECT_NEAR(got.imag(), want.imag(), 1e-9 * (1 + std::abs(want)));
            EXPECT_EQ(x * y, y * x);
            EXPECT_EQ(x * CycInt::one(l), x);
        }
    }
}

TEST(CycIntProperty, MultiplicationAssociative) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<mpz_class> a(5), b(5), c(5);
        for (auto& v : a) v = coeff(rng);
        for (auto& v : b) v = coeff(rng);
        for (auto& v : c) v = coeff(rng);
        const CycInt x = CycInt::normalize(5, a), y = CycInt::normalize(5, b), z = CycInt::normalize(5, c);
        EXPECT_EQ((x * y) * z, x * (y * z));
    }
}

TEST(Padic, HenselLiftReproducesProduct) {
    const IntPoly f = int_poly({1, 0, 1});
    const auto [g, h] = hensel_lift(f, zp(5, {2, 1}), zp(5, {3, 1}), 6);
    const mpz_class m = pow_ui(5, 6);
    EXPECT_EQ(reduce_coeffs(sub(f, mul(g, h)), m), IntPoly{});
    EXPECT_EQ(g.back(), 1);
}

TEST(Padic, IrreducibilityOverQ) {
    EXPECT_TRUE(is_irreducible_over_q(int_poly({1, 0, 1})));
    EXPECT_TRUE(is_irreducible_over_q(int_poly({1, 0, 0, 0, 1})));  // reducible mod every prime
    EXPECT_TRUE(is_irreducible_over_q(int_poly({-97, 0, 0, 0, 0, 0, 0, 0, 1})));
    EXPECT_FALSE(is_irreducible_over_q(int_poly({-4, 0, 1})));
    EXPECT_FALSE(is_irreducible_over_q(int_poly({4, 0, 0, 0, 1})));  // (x^2+2x+2)(x^2-2x+2)
    EXPECT_FALSE(is_irreducible_over_q(int_poly({-16, 0, 0, 0, 0, 0, 0, 0, 1})));
    EXPECT_FALSE(is_irreducible_over_q(mul(int_poly({1, 1, 1}), int_poly({-3, 0, 0, 1}))));
}

TEST(Arith, LegendreAndValuation) {
    EXPECT_EQ(legendre(mpz_class(-1), 13), 1);
    EXPECT_EQ(legendre(mpz_class(-1), 7), -1);
    EXPECT_EQ(legendre(mpz_class(14), 7), 0);
    EXPECT_EQ(valuation(mpz_class(250), 5), 3U);
    EXPECT_TRUE(is_prime(1000000007ULL));
    EXPECT_FALSE(is_prime(561));
}

}  // namespace
}  // namespace arteq
