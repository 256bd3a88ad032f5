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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "arteq/error.hpp"
#include "arteq/fixtures.hpp"
#include "arteq/number_field.hpp"

namespace arteq {
namespace {

using fixtures::field;

FieldElement elem(const FieldPtr& K, std::vector<long> num, long den = 1) {
    RatPoly rep;
    for (long c : num) rep.emplace_back(mpq_class(c, den));
    for (auto& c : rep) c.canonicalize();
    return FieldElement(K, rep);
}

template <class F>
ErrorKind error_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

TEST(NumberField, RejectsBadPolynomials) {
    EXPECT_EQ(error_kind([] { NumberField("bad", int_poly({1, 0, 2})); }), ErrorKind::NotMonic);
    EXPECT_EQ(error_kind([] { NumberField("bad", int_poly({-4, 0, 1})); }), ErrorKind::NotIrreducible);
    EXPECT_EQ(error_kind([] { NumberField("bad", int_poly({4, 0, 0, 0, 1})); }), ErrorKind::NotIrreducible);
}

TEST(SplitPrime, GaussianIntegers) {
    const auto K = field("Qi");
    const auto at5 = split_prime(*K, 5);
    ASSERT_EQ(at5.size(), 2U);
    for (const auto& P : at5) {
        EXPECT_EQ(P.e, 1U);
        EXPECT_EQ(P.f, 1U);
    }
    EXPECT_EQ(at5[0].local_factor, PolyZp(5, {2, 1}));
    const auto at3 = split_prime(*K, 3);
    ASSERT_EQ(at3.size(), 1U);
    EXPECT_EQ(at3[0].f, 2U);
    EXPECT_EQ(at3[0].norm(), 9);
    const auto at2 = split_prime(*K, 2);
    ASSERT_EQ(at2.size(), 1U);
    EXPECT_EQ(at2[0].e, 2U);
    EXPECT_EQ(at2[0].f, 1U);
}

TEST(SplitPrime, CubeRootOfTwoAtFive) {
    const auto at5 = split_prime(*field("Qcbrt2"), 5);
    ASSERT_EQ(at5.size(), 2U);
    EXPECT_EQ(at5[0].f, 1U);
    EXPECT_EQ(at5[1].f, 2U);
    EXPECT_EQ(at5[1].local_factor, PolyZp(5, {4, 3, 1}));
}

TEST(SplitPrime, DedekindCriterion) {
    EXPECT_FALSE(is_p_maximal(*field("Qsqrtm3"), 2));
    EXPECT_FALSE(is_p_maximal(*field("Qsqrt8"), 2));
    EXPECT_FALSE(is_p_maximal(*field("Qcbrt16"), 2));
    EXPECT_TRUE(is_p_maximal(*field("Qcbrt16"), 3));
    EXPECT_TRUE(is_p_maximal(*field("Qi"), 2));
    EXPECT_TRUE(is_p_maximal(*field("Qsqrt3"), 3));
    EXPECT_EQ(error_kind([] { split_prime(*field("Qsqrtm3"), 2); }), ErrorKind::NotPMaximal);
    // 1 + 4Z is where x^2 - d fails at 2; 97 = 1 mod 4.
    EXPECT_FALSE(is_p_maximal(*field("Oct97"), 2));
}

TEST(SplitPrimeProperty, DegreeSumOverFixtures) {
    for (const auto& label : fixtures::labels()) {
        const auto K = field(label);
        for (u64 p : primes_up_to(1000)) {
            if (!is_p_maximal(*K, p)) continue;
            unsigned sum = 0;
            for (const auto& P : split_prime(*K, p)) sum += P.e * P.f;
            EXPECT_EQ(static_cast<int>(sum), K->degree()) << label << " at " << p;
        }
    }
}

TEST(ResidueSymbol, RationalExamples) {
    const auto Q = field("Q");
    const auto m1 = FieldElement::from_int(Q, -1);
    EXPECT_EQ(*residue_symbol(m1, split_prime(*Q, 13)[0], 2), CycInt::one(2));
    EXPECT_EQ(*residue_symbol(m1, split_prime(*Q, 7)[0], 2), CycInt::from_int(2, -1));
    EXPECT_EQ(error_kind([&] { residue_symbol(m1, split_prime(*Q, 2)[0], 2); }), ErrorKind::EvenPrime);
}

TEST(ResidueSymbol, GaussianExample) {
    const auto K = field("Qi");
    const auto at5 = split_prime(*K, 5);
    // at5[0] is (5, theta + 2) = (5, theta - 3): theta reduces to 3.
    const auto d = elem(K, {4, 4});
    EXPECT_EQ(reduce_at(d, at5[0]).rep(), PolyZp(5, {1}));
    EXPECT_EQ(*residue_symbol(d, at5[0], 2), CycInt::one(2));
    // theta reduces to 2 at at5[1]: 4 + 8 = 12 = 2, a non-square.
    EXPECT_EQ(*residue_symbol(d, at5[1], 2), CycInt::from_int(2, -1));
}

TEST(ResidueSymbol, ValuationDividedOutAtUnramifiedPrimes) {
    const auto Q = field("Q");
    const auto P7 = split_prime(*Q, 7)[0];
    EXPECT_FALSE(residue_symbol(FieldElement::from_int(Q, 7), P7, 2).has_value());
    // 49 * 3: valuation 2, unit part 3 is a non-residue mod 7.
    EXPECT_EQ(*residue_symbol(FieldElement::from_int(Q, 147), P7, 2), CycInt::from_int(2, -1));
    EXPECT_EQ(unramified_valuation(FieldElement::from_int(Q, 147), P7), 2U);
    // Over Q(i): 5 = (2 + i)(2 - i); (2 + i) has valuation one at exactly one prime over 5.
    const auto K = field("Qi");
    const auto at5 = split_prime(*K, 5);
    const auto g = elem(K, {2, 1});
    EXPECT_EQ(unramified_valuation(g, at5[0]) + unramified_valuation(g, at5[1]), 1U);
    EXPECT_EQ(unramified_valuation(g * g * elem(K, {1, 1}), at5[0]) + unramified_valuation(g * g, at5[1]), 2U);
}

// Oracle: enumerate all residues of F_p[x]/(g) and their squares.
TEST(ResidueSymbolOracle, ExhaustiveSquaresUpTo169) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coeff(-40, 40);
    int fields_checked = 0;
    for (const auto& label : {"Q", "Qi", "Qsqrt2", "Qsqrtm2", "Qsqrt3", "Qcbrt2", "Qzeta8"}) {
        const auto K = field(label);
        for (u64 p : primes_between(3, 169)) {
            if (!is_p_maximal(*K, p)) continue;
            for (const auto& P : split_prime(*K, p)) {
                if (P.norm() > 169 || P.e != 1) continue;
                const PolyZp& g = P.local_factor;
                const u64 q = mpz_class(P.norm()).get_ui();
                std::set<std::vector<u64>> squares;
                for (u64 idx = 0; idx < q; ++idx) {
                    std::vector<u64> c;
                    for (u64 rest = idx, i = 0; i < P.f; ++i, rest /= p) c.push_back(rest % p);
                    const PolyZp a(p, c);
                    squares.insert(rem(a * a, g).coeffs());
                }
                for (int trial = 0; trial < 40; ++trial) {
                    std::vector<long> num;
                    for (int i = 0; i < K->degree(); ++i) num.push_back(coeff(rng));
                    const auto d = elem(K, num);
                    const PolyZp red = rem(PolyZp::from_int_poly(
                                               [&] {
                                                   IntPoly n;
                                                   for (const auto& c : d.rep()) n.push_back(c.get_num());
                                                   return n;
                                               }(),
                                               p),
                                           g);
                    if (red.is_zero()) continue;
                    const bool want = squares.count(red.coeffs()) > 0;
                    EXPECT_EQ(residue_symbol(d, P, 2)->is_one(), want) << label << " p=" << p << " " << d.to_string();
                }
                ++fields_checked;
            }
        }
    }
    EXPECT_GT(fields_checked, 50);
}

TEST(ResidueSymbolProperty, Multiplicative) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(-25, 25);
    const std::vector<std::string> labels{"Qi", "Qsqrt2", "Qcbrt2", "Qzeta8", "Oct97"};
    const auto primes = primes_between(3, 400);
    int checked = 0;
    while (checked < 200) {
        const auto K = field(labels[rng() % labels.size()]);
        const u64 p = primes[rng() % primes.size()];
        if (!is_p_maximal(*K, p)) continue;
        const auto ps = split_prime(*K, p);
        const auto& P = ps[rng() % ps.size()];
        std::vector<long> a, b;
        for (int i = 0; i < K->degree(); ++i) {
            a.push_back(coeff(rng));
            b.push_back(coeff(rng));
        }
        const auto d1 = elem(K, a), d2 = elem(K, b);
        const auto s1 = residue_symbol(d1, P, 2), s2 = residue_symbol(d2, P, 2), s12 = residue_symbol(d1 * d2, P, 2);
        if (!s1 || !s2 || !s12) continue;
        EXPECT_EQ(*s12, *s1 * *s2);
        ++checked;
    }
}

TEST(FieldElement, ArithmeticReducesModuloDefiningPolynomial) {
    const auto K = field("Qi");
    const auto t = FieldElement::generator(K);
    EXPECT_EQ(t * t, FieldElement::from_int(K, -1));
    const auto c = field("Qcbrt2");
    EXPECT_EQ(FieldElement::generator(c).pow(3), FieldElement::from_int(c, 2));
    EXPECT_EQ(error_kind([&] { (void)(t + FieldElement::generator(c)); }), ErrorKind::BaseFieldMismatch);
}

TEST(IsSquare, Examples) {
    const auto Q = field("Q");
    EXPECT_TRUE(is_square(FieldElement::from_int(Q, 49)));
    EXPECT_FALSE(is_square(FieldElement::from_int(Q, -49)));
    EXPECT_FALSE(is_square(FieldElement::from_int(Q, 12)));
    const auto K = field("Qi");
    EXPECT_TRUE(is_square(FieldElement::from_int(K, -1)));
    EXPECT_TRUE(is_square(elem(K, {0, 2})));  // (1 + i)^2
    EXPECT_FALSE(is_square(elem(K, {4, 4})));
    const auto s = field("Qsqrt2");
    EXPECT_TRUE(is_square(elem(s, {3, 2})));  // (1 + sqrt2)^2
    EXPECT_TRUE(is_square(elem(s, {9, 4}, 4)));
    EXPECT_FALSE(is_square(elem(s, {0, 1})));
}

TEST(FindIsomorphisms, SqrtTwoAndSqrtEight) {
    const auto isos = find_isomorphisms(field("Qsqrt2"), field("Qsqrt8"));
    ASSERT_EQ(isos.size(), 2U);
    const auto K8 = field("Qsqrt8");
    EXPECT_EQ(isos[0].image_of_generator(), elem(K8, {0, -1}, 2));
    EXPECT_EQ(isos[1].image_of_generator(), elem(K8, {0, 1}, 2));
}

TEST(FindIsomorphisms, NonIsomorphicAndAutomorphisms) {
    EXPECT_TRUE(find_isomorphisms(field("Qsqrt2"), field("Qsqrt3")).empty());
    EXPECT_TRUE(find_isomorphisms(field("Qsqrt2"), field("Qcbrt2")).empty());
    const auto K = field("Qsqrt2");
    const auto autos = find_isomorphisms(K, K);
    ASSERT_EQ(autos.size(), 2U);
    EXPECT_EQ(autos[0].image_of_generator(), elem(K, {0, -1}));
    EXPECT_TRUE(autos[1].is_identity());
    EXPECT_EQ(find_isomorphisms(field("Qzeta8"), field("Qzeta8")).size(), 4U);
    EXPECT_EQ(find_isomorphisms(field("Qcbrt2"), field("Qcbrt2")).size(), 1U);
    const auto c = find_isomorphisms(field("Qcbrt2"), field("Qcbrt16"));
    ASSERT_EQ(c.size(), 1U);
    EXPECT_EQ(c[0].image_of_generator(), elem(field("Qcbrt16"), {0, 1}, 2));
}

TEST(FindIsomorphismsProperty, SymmetricCountsAndComposition) {
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"Qsqrt2", "Qsqrt8"}, {"Qcbrt2", "Qcbrt16"}, {"Qzeta8", "Qzeta8"}, {"Qsqrt2", "Qsqrtm2"}, {"Qi", "Qi"}};
    for (const auto& [a, b] : pairs) {
        const auto K = field(a), L = field(b);
        const auto fwd = find_isomorphisms(K, L);
        const auto bwd = find_isomorphisms(L, K);
        EXPECT_EQ(fwd.size(), bwd.size()) << a << " " << b;
        const auto autos = find_isomorphisms(K, K);
        for (const auto& s : fwd) {
            for (const auto& t : bwd) {
                const FieldIso comp = compose(t, s);
                EXPECT_TRUE(std::find(autos.begin(), autos.end(), comp) != autos.end());
            }
        }
    }
}

TEST(PrimeMapOfIso, CubeRootWorkedExample) {
    const auto sigma = find_isomorphisms(field("Qcbrt2"), field("Qcbrt16"))[0];
    const auto m = prime_map_of_iso(sigma, 5);
    const auto target = split_prime(*field("Qcbrt16"), 5);
    ASSERT_EQ(m.pairs.size(), 2U);
    EXPECT_EQ(target[m.pairs[0].second].local_factor, PolyZp(5, {4, 1}));
    EXPECT_EQ(m.f, (std::vector<unsigned>{1, 2}));
    EXPECT_EQ(target[m.pairs[1].second].f, 2U);
}

TEST(PrimeMapOfIso, GaussianConjugation) {
    const auto K = field("Qi");
    EXPECT_EQ(prime_map_of_iso(FieldIso::identity(K), 13), identity_matching(*K, 13));
    const auto conj = FieldIso(K, K, elem(K, {0, -1}));
    const auto m = prime_map_of_iso(conj, 5);
    EXPECT_EQ(m.pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}}));
}

TEST(PrimeMapOfIso, DenominatorClash) {
    const auto sigma = find_isomorphisms(field("Qsqrt2"), field("Qsqrt8"))[0];
    EXPECT_EQ(error_kind([&] { prime_map_of_iso(sigma, 2); }), ErrorKind::NotPMaximal);
    const auto c = find_isomorphisms(field("Qcbrt2"), field("Qcbrt16"))[0];
    EXPECT_EQ(error_kind([&] { prime_map_of_iso(c, 2); }), ErrorKind::NotPMaximal);
}

TEST(PrimeMapProperty, CompositionAndRigidity) {
    for (const auto& label : {"Qsqrt2", "Qzeta8", "Qi"}) {
        const auto K = field(label);
        const auto autos = find_isomorphisms(K, K);
        for (u64 p : primes_between(3, 200)) {
            if (!is_p_maximal(*K, p)) continue;
            for (const auto& s : autos) {
                for (const auto& t : autos) {
                    EXPECT_EQ(prime_map_of_iso(compose(s, t), p), compose(prime_map_of_iso(s, p), prime_map_of_iso(t, p)));
                }
            }
        }
        // First totally split odd prime: distinct automorphisms give distinct matchings.
        for (u64 p : primes_between(3, 1000)) {
            if (!is_p_maximal(*K, p)) continue;
            const auto ps = split_prime(*K, p);
            if (ps.size() != static_cast<std::size_t>(K->degree())) continue;
            std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
            for (const auto& s : autos) seen.insert(prime_map_of_iso(s, p).pairs);
            EXPECT_EQ(seen.size(), autos.size()) << label << " at " << p;
            break;
        }
    }
}

}  // namespace
}  // namespace arteq
