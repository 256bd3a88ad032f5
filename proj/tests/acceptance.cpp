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

// Acceptance run: one PASS/FAIL line per criterion. Every check is exact;
// the only tolerances are the wall-clock limits below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "arteq/error.hpp"
#include "support.hpp"

namespace arteq {
namespace {

using fixtures::field;
namespace ts = testing_support;

constexpr double kSplittingLimit = 30.0;
constexpr double kVanishingLimit = 120.0;
constexpr double kSolverLimit = 120.0;
constexpr double kRoundTripLimit = 120.0;
constexpr double kRemarkLimit = 60.0;
constexpr double kEquivalenceLimit = 300.0;
constexpr double kFalsificationLimit = 60.0;
constexpr double kOracleLimit = 60.0;
constexpr u64 kSolverAuxBound = 10000;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

bool good_prime(const NumberField& K, u64 p) {
    if (p == 2 || !is_p_maximal(K, p)) return false;
    for (const auto& P : split_prime(K, p)) {
        if (P.e != 1) return false;
    }
    return true;
}

void splitting_soundness(Outcome& o) {
    std::size_t checked = 0;
    for (const char* label : {"Q", "Qi", "Qsqrt2", "Qsqrtm2", "Qsqrt3", "Qsqrtm3", "Qcbrt2", "Qzeta8", "Oct97", "Oct1552"}) {
        const FieldPtr K = field(label);
        for (u64 p : primes_up_to(1000)) {
            if (!is_p_maximal(*K, p)) continue;
            unsigned sum = 0;
            for (const auto& P : split_prime(*K, p)) sum += P.e * P.f;
            o.require(static_cast<int>(sum) == K->degree(), std::string(label) + " p=" + std::to_string(p));
            ++checked;
        }
    }
    o.detail << checked << " (field, p) pairs";
}

std::vector<CharacterRep> fixture_characters(const FieldPtr& K) {
    std::vector<CharacterRep> out{TrivialChar{K, 2}};
    for (const auto& d : std::vector<std::vector<long>>{{-1}, {2}, {3, 1}, {1, 1}, {-5, 2}, {7, 0, 1}}) {
        const auto chi = quad_char(ts::elem(K, d));
        if (!chi.is_trivial()) out.push_back(chi);
    }
    if (K->is_rationals()) {
        out.push_back(TrivialChar{K, 3});
        out.push_back(make_dirichlet(3, 9, {1}));
        out.push_back(make_dirichlet(3, 7, {2}));
        out.push_back(make_dirichlet(5, 11, {1}));
        out.push_back(make_dirichlet(2, 40, {1, 1, 1}));
    }
    return out;
}

void vanishing_order(Outcome& o) {
    std::size_t checked = 0;
    for (const auto& label : fixtures::labels()) {
        const FieldPtr K = field(label);
        for (const auto& chi : fixture_characters(K)) {
            for (u64 p : primes_up_to(500)) {
                if (!is_p_maximal(*K, p)) continue;
                unsigned ones = 0;
                for (const auto& P : split_prime(*K, p)) {
                    const auto v = eval_char(chi, *K, P);
                    ones += v && v->is_one();
                }
                o.require(vanishing_order_at_one(local_factor_at_p(chi, *K, p)) == ones,
                          label + " " + chi.describe() + " p=" + std::to_string(p));
                ++checked;
            }
        }
    }
    o.detail << checked << " (character, p) pairs";
}

void grunwald_wang(Outcome& o) {
    std::mt19937_64 rng(20261016);
    std::size_t instances = 0;
    const auto primes = primes_up_to(400);
    for (unsigned l : {2U, 3U, 5U}) {
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t k = 1 + rng() % 4;
            std::vector<GwTarget> targets;
            while (targets.size() < k) {
                const u64 p = primes[rng() % primes.size()];
                if (std::any_of(targets.begin(), targets.end(), [&](const GwTarget& t) { return t.p == p; })) continue;
                targets.push_back({p, static_cast<unsigned>(rng() % l)});
            }
            const DirichletCharQ chi = grunwald_wang_Q(l, targets, kSolverAuxBound);
            for (const auto& t : targets) {
                const auto e = chi.exponent_at(t.p);
                o.require(e && *e == t.exponent, "l=" + std::to_string(l) + " p=" + std::to_string(t.p));
            }
            ++instances;
        }
    }
    const auto odd = primes_between(3, 300);
    for (const auto& label : fixtures::labels()) {
        const FieldPtr K = field(label);
        for (int trial = 0; trial < 100;) {
            const u64 p = odd[rng() % odd.size()];
            if (!good_prime(*K, p)) continue;
            std::vector<std::pair<PrimeIdealData, int>> targets;
            for (const auto& P : split_prime(*K, p)) {
                if (rng() % 3 != 0 || targets.empty()) targets.emplace_back(P, rng() % 2 ? 1 : -1);
            }
            const CharacterRep chi = grunwald_wang_quad_K(K, targets);
            for (const auto& [P, s] : targets) {
                o.require(eval_char(chi, *K, P) == CycInt::from_int(2, s), label + " p=" + std::to_string(p));
            }
            ++trial;
            ++instances;
        }
    }
    o.detail << instances << " instances, auxiliary bound " << kSolverAuxBound;
}

void round_trip(Outcome& o) {
    std::size_t checked = 0;
    std::size_t isos = 0;
    for (const auto& sigma : ts::fixture_isomorphisms(true)) {
        ++isos;
        const CharIso psi = CharIso::induced_by(sigma, 2);
        for (u64 p : ts::valid_primes(*sigma.source(), *sigma.target(), 500)) {
            o.require(reconstruct_prime_matching(psi, p) == prime_map_of_iso(sigma, p),
                      sigma.source()->label() + "->" + sigma.target()->label() + " p=" + std::to_string(p));
            ++checked;
        }
    }
    o.detail << isos << " isomorphisms, " << checked << " (sigma, p) pairs";
}

void remark(Outcome& o) {
    const FieldPtr Q = field("Q");
    const CharIso psi = remark_rule(5);
    const auto sample = ts::rational_quadratic_sample(30);
    std::size_t swapped = 0;
    for (const auto& chi : sample) {
        const CharacterRep image = psi.apply(chi);
        o.require(psi.apply(image) == chi, "involution at " + chi.describe());
        for (u64 q : primes_up_to(10000)) {
            if (q % 4 != 1) continue;
            const auto P = split_prime(*Q, q).front();
            o.require(eval_char(chi, *Q, P) == eval_char(image, *Q, P), chi.describe() + " q=" + std::to_string(q));
        }
        if (image == chi) continue;
        ++swapped;
        bool caught = false;
        for (u64 q : primes_up_to(100)) {
            if (q % 4 != 3) continue;
            const auto P = split_prime(*Q, q).front();
            caught = caught || eval_char(chi, *Q, P) != eval_char(image, *Q, P);
        }
        o.require(caught, "no failure at q = 3 mod 4 for " + chi.describe());
    }
    o.detail << sample.size() << " characters, " << swapped << " swapped";
}

void arithmetic_equivalence(Outcome& o) {
    const FieldPtr A = fixtures::octic_a();
    const FieldPtr B = fixtures::octic_b();
    const u64 N = 10000;
    const GassmannReport g = gassmann_check(A, B, N);
    o.require(g.splitting_types_equal, "splitting types differ at " + std::to_string(g.first_type_mismatch));
    o.require(g.zeta.equal, "local zeta factors differ at " + std::to_string(g.zeta.first_mismatch));
    o.require(g.isomorphisms == 0, "isomorphism found");
    const auto ca = dirichlet_coefficients_skipping(TrivialChar{A, 2}, *A, N);
    const auto cb = dirichlet_coefficients_skipping(TrivialChar{B, 2}, *B, N);
    std::size_t compared = 0;
    for (u64 n = 1; n <= N; ++n) {
        if (!ca.a[n] || !cb.a[n]) continue;
        o.require(*ca.a[n] == *cb.a[n], "a_" + std::to_string(n));
        ++compared;
    }
    o.detail << A->label() << " vs " << B->label() << ": " << g.tested << " primes, " << compared
             << " coefficients, " << g.excluded.size() << " excluded prime(s), " << g.isomorphisms << " isomorphisms";
}

void falsification(Outcome& o) {
    const FieldPtr Q = field("Q");
    const CharIso psi = ts::swap_two_three();
    std::optional<u64> not_single;
    for (u64 p : primes_between(3, 199)) {
        try {
            reconstruct_prime_matching(psi, p);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::NotSinglePrime) {
                not_single = p;
                break;
            }
        }
    }
    const CompatReport r = verify_compatibility(psi, ts::identity_matchings(*Q, 199), 199, ts::rational_quadratic_sample(13));
    o.require(not_single.has_value() || !r.passed(), "adversarial rule passed every check");
    o.detail << "NotSinglePrime at " << (not_single ? std::to_string(*not_single) : "none") << ", "
             << r.failures.size() << " compatibility failures below 200";
}

void oracles(Outcome& o) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coeff(-40, 40);
    std::size_t residues = 0;
    for (const char* label : {"Q", "Qi", "Qsqrt2", "Qsqrtm2", "Qsqrt3", "Qsqrtm3", "Qcbrt2", "Qzeta8"}) {
        const FieldPtr K = field(label);
        for (u64 p : primes_between(3, 169)) {
            if (!is_p_maximal(*K, p)) continue;
            for (const auto& P : split_prime(*K, p)) {
                if (P.norm() > 169 || P.e != 1) continue;
                const u64 q = mpz_class(P.norm()).get_ui();
                std::set<std::vector<u64>> squares;
                for (u64 idx = 0; idx < q; ++idx) {
                    std::vector<u64> c;
                    for (u64 rest = idx, i = 0; i < P.f; ++i, rest /= p) c.push_back(rest % p);
                    const PolyZp a(p, c);
                    squares.insert(rem(a * a, P.local_factor).coeffs());
                }
                for (int trial = 0; trial < 40; ++trial) {
                    IntPoly num;
                    for (int i = 0; i < K->degree(); ++i) num.emplace_back(coeff(rng));
                    const PolyZp red = rem(PolyZp::from_int_poly(num, p), P.local_factor);
                    if (red.is_zero()) continue;
                    const FieldElement d(K, to_rat(num));
                    const bool want = squares.count(red.coeffs()) > 0;
                    o.require(residue_symbol(d, P, 2)->is_one() == want, std::string(label) + " p=" + std::to_string(p));
                    ++residues;
                }
            }
        }
    }
    const FieldPtr Ki = field("Qi");
    const auto c = dirichlet_coefficients(TrivialChar{Ki, 2}, *Ki, 200);
    for (long n = 1; n <= 200; ++n) {
        long reps = 0;
        for (long a = -15; a <= 15; ++a) {
            for (long b = -15; b <= 15; ++b) reps += a * a + b * b == n;
        }
        o.require(*c.a[static_cast<std::size_t>(n)] == CycInt::from_int(2, reps / 4), "a_" + std::to_string(n));
    }
    o.detail << residues << " residue symbols, 200 Gaussian ideal counts";
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<void(Outcome&)> run;
};

}  // namespace
}  // namespace arteq

int main() {
    using namespace arteq;
    const std::vector<Criterion> criteria = {
        {1, "splitting soundness", kSplittingLimit, splitting_soundness},
        {2, "vanishing order at T = 1", kVanishingLimit, vanishing_order},
        {3, "Grunwald-Wang solver", kSolverLimit, grunwald_wang},
        {4, "induced/reconstructed matching round trip", kRoundTripLimit, round_trip},
        {5, "remark rule counterexample", kRemarkLimit, remark},
        {6, "arithmetic equivalence without isomorphism", kEquivalenceLimit, arithmetic_equivalence},
        {7, "falsification path", kFalsificationLimit, falsification},
        {8, "oracle equivalence", kOracleLimit, oracles},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(seconds <= c.limit_seconds, "over time limit");
        failed += o.pass ? 0 : 1;
        std::printf("criterion %d %s  %s  (%s; %.2f s, limit %.0f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title,
                    o.detail.str().c_str(), seconds, c.limit_seconds);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
