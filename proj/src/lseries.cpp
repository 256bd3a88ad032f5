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

#include "arteq/lseries.hpp"

#include <algorithm>
#include <sstream>

#include "arteq/error.hpp"

namespace arteq {

LocalFactor local_factor_one(unsigned l) { return LocalFactor{l, {CycInt::one(l)}}; }

LocalFactor multiply(const LocalFactor& a, const LocalFactor& b) {
    if (a.l != b.l) throw Error(ErrorKind::MixedOrder, "local factors of different order");
    LocalFactor out{a.l, std::vector<CycInt>(a.coefficients.size() + b.coefficients.size() - 1, CycInt::zero(a.l))};
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
        if (a.coefficients[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
            out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
        }
    }
    while (out.coefficients.size() > 1 && out.coefficients.back().is_zero()) out.coefficients.pop_back();
    return out;
}

std::string LocalFactor::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coefficients[i].to_string() << ")";
        if (i > 0) os << "T" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return first ? "0" : os.str();
}

LocalFactor local_factor_at_prime_ideal(const CharacterRep& chi, const NumberField& K, const PrimeIdealData& P) {
    const unsigned l = chi.order_l();
    const auto v = eval_char(chi, K, P);
    if (!v) return local_factor_one(l);
    LocalFactor out{l, std::vector<CycInt>(P.f + 1, CycInt::zero(l))};
    out.coefficients[0] = CycInt::one(l);
    out.coefficients[P.f] = -*v;
    return out;
}

LocalFactor local_factor_at_p(const CharacterRep& chi, const NumberField& K, u64 p) {
    LocalFactor out = local_factor_one(chi.order_l());
    for (const auto& P : split_prime(K, p)) out = multiply(out, local_factor_at_prime_ideal(chi, K, P));
    return out;
}

unsigned vanishing_order_at_one(const LocalFactor& F) {
    std::vector<CycInt> c = F.coefficients;
    unsigned k = 0;
    while (c.size() > 1) {
        CycInt sum = CycInt::zero(F.l);
        for (const auto& x : c) sum += x;
        if (!sum.is_zero()) break;
        // c = (T - 1) q: q_{i-1} = c_i + q_i, from the top down.
        std::vector<CycInt> q(c.size() - 1, CycInt::zero(F.l));
        q.back() = c.back();
        for (std::size_t i = q.size() - 1; i-- > 0;) q[i] = c[i + 1] + q[i + 1];
        c = std::move(q);
        ++k;
    }
    return k;
}

std::vector<Exclusion> excluded_primes(const NumberField& K, u64 bound) {
    std::vector<Exclusion> out;
    for (u64 p : primes_up_to(bound)) {
        if (mpz_divisible_ui_p(K.discriminant().get_mpz_t(), p) == 0) continue;
        if (!is_p_maximal(K, p)) out.push_back({p, "not " + std::to_string(p) + "-maximal in " + K.label()});
    }
    return out;
}

std::vector<Exclusion> excluded_primes(const NumberField& K, const NumberField& Kp, u64 bound) {
    std::vector<Exclusion> out = excluded_primes(K, bound);
    for (auto& e : excluded_primes(Kp, bound)) {
        auto it = std::find_if(out.begin(), out.end(), [&](const Exclusion& x) { return x.p == e.p; });
        if (it == out.end()) {
            out.push_back(std::move(e));
        } else {
            it->reason += "; " + e.reason;
        }
    }
    std::sort(out.begin(), out.end(), [](const Exclusion& a, const Exclusion& b) { return a.p < b.p; });
    return out;
}

namespace {

DirichletCoefficients coefficients_impl(const CharacterRep& chi, const NumberField& K, u64 N, bool strict) {
    if (N < 1) throw Error(ErrorKind::InvalidArgument, "coefficient bound must be positive");
    if (N > 50000000) throw Error(ErrorKind::BoundTooLarge, "coefficient bound above 5e7");
    const unsigned l = chi.order_l();
    DirichletCoefficients out{N, l, std::vector<std::optional<CycInt>>(N + 1), excluded_primes(K, N)};
    if (strict && !out.excluded.empty()) {
        throw Error(ErrorKind::BoundTooLarge,
                    "bound " + std::to_string(N) + " reaches excluded prime " + std::to_string(out.excluded.front().p),
                    out.excluded.front().p);
    }
    // Smallest prime factor sieve.
    std::vector<u64> spf(N + 1, 0);
    for (u64 i = 2; i <= N; ++i) {
        if (spf[i] != 0) continue;
        for (u64 j = i; j <= N; j += i) {
            if (spf[j] == 0) spf[j] = i;
        }
    }
    std::vector<bool> bad(N + 1, false);
    for (const auto& e : out.excluded) bad[e.p] = true;

    out.a[1] = CycInt::one(l);
    for (u64 p = 2; p <= N; ++p) {
        if (spf[p] != p || bad[p]) continue;
        const LocalFactor F = local_factor_at_p(chi, K, p);
        // Inverse power series: b_0 = 1, b_j = -sum_{i >= 1} c_i b_{j-i}.
        std::vector<CycInt> b{CycInt::one(l)};
        for (u64 pj = p; pj <= N; pj *= p) {
            const std::size_t j = b.size();
            CycInt acc = CycInt::zero(l);
            for (std::size_t i = 1; i <= j && i < F.coefficients.size(); ++i) acc += F.coefficients[i] * b[j - i];
            b.push_back(-acc);
            out.a[pj] = b.back();
            if (pj > N / p) break;
        }
    }
    for (u64 n = 2; n <= N; ++n) {
        const u64 p = spf[n];
        if (p == n) continue;
        u64 pk = 1;
        u64 rest = n;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
        }
        if (rest == 1) continue;  // prime power, filled above
        if (out.a[pk] && out.a[rest]) out.a[n] = *out.a[pk] * *out.a[rest];
    }
    return out;
}

}  // namespace

DirichletCoefficients dirichlet_coefficients(const CharacterRep& chi, const NumberField& K, u64 N) {
    return coefficients_impl(chi, K, N, true);
}

DirichletCoefficients dirichlet_coefficients_skipping(const CharacterRep& chi, const NumberField& K, u64 N) {
    return coefficients_impl(chi, K, N, false);
}

LComparison compare_lseries(const CharacterRep& chi, const NumberField& K, const CharacterRep& chip,
                            const NumberField& Kp, u64 B) {
    if (chi.order_l() != chip.order_l()) throw Error(ErrorKind::MixedOrder, "characters of different order");
    LComparison out;
    out.bound = B;
    out.excluded = excluded_primes(K, Kp, B);
    for (u64 p : primes_up_to(B)) {
        if (std::any_of(out.excluded.begin(), out.excluded.end(), [&](const Exclusion& e) { return e.p == p; })) continue;
        ++out.tested;
        LocalFactor a = local_factor_at_p(chi, K, p);
        LocalFactor b = local_factor_at_p(chip, Kp, p);
        if (!(a == b)) {
            out.equal = false;
            out.first_mismatch = p;
            out.left = std::move(a);
            out.right = std::move(b);
            break;
        }
    }
    return out;
}

namespace {

nlohmann::json coords_json(const CycInt& c) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : c.coords()) {
        if (x.fits_slong_p()) {
            out.push_back(x.get_si());
        } else {
            out.push_back(x.get_str());
        }
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const LocalFactor& F) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : F.coefficients) coeffs.push_back(coords_json(c));
    return {{"l", F.l}, {"coefficients", coeffs}};
}

nlohmann::json to_json(const Exclusion& e) { return {{"p", e.p}, {"reason", e.reason}}; }

nlohmann::json to_json(const DirichletCoefficients& c) {
    nlohmann::json excluded = nlohmann::json::array();
    for (const auto& e : c.excluded) excluded.push_back(to_json(e));
    nlohmann::json rows = nlohmann::json::array();
    for (u64 n = 1; n < c.a.size(); ++n) {
        if (c.a[n]) rows.push_back({{"n", n}, {"a", coords_json(*c.a[n])}});
    }
    return {{"bound", c.bound}, {"l", c.l}, {"excluded", excluded}, {"coefficients", rows}};
}

nlohmann::json to_json(const LComparison& c) {
    nlohmann::json excluded = nlohmann::json::array();
    for (const auto& e : c.excluded) excluded.push_back(to_json(e));
    nlohmann::json out = {{"verdict", c.equal ? "equal" : "first_mismatch"},
                          {"bound", c.bound},
                          {"tested_primes", c.tested},
                          {"excluded", excluded}};
    if (!c.equal) {
        out["p"] = c.first_mismatch;
        out["left"] = to_json(*c.left);
        out["right"] = to_json(*c.right);
    }
    return out;
}

std::string to_tsv(const DirichletCoefficients& c) {
    std::ostringstream os;
    os << "n";
    for (unsigned i = 0; i + 1 < std::max(2U, c.l); ++i) os << "\tc" << i;
    os << "\n";
    for (u64 n = 1; n < c.a.size(); ++n) {
        if (!c.a[n]) continue;
        os << n;
        for (const auto& x : c.a[n]->coords()) os << "\t" << x.get_str();
        os << "\n";
    }
    return os.str();
}

}  // namespace arteq
