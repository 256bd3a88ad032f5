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

#include "arteq/poly_zp.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "arteq/error.hpp"

namespace arteq {

PolyZp::PolyZp(u64 p) : p_(p) {
    if (p < 2 || p > 0xFFFFFFFFULL) throw Error(ErrorKind::InvalidArgument, "modulus out of range");
}

PolyZp::PolyZp(u64 p, std::vector<u64> coeffs) : PolyZp(p) {
    c_ = std::move(coeffs);
    for (auto& c : c_) c %= p_;
    normalize();
}

PolyZp PolyZp::constant(u64 p, u64 c) { return PolyZp(p, {c}); }

PolyZp PolyZp::monomial(u64 p, unsigned deg, u64 c) {
    std::vector<u64> v(deg + 1, 0);
    v[deg] = c;
    return PolyZp(p, std::move(v));
}

PolyZp PolyZp::from_int_poly(const IntPoly& f, u64 p) {
    std::vector<u64> v;
    v.reserve(f.size());
    for (const auto& c : f) v.push_back(reduce_mod(c, p));
    return PolyZp(p, std::move(v));
}

IntPoly PolyZp::to_int_poly() const {
    IntPoly out;
    out.reserve(c_.size());
    for (u64 c : c_) out.emplace_back(static_cast<unsigned long>(c));
    return out;
}

void PolyZp::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyZp& PolyZp::operator+=(const PolyZp& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
        if (c_[i] >= p_) c_[i] -= p_;
    }
    normalize();
    return *this;
}

PolyZp& PolyZp::operator-=(const PolyZp& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p_ - o.c_[i];
    normalize();
    return *this;
}

PolyZp& PolyZp::operator*=(const PolyZp& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<u64> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            out[i + j] = (out[i + j] + c_[i] * o.c_[j]) % p_;
        }
    }
    c_ = std::move(out);
    normalize();
    return *this;
}

PolyZp PolyZp::operator-() const {
    PolyZp out(p_);
    out.c_.reserve(c_.size());
    for (u64 c : c_) out.c_.push_back(c == 0 ? 0 : p_ - c);
    return out;
}

PolyZp PolyZp::scaled(u64 c) const {
    PolyZp out = *this;
    c %= p_;
    for (auto& x : out.c_) x = x * c % p_;
    out.normalize();
    return out;
}

u64 PolyZp::eval(u64 x) const {
    u64 acc = 0;
    x %= p_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
    return acc;
}

std::string PolyZp::to_string(const std::string& var) const { return arteq::to_string(to_int_poly(), var); }

std::pair<PolyZp, PolyZp> divmod(const PolyZp& a, const PolyZp& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
    const u64 p = a.prime();
    if (a.degree() < b.degree()) return {PolyZp(p), a};
    std::vector<u64> r = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<u64> q(r.size() - bc.size() + 1, 0);
    const u64 inv_lead = inv_mod(b.lead(), p);
    for (std::size_t k = q.size(); k-- > 0;) {
        const u64 c = r[k + bc.size() - 1] * inv_lead % p;
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) {
            const u64 sub = c * bc[j] % p;
            u64& slot = r[k + j];
            slot = slot >= sub ? slot - sub : slot + p - sub;
        }
    }
    r.resize(bc.size() - 1);
    return {PolyZp(p, std::move(q)), PolyZp(p, std::move(r))};
}

PolyZp rem(const PolyZp& a, const PolyZp& b) {
    if (a.degree() < b.degree()) return a;
    return divmod(a, b).second;
}

PolyZp make_monic(const PolyZp& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return a.scaled(inv_mod(a.lead(), a.prime()));
}

PolyZp gcd(PolyZp a, PolyZp b) {
    while (!b.is_zero()) {
        PolyZp r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

XgcdResult xgcd(const PolyZp& a, const PolyZp& b) {
    const u64 p = a.prime();
    PolyZp r0 = a;
    PolyZp r1 = b;
    PolyZp s0 = PolyZp::constant(p, 1);
    PolyZp s1(p);
    PolyZp t0(p);
    PolyZp t1 = PolyZp::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const u64 inv = inv_mod(r0.lead(), p);
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

PolyZp derivative(const PolyZp& a) {
    const u64 p = a.prime();
    if (a.degree() < 1) return PolyZp(p);
    std::vector<u64> out(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) out[i - 1] = a.coeffs()[i] * (i % p) % p;
    return PolyZp(p, std::move(out));
}

PolyZp mul_mod(const PolyZp& a, const PolyZp& b, const PolyZp& m) { return rem(a * b, m); }

PolyZp pow_mod(const PolyZp& base, const mpz_class& exp, const PolyZp& m) {
    PolyZp result = rem(PolyZp::constant(base.prime(), 1), m);
    PolyZp b = rem(base, m);
    const std::size_t bits = exp == 0 ? 0 : mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mul_mod(result, result, m);
        if (mpz_tstbit(exp.get_mpz_t(), i) != 0) result = mul_mod(result, b, m);
    }
    return result;
}

std::strong_ordering canonical_compare(const PolyZp& a, const PolyZp& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        if (auto c = a.coeffs()[i] <=> b.coeffs()[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

namespace {

mpz_class prime_power(u64 p, unsigned e) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, e);
    return q;
}

// Square-free decomposition of a monic polynomial over F_p.
void squarefree_parts(const PolyZp& f, unsigned scale, std::vector<ZpFactor>& out) {
    const u64 p = f.prime();
    PolyZp c = gcd(f, derivative(f));
    PolyZp w = divmod(f, c).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        PolyZp y = gcd(w, c);
        PolyZp z = divmod(w, y).first;
        if (z.degree() > 0) out.push_back({make_monic(z), i * scale});
        ++i;
        w = std::move(y);
        c = divmod(c, w).first;
    }
    if (c.degree() > 0) {
        // c is a polynomial in x^p; take the p-th root coefficientwise.
        std::vector<u64> root;
        for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
        squarefree_parts(make_monic(PolyZp(p, std::move(root))), scale * static_cast<unsigned>(p), out);
    }
}

std::vector<std::pair<PolyZp, unsigned>> distinct_degree(PolyZp g) {
    std::vector<std::pair<PolyZp, unsigned>> out;
    const u64 p = g.prime();
    const PolyZp x = PolyZp::x(p);
    PolyZp h = rem(x, g);
    for (unsigned i = 1; g.degree() >= 2 * static_cast<int>(i); ++i) {
        h = pow_mod(h, mpz_class(static_cast<unsigned long>(p)), g);
        PolyZp d = gcd(g, h - x);
        if (d.degree() > 0) {
            out.emplace_back(d, i);
            g = divmod(g, d).first;
            h = rem(h, g);
        }
    }
    if (g.degree() > 0) out.emplace_back(g, static_cast<unsigned>(g.degree()));
    return out;
}

PolyZp random_poly(u64 p, int below_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> dist(0, p - 1);
    std::vector<u64> v(static_cast<std::size_t>(below_degree));
    for (auto& c : v) c = dist(rng);
    return PolyZp(p, std::move(v));
}

void equal_degree(const PolyZp& g, unsigned d, std::mt19937_64& rng, std::vector<PolyZp>& out) {
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g);
        return;
    }
    const u64 p = g.prime();
    const mpz_class half = (prime_power(p, d) - 1) / 2;
    while (true) {
        PolyZp a = random_poly(p, g.degree(), rng);
        if (a.degree() < 1) continue;
        PolyZp b(p);
        if (p == 2) {
            // Trace map F_{2^d} -> F_2.
            PolyZp t = a;
            b = a;
            for (unsigned j = 1; j < d; ++j) {
                t = mul_mod(t, t, g);
                b += t;
            }
        } else {
            b = pow_mod(a, half, g) - PolyZp::constant(p, 1);
        }
        PolyZp e = gcd(g, b);
        if (e.degree() > 0 && e.degree() < g.degree()) {
            equal_degree(e, d, rng, out);
            equal_degree(divmod(g, e).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

bool is_irreducible(const PolyZp& f) {
    if (f.degree() < 1) return false;
    const PolyZp g = make_monic(f);
    if (gcd(g, derivative(g)).degree() > 0) return false;
    const auto dd = distinct_degree(g);
    return dd.size() == 1 && dd.front().second == static_cast<unsigned>(g.degree());
}

std::vector<ZpFactor> factor(const PolyZp& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "polynomial vanishes mod " + std::to_string(f.prime()));
    std::vector<ZpFactor> out;
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(seed);
    std::vector<ZpFactor> parts;
    squarefree_parts(make_monic(f), 1, parts);
    for (const auto& part : parts) {
        for (const auto& [block, d] : distinct_degree(part.poly)) {
            std::vector<PolyZp> irreducibles;
            equal_degree(block, d, rng, irreducibles);
            for (auto& g : irreducibles) out.push_back({std::move(g), part.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(), [](const ZpFactor& a, const ZpFactor& b) { return canonical_less(a.poly, b.poly); });
    // Merge equal irreducibles.
    std::vector<ZpFactor> merged;
    for (auto& fac : out) {
        if (!merged.empty() && merged.back().poly == fac.poly) {
            merged.back().multiplicity += fac.multiplicity;
        } else {
            merged.push_back(std::move(fac));
        }
    }
    return merged;
}

std::vector<ZpFactor> poly_factor_mod_p(const IntPoly& f, u64 p, std::uint64_t seed) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    return factor(PolyZp::from_int_poly(f, p), seed);
}

}  // namespace arteq
