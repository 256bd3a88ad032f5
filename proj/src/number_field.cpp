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

#include "arteq/number_field.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "arteq/error.hpp"
#include "arteq/padic.hpp"

namespace arteq {

// ---------------------------------------------------------------------------
// NumberField

NumberField::NumberField(std::string label, IntPoly defining_poly)
    : label_(std::move(label)), poly_(std::move(defining_poly)) {
    trim(poly_);
    if (arteq::degree(poly_) < 1) throw Error(ErrorKind::InvalidArgument, "defining polynomial must have degree >= 1");
    if (poly_.back() != 1) throw Error(ErrorKind::NotMonic, to_string(poly_) + " is not monic");
    if (!is_irreducible_over_q(poly_)) throw Error(ErrorKind::NotIrreducible, to_string(poly_) + " is reducible over Q");
    rat_poly_ = to_rat(poly_);
    disc_ = arteq::discriminant(poly_);
}

std::shared_ptr<const NumberField> NumberField::make(std::string label, IntPoly defining_poly) {
    return std::make_shared<const NumberField>(std::move(label), std::move(defining_poly));
}

bool same_field(const NumberField& a, const NumberField& b) {
    return &a == &b || (a.label() == b.label() && a.poly() == b.poly());
}

mpz_class PrimeIdealData::norm() const { return pow_ui(p, f); }

// ---------------------------------------------------------------------------
// Splitting

namespace {

struct DedekindResult {
    std::vector<ZpFactor> factors;
    bool maximal;
};

DedekindResult dedekind(const NumberField& K, u64 p, std::uint64_t seed) {
    DedekindResult out{poly_factor_mod_p(K.poly(), p, seed), true};
    IntPoly product = int_poly({1});
    for (const auto& fac : out.factors) {
        const IntPoly lift = fac.poly.to_int_poly();
        for (unsigned i = 0; i < fac.multiplicity; ++i) product = mul(product, lift);
    }
    IntPoly diff = sub(K.poly(), product);
    for (auto& c : diff) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), p);
    const PolyZp test = PolyZp::from_int_poly(diff, p);
    for (const auto& fac : out.factors) {
        if (fac.multiplicity >= 2 && rem(test, fac.poly).is_zero()) {
            out.maximal = false;
            break;
        }
    }
    return out;
}

}  // namespace

bool is_p_maximal(const NumberField& K, u64 p) { return dedekind(K, p, 0).maximal; }

std::vector<PrimeIdealData> split_prime(const NumberField& K, u64 p, std::uint64_t seed) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    auto [factors, maximal] = dedekind(K, p, seed);
    if (!maximal) {
        throw Error(ErrorKind::NotPMaximal, "Z[theta] is not " + std::to_string(p) + "-maximal in " + K.label(), p);
    }
    std::vector<PrimeIdealData> out;
    out.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        out.push_back({p, i, factors[i].multiplicity, static_cast<unsigned>(factors[i].poly.degree()),
                       std::move(factors[i].poly)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field, RatPoly rep) : field_(std::move(field)) {
    trim(rep);
    rep_ = arteq::degree(rep) >= field_->degree() ? arteq::rem(rep, field_->rat_poly()) : std::move(rep);
}

FieldElement FieldElement::from_int(FieldPtr field, const mpz_class& n) {
    return FieldElement(std::move(field), RatPoly{mpq_class(n)});
}

FieldElement FieldElement::generator(FieldPtr field) {
    return FieldElement(std::move(field), RatPoly{mpq_class(0), mpq_class(1)});
}

mpz_class FieldElement::denominator() const {
    mpz_class den = 1;
    for (const auto& c : rep_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    return den;
}

FieldElement FieldElement::pow(unsigned e) const {
    FieldElement result = from_int(field_, 1);
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        base = base * base;
        e >>= 1U;
    }
    return result;
}

std::string FieldElement::to_string() const { return arteq::to_string(rep_, "t"); }

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a.field(), b.field())) {
        throw Error(ErrorKind::BaseFieldMismatch, a.field()->label() + " vs " + b.field()->label());
    }
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field_, add(a.rep_, b.rep_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field_, sub(a.rep_, b.rep_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field_, mul(a.rep_, b.rep_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_field(a.field_, b.field_) && a.rep_ == b.rep_;
}

// ---------------------------------------------------------------------------
// Residue symbols

namespace {

PolyZp reduce_mod_p(const RatPoly& rep, u64 p) {
    std::vector<u64> coeffs;
    coeffs.reserve(rep.size());
    for (const auto& c : rep) {
        const u64 den = reduce_mod(c.get_den(), p);
        if (den == 0) throw Error(ErrorKind::DenominatorClash, "denominator divisible by " + std::to_string(p), p);
        coeffs.push_back(mul_mod(reduce_mod(c.get_num(), p), inv_mod(den, p), p));
    }
    return PolyZp(p, std::move(coeffs));
}

// Valuation of d at the unramified prime P and the residue of d / p^v.
std::pair<unsigned, FqElem> local_unit(const FieldElement& d, const PrimeIdealData& P) {
    if (P.e != 1) throw Error(ErrorKind::InvalidArgument, "local valuation needs an unramified prime", P.p);
    if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "valuation of zero", P.p);
    const u64 p = P.p;
    const mpz_class den = d.denominator();
    if (reduce_mod(den, p) == 0) throw Error(ErrorKind::DenominatorClash, "denominator divisible by p", p);
    IntPoly numer;
    for (const auto& c : d.rep()) {
        mpq_class scaled = c * den;
        numer.push_back(scaled.get_num());
    }
    const IntPoly& f = d.field()->poly();
    const PolyZp cofactor = divmod(PolyZp::from_int_poly(f, p), P.local_factor).first;
    auto field = FiniteField::make_unchecked(P.local_factor);
    for (unsigned k = 2; k <= (1U << 14U); k *= 2) {
        const auto [big_g, big_h] = hensel_lift(f, P.local_factor, cofactor, k);
        const mpz_class modulus = pow_ui(p, k);
        const IntPoly r = rem_monic_mod(numer, big_g, modulus);
        if (r.empty()) continue;
        unsigned v = std::numeric_limits<unsigned>::max();
        for (const auto& c : r) {
            if (c != 0) v = std::min(v, valuation(c, p));
        }
        const mpz_class pv = pow_ui(p, v);
        IntPoly unit = r;
        for (auto& c : unit) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pv.get_mpz_t());
        const PolyZp unit_mod_p = PolyZp::from_int_poly(unit, p).scaled(inv_mod(reduce_mod(den, p), p));
        return {v, FqElem(field, unit_mod_p)};
    }
    throw Error(ErrorKind::InvalidArgument, "valuation exceeds working precision", p);
}

}  // namespace

FqElem reduce_at(const FieldElement& d, const PrimeIdealData& P) {
    return FqElem(FiniteField::make_unchecked(P.local_factor), reduce_mod_p(d.rep(), P.p));
}

unsigned unramified_valuation(const FieldElement& d, const PrimeIdealData& P) { return local_unit(d, P).first; }

std::optional<CycInt> residue_symbol(const FieldElement& d, const PrimeIdealData& P, unsigned l) {
    if (P.p == 2) throw Error(ErrorKind::EvenPrime, "residue symbols are not evaluated above 2", 2);
    const FqElem r = reduce_at(d, P);
    if (!r.is_zero()) return fq_pow_residue(r, l);
    if (d.is_zero() || P.e > 1) return std::nullopt;
    const auto [v, unit] = local_unit(d, P);
    if (v % l != 0) return std::nullopt;
    return fq_pow_residue(unit, l);
}

// ---------------------------------------------------------------------------
// Root finding in K via p-adic lifting

namespace {

using FqVec = std::vector<FqElem>;

void trim_fq(FqVec& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

FqVec fq_sub(const FqVec& a, const FqVec& b, const FiniteFieldPtr& F) {
    FqVec out(std::max(a.size(), b.size()), FqElem::zero(F));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
    trim_fq(out);
    return out;
}

FqVec fq_mul(const FqVec& a, const FqVec& b, const FiniteFieldPtr& F) {
    if (a.empty() || b.empty()) return {};
    FqVec out(a.size() + b.size() - 1, FqElem::zero(F));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    trim_fq(out);
    return out;
}

std::pair<FqVec, FqVec> fq_divmod(const FqVec& a, const FqVec& b, const FiniteFieldPtr& F) {
    FqVec r = a;
    trim_fq(r);
    if (r.size() < b.size()) return {FqVec{}, r};
    FqVec q(r.size() - b.size() + 1, FqElem::zero(F));
    const FqElem lead_inv = b.back().inverse();
    while (r.size() >= b.size()) {
        const FqElem c = r.back() * lead_inv;
        const std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = r[shift + j] - c * b[j];
        r.pop_back();
        trim_fq(r);
    }
    trim_fq(q);
    return {q, r};
}

FqVec fq_gcd(FqVec a, FqVec b, const FiniteFieldPtr& F) {
    trim_fq(a);
    trim_fq(b);
    while (!b.empty()) {
        FqVec r = fq_divmod(a, b, F).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    const FqElem inv = a.back().inverse();
    for (auto& c : a) c = c * inv;
    return a;
}

FqVec fq_powmod(const FqVec& base, const mpz_class& e, const FqVec& m, const FiniteFieldPtr& F) {
    FqVec result = fq_divmod(FqVec{FqElem::one(F)}, m, F).second;
    const FqVec b = fq_divmod(base, m, F).second;
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = fq_divmod(fq_mul(result, result, F), m, F).second;
        if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = fq_divmod(fq_mul(result, b, F), m, F).second;
    }
    return result;
}

FqVec fq_derivative(const FqVec& a, const FiniteFieldPtr& F) {
    if (a.size() <= 1) return {};
    FqVec out;
    for (std::size_t i = 1; i < a.size(); ++i) {
        out.push_back(a[i] * FqElem(F, PolyZp::constant(F->prime(), i % F->prime())));
    }
    trim_fq(out);
    return out;
}

// Product of the distinct linear factors of a.
FqVec fq_linear_part(const FqVec& a, const FiniteFieldPtr& F) {
    const FqVec x{FqElem::zero(F), FqElem::one(F)};
    const FqVec xq = fq_powmod(x, F->order(), a, F);
    return fq_gcd(a, fq_sub(xq, x, F), F);
}

void fq_split_roots(const FqVec& g, const FiniteFieldPtr& F, std::mt19937_64& rng, FqVec& out) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        out.push_back(FqElem::zero(F) - g[0] * g[1].inverse());
        return;
    }
    const mpz_class half = (F->order() - 1) / 2;
    gmp_randclass grand(gmp_randinit_default);
    grand.seed(static_cast<unsigned long>(rng()));
    while (true) {
        const FqElem delta = FqElem::from_index(F, grand.get_z_range(F->order()));
        const FqVec shifted{delta, FqElem::one(F)};
        FqVec w = fq_sub(fq_powmod(shifted, half, g, F), FqVec{FqElem::one(F)}, F);
        FqVec e = fq_gcd(g, w, F);
        if (e.size() > 1 && e.size() < g.size()) {
            fq_split_roots(e, F, rng, out);
            fq_split_roots(fq_divmod(g, e, F).first, F, rng, out);
            return;
        }
    }
}

// Element of (Z/M)[y]/(G) arithmetic helpers.
IntPoly ring_mul(const IntPoly& a, const IntPoly& b, const IntPoly& G, const mpz_class& M) {
    return rem_monic_mod(mul(a, b), G, M);
}

IntPoly ring_eval(const std::vector<IntPoly>& coeffs, const IntPoly& x, const IntPoly& G, const mpz_class& M) {
    IntPoly acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = reduce_coeffs(add(ring_mul(acc, x, G, M), *it), M);
    return rem_monic_mod(acc, G, M);
}

bool coefficient_less(const FieldElement& a, const FieldElement& b) {
    const std::size_t n = static_cast<std::size_t>(a.field()->degree());
    for (std::size_t i = 0; i < n; ++i) {
        const mpq_class x = i < a.rep().size() ? a.rep()[i] : mpq_class(0);
        const mpq_class y = i < b.rep().size() ? b.rep()[i] : mpq_class(0);
        if (x != y) return x < y;
    }
    return false;
}

}  // namespace

std::vector<FieldElement> roots_in_field(const FieldPtr& K, const std::vector<FieldElement>& coeffs, std::uint64_t seed) {
    if (coeffs.size() < 2) throw Error(ErrorKind::InvalidArgument, "root finding needs a polynomial of degree >= 1");
    if (!(coeffs.back() == FieldElement::from_int(K, 1))) {
        throw Error(ErrorKind::NotMonic, "root finding expects a monic polynomial");
    }
    for (const auto& c : coeffs) {
        if (!same_field(c.field(), K)) throw Error(ErrorKind::BaseFieldMismatch, "coefficient from another field");
        if (!c.is_integral()) throw Error(ErrorKind::InvalidArgument, "root finding expects integral coefficients");
    }
    const std::size_t m = static_cast<std::size_t>(K->degree());
    const IntPoly& g = K->poly();
    const mpz_class D = abs(K->discriminant());

    // Bound on the coefficients of a root on the power basis: Cauchy bounds
    // for |theta_j| and |root|, Hadamard on the adjugate of the Vandermonde
    // matrix, |det| = sqrt(D) >= 1.
    mpz_class rg = 0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) rg = std::max(rg, mpz_class(abs(g[i])));
    rg += 1;
    mpz_class rf = 0;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
        mpz_class ci = 0;
        mpz_class power = 1;
        for (const auto& a : coeffs[i].rep()) {
            ci += abs(a.get_num()) * power;
            power *= rg;
        }
        rf = std::max(rf, ci);
    }
    rf += 1;
    mpz_class height = rf;
    for (std::size_t i = 0; i < m; ++i) height *= static_cast<unsigned long>(m);
    for (std::size_t i = 0; i < (m - 1) * (m - 1); ++i) height *= rg;
    const mpz_class precision_target = 2 * D * height + 1;

    // Choose the prime minimizing the number of candidate root tuples.
    struct Choice {
        u64 p = 0;
        std::vector<PrimeIdealData> comps;
        mpz_class count = -1;
    } best;
    std::size_t scanned = 0;
    const std::size_t degree_f = coeffs.size() - 1;
    for (u64 p = 3; scanned < 25; p += 2) {
        if (!is_prime(p) || mpz_divisible_ui_p(D.get_mpz_t(), p) != 0) continue;
        std::vector<PrimeIdealData> comps;
        for (auto& fac : poly_factor_mod_p(g, p, seed)) {
            comps.push_back({p, comps.size(), 1, static_cast<unsigned>(fac.poly.degree()), fac.poly});
        }
        mpz_class count = 1;
        bool usable = true;
        for (const auto& P : comps) {
            auto F = FiniteField::make_unchecked(P.local_factor);
            FqVec fbar;
            for (const auto& c : coeffs) fbar.push_back(FqElem(F, reduce_at(c, P).rep()));
            trim_fq(fbar);
            if (fq_gcd(fbar, fq_derivative(fbar, F), F).size() != 1) {
                usable = false;
                break;
            }
            count *= static_cast<unsigned long>(fq_linear_part(fbar, F).size() - 1);
        }
        if (!usable) continue;
        ++scanned;
        if (count == 0) return {};
        if (best.count < 0 || count < best.count) best = {p, comps, count};
        if (best.count <= static_cast<unsigned long>(degree_f)) break;
    }
    if (best.count > 2000000) throw Error(ErrorKind::InvalidArgument, "too many candidate roots to lift");

    const u64 p = best.p;
    std::mt19937_64 rng(seed);
    std::vector<FqVec> comp_roots;
    std::vector<PolyZp> idempotents;
    const PolyZp gbar = PolyZp::from_int_poly(g, p);
    for (const auto& P : best.comps) {
        auto F = FiniteField::make_unchecked(P.local_factor);
        FqVec fbar;
        for (const auto& c : coeffs) fbar.push_back(FqElem(F, reduce_at(c, P).rep()));
        trim_fq(fbar);
        FqVec roots;
        fq_split_roots(fq_linear_part(fbar, F), F, rng, roots);
        comp_roots.push_back(std::move(roots));
        const PolyZp cofactor = divmod(gbar, P.local_factor).first;
        const XgcdResult bez = xgcd(rem(cofactor, P.local_factor), P.local_factor);
        idempotents.push_back(rem(cofactor * bez.s, gbar));
    }

    unsigned k = 1;
    mpz_class target_modulus = static_cast<unsigned long>(p);
    while (target_modulus < precision_target) {
        target_modulus *= static_cast<unsigned long>(p);
        ++k;
    }
    std::vector<IntPoly> fcoeffs;
    std::vector<IntPoly> dcoeffs;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        IntPoly c;
        for (const auto& a : coeffs[i].rep()) c.push_back(a.get_num());
        if (i > 0) dcoeffs.push_back(scale(c, mpz_class(static_cast<unsigned long>(i))));
        fcoeffs.push_back(std::move(c));
    }

    std::vector<FieldElement> out;
    std::vector<std::size_t> pick(comp_roots.size(), 0);
    const mpz_class pz = static_cast<unsigned long>(p);
    while (true) {
        PolyZp alpha0(p);
        for (std::size_t j = 0; j < pick.size(); ++j) alpha0 += comp_roots[j][pick[j]].rep() * idempotents[j];
        alpha0 = rem(alpha0, gbar);

        const PolyZp deriv0 = PolyZp::from_int_poly(ring_eval(dcoeffs, alpha0.to_int_poly(), g, pz), p);
        const XgcdResult inv0 = xgcd(deriv0, gbar);
        if (inv0.g.is_one()) {
            IntPoly alpha = alpha0.to_int_poly();
            IntPoly inv = inv0.s.to_int_poly();
            mpz_class modulus = pz;
            while (modulus < target_modulus) {
                mpz_class next = modulus * modulus;
                if (next > target_modulus) next = target_modulus;
                const IntPoly fa = ring_eval(fcoeffs, alpha, g, next);
                alpha = reduce_coeffs(sub(alpha, ring_mul(fa, inv, g, next)), next);
                const IntPoly u = ring_eval(dcoeffs, alpha, g, next);
                const IntPoly two_minus = reduce_coeffs(sub(int_poly({2}), ring_mul(u, inv, g, next)), next);
                inv = ring_mul(inv, two_minus, g, next);
                modulus = next;
            }
            const IntPoly scaled = symmetric_coeffs(scale(alpha, D), target_modulus);
            RatPoly rep;
            for (const auto& c : scaled) rep.emplace_back(c, D);
            for (auto& c : rep) c.canonicalize();
            FieldElement candidate(K, rep);
            FieldElement value = FieldElement::from_int(K, 0);
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * candidate + *it;
            if (value.is_zero()) out.push_back(std::move(candidate));
        }
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == comp_roots[pos].size()) pick[pos++] = 0;
        if (pos == pick.size()) break;
    }
    std::sort(out.begin(), out.end(), coefficient_less);
    return out;
}

bool is_square(const FieldElement& d) {
    if (d.is_zero()) return true;
    const FieldPtr& K = d.field();
    const mpz_class den = d.denominator();
    const FieldElement e = d * FieldElement::from_int(K, den * den);
    if (K->is_rationals()) {
        const mpz_class n = e.rep().empty() ? mpz_class(0) : e.rep()[0].get_num();
        return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
    }
    for (u64 p : primes_between(3, 300)) {
        if (mpz_divisible_ui_p(K->discriminant().get_mpz_t(), p) != 0) continue;
        for (const auto& P : split_prime(*K, p)) {
            const auto s = residue_symbol(e, P, 2);
            if (s && !s->is_one()) return false;
        }
    }
    const std::vector<FieldElement> poly{FieldElement::from_int(K, 0) - e, FieldElement::from_int(K, 0),
                                         FieldElement::from_int(K, 1)};
    return !roots_in_field(K, poly).empty();
}

// ---------------------------------------------------------------------------
// Isomorphisms

FieldIso::FieldIso(FieldPtr source, FieldPtr target, FieldElement image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
    if (!same_field(image_.field(), target_)) throw Error(ErrorKind::BaseFieldMismatch, "image must lie in the target");
    if (source_->degree() != target_->degree()) {
        throw Error(ErrorKind::InvalidArgument, "isomorphic fields have equal degree");
    }
    if (!compose_mod(source_->rat_poly(), image_.rep(), target_->rat_poly()).empty()) {
        throw Error(ErrorKind::InvalidArgument,
                    "image " + image_.to_string() + " is not a root of " + to_string(source_->poly()));
    }
}

FieldIso FieldIso::identity(const FieldPtr& K) {
    if (K->is_rationals()) {
        // theta is the root 0 of the defining polynomial x - a; use it literally.
        return FieldIso(K, K, FieldElement(K, RatPoly{-mpq_class(K->poly()[0])}));
    }
    return FieldIso(K, K, FieldElement::generator(K));
}

FieldElement FieldIso::apply(const FieldElement& x) const {
    if (!same_field(x.field(), source_)) throw Error(ErrorKind::BaseFieldMismatch, "element is not in the source field");
    return FieldElement(target_, compose_mod(x.rep(), image_.rep(), target_->rat_poly()));
}

bool FieldIso::is_identity() const {
    if (!same_field(source_, target_)) return false;
    return *this == identity(source_);
}

bool operator==(const FieldIso& a, const FieldIso& b) {
    return same_field(a.source_, b.source_) && same_field(a.target_, b.target_) && a.image_ == b.image_;
}

FieldIso compose(const FieldIso& outer, const FieldIso& inner) {
    if (!same_field(inner.target(), outer.source())) throw Error(ErrorKind::BaseFieldMismatch, "isomorphisms do not compose");
    return FieldIso(inner.source(), outer.target(), outer.apply(inner.image_of_generator()));
}

std::vector<FieldIso> find_isomorphisms(const FieldPtr& K, const FieldPtr& Kp) {
    if (K->degree() != Kp->degree()) return {};
    std::vector<FieldElement> coeffs;
    for (const auto& c : K->poly()) coeffs.push_back(FieldElement::from_int(Kp, c));
    std::vector<FieldIso> out;
    for (auto& root : roots_in_field(Kp, coeffs)) out.emplace_back(K, Kp, std::move(root));
    return out;
}

// ---------------------------------------------------------------------------
// Prime matchings

std::optional<std::size_t> PrimeMatching::image_of(std::size_t source_index) const {
    for (const auto& [i, j] : pairs) {
        if (i == source_index) return j;
    }
    return std::nullopt;
}

PrimeMatching identity_matching(const NumberField& K, u64 p) {
    PrimeMatching out{p, {}, {}};
    for (const auto& P : split_prime(K, p)) {
        out.pairs.emplace_back(P.index, P.index);
        out.f.push_back(P.f);
    }
    return out;
}

PrimeMatching compose(const PrimeMatching& outer, const PrimeMatching& inner) {
    if (outer.p != inner.p) throw Error(ErrorKind::InvalidArgument, "matchings at different primes");
    PrimeMatching out{inner.p, {}, {}};
    for (std::size_t k = 0; k < inner.pairs.size(); ++k) {
        const auto image = outer.image_of(inner.pairs[k].second);
        if (!image) throw Error(ErrorKind::NotBijective, "matchings do not compose", inner.p);
        out.pairs.emplace_back(inner.pairs[k].first, *image);
        out.f.push_back(inner.f[k]);
    }
    return out;
}

PrimeMatching prime_map_of_iso(const FieldIso& sigma, u64 p) {
    const auto source = split_prime(*sigma.source(), p);
    const auto target = split_prime(*sigma.target(), p);
    const PolyZp image = reduce_mod_p(sigma.image_of_generator().rep(), p);
    PrimeMatching out{p, {}, {}};
    std::vector<bool> used(target.size(), false);
    for (const auto& P : source) {
        std::optional<std::size_t> hit;
        for (const auto& Q : target) {
            // g(image) mod (p, Q.local_factor) by Horner.
            PolyZp acc(p);
            for (std::size_t i = P.local_factor.coeffs().size(); i-- > 0;) {
                acc = rem(acc * image + PolyZp::constant(p, P.local_factor.coeffs()[i]), Q.local_factor);
            }
            if (!acc.is_zero()) continue;
            if (hit) throw Error(ErrorKind::NotBijective, "prime maps to several primes", p, P.index);
            hit = Q.index;
        }
        if (!hit || used[*hit]) throw Error(ErrorKind::NotBijective, "induced prime map is not bijective", p, P.index);
        if (target[*hit].f != P.f || target[*hit].e != P.e) {
            throw Error(ErrorKind::NormMismatch, "induced prime map changes (e, f)", p, P.index);
        }
        used[*hit] = true;
        out.pairs.emplace_back(P.index, *hit);
        out.f.push_back(P.f);
    }
    return out;
}

}  // namespace arteq
