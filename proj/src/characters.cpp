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

#include "arteq/characters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arteq/error.hpp"
#include "arteq/fixtures.hpp"

namespace arteq {

// ---------------------------------------------------------------------------
// (Z/mZ)^x

namespace {

u64 ipow(u64 b, unsigned e) {
    u64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

u64 primitive_root_mod_prime_power(u64 q, unsigned k) {
    const u64 pp = ipow(q, k);
    const u64 phi = pp / q * (q - 1);
    std::vector<u64> radicals;
    for (const auto& [r, mult] : factor_u64(phi)) radicals.push_back(r);
    for (u64 g = 2;; ++g) {
        if (g % q == 0) continue;
        bool primitive = true;
        for (u64 r : radicals) {
            if (pow_mod(g, phi / r, pp) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
}

// Residue equal to g mod pp and 1 mod m / pp.
u64 lift_component(u64 g, u64 pp, u64 m) {
    const u64 rest = m / pp;
    if (rest == 1) return g % m;
    const u64 t = mul_mod((g + pp - 1) % pp, inv_mod(rest % pp, pp), pp);
    return (1 + static_cast<unsigned __int128>(rest) * t) % m;
}

unsigned discrete_log_mod_l(u64 b, u64 g, u64 order, u64 pp, unsigned l) {
    const u64 h = pow_mod(b, order / l, pp);
    const u64 gamma = pow_mod(g, order / l, pp);
    u64 acc = 1;
    for (unsigned t = 0; t < l; ++t) {
        if (acc == h) return t;
        acc = mul_mod(acc, gamma, pp);
    }
    throw Error(ErrorKind::InvalidArgument, "discrete logarithm outside the order-l subgroup");
}

}  // namespace

std::vector<UnitGenerator> unit_group_generators(u64 m) {
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
    std::vector<UnitGenerator> out;
    for (const auto& [q, k] : factor_u64(m)) {
        const u64 pp = ipow(q, k);
        if (q == 2) {
            if (k == 1) continue;
            out.push_back({2, pp, lift_component(pp - 1, pp, m), 2});
            if (k >= 3) out.push_back({2, pp, lift_component(5, pp, m), pp / 4});
            continue;
        }
        out.push_back({q, pp, lift_component(primitive_root_mod_prime_power(q, k), pp, m), pp / q * (q - 1)});
    }
    return out;
}

std::optional<unsigned> DirichletCharQ::exponent_at(u64 n) const {
    if (std::gcd(n % modulus, modulus) != 1 && modulus != 1) return std::nullopt;
    const auto gens = unit_group_generators(modulus);
    u64 total = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (exponents[j] == 0) continue;
        const UnitGenerator& g = gens[j];
        const u64 b = n % g.prime_power;
        unsigned x = 0;
        if (g.prime == 2) {
            const bool minus = b % 4 == 3;
            if (g.generator % g.prime_power == g.prime_power - 1) {
                x = minus ? 1 : 0;
            } else {
                x = discrete_log_mod_l(minus ? g.prime_power - b : b, 5, g.order, g.prime_power, l);
            }
        } else {
            x = discrete_log_mod_l(b, g.generator % g.prime_power, g.order, g.prime_power, l);
        }
        total += static_cast<u64>(x) * exponents[j];
    }
    return static_cast<unsigned>(total % l);
}

DirichletCharQ make_dirichlet(unsigned l, u64 modulus, std::vector<unsigned> exponents) {
    if (!is_prime(l)) throw Error(ErrorKind::InvalidArgument, "character order must be prime");
    const auto gens = unit_group_generators(modulus);
    if (exponents.size() != gens.size()) {
        throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(modulus) + " has " +
                                                    std::to_string(gens.size()) + " generators");
    }
    for (std::size_t j = 0; j < gens.size(); ++j) {
        exponents[j] %= l;
        if (exponents[j] != 0 && gens[j].order % l != 0) {
            throw Error(ErrorKind::InvalidArgument, "exponent on a generator of order prime to l");
        }
    }
    return DirichletCharQ{l, modulus, std::move(exponents)};
}

namespace {

DirichletCharQ dirichlet_trivial(unsigned l) { return DirichletCharQ{l, 1, {}}; }

bool dirichlet_is_trivial(const DirichletCharQ& c) {
    return std::all_of(c.exponents.begin(), c.exponents.end(), [](unsigned e) { return e == 0; });
}

DirichletCharQ dirichlet_mul(const DirichletCharQ& a, const DirichletCharQ& b, u64 cap) {
    if (a.l != b.l) throw Error(ErrorKind::MixedOrder, "characters of different order");
    const u64 g = std::gcd(a.modulus, b.modulus);
    const unsigned __int128 lcm = static_cast<unsigned __int128>(a.modulus / g) * b.modulus;
    if (lcm > cap) throw Error(ErrorKind::ModulusOverflow, "product modulus exceeds " + std::to_string(cap));
    const u64 m = static_cast<u64>(lcm);
    const auto gens = unit_group_generators(m);
    std::vector<unsigned> exps;
    exps.reserve(gens.size());
    for (const auto& gen : gens) exps.push_back((*a.exponent_at(gen.generator) + *b.exponent_at(gen.generator)) % a.l);
    return DirichletCharQ{a.l, m, std::move(exps)};
}

DirichletCharQ dirichlet_scale(const DirichletCharQ& a, unsigned k) {
    DirichletCharQ out = a;
    for (auto& e : out.exponents) e = static_cast<unsigned>((static_cast<u64>(e) * k) % a.l);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// CharacterRep

CharacterRep::CharacterRep(DirichletCharQ c) : v_(std::move(c)), rationals_(fixtures::field("Q")) {}

unsigned CharacterRep::order_l() const {
    return std::visit(
        [](const auto& c) -> unsigned {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, QuadCharK>) {
                return 2;
            } else {
                return c.l;
            }
        },
        v_);
}

const FieldPtr& CharacterRep::base() const {
    if (const auto* t = std::get_if<TrivialChar>(&v_)) return t->base;
    if (const auto* q = std::get_if<QuadCharK>(&v_)) return q->base();
    return rationals_;
}

bool CharacterRep::is_trivial() const {
    if (std::holds_alternative<TrivialChar>(v_)) return true;
    if (const auto* d = std::get_if<DirichletCharQ>(&v_)) return dirichlet_is_trivial(*d);
    return false;
}

std::string CharacterRep::describe() const {
    std::ostringstream os;
    if (const auto* t = std::get_if<TrivialChar>(&v_)) {
        os << "trivial[" << t->base->label() << ",l=" << t->l << "]";
    } else if (const auto* d = std::get_if<DirichletCharQ>(&v_)) {
        os << "dirichlet[l=" << d->l << ",m=" << d->modulus << ",e=(";
        for (std::size_t i = 0; i < d->exponents.size(); ++i) os << (i ? "," : "") << d->exponents[i];
        os << ")]";
    } else {
        const auto& q = std::get<QuadCharK>(v_);
        os << "quad[" << q.base()->label() << ",d=" << q.d.to_string() << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Square classes

namespace {

// Squarefree integer in the square class of a nonzero rational.
mpz_class squarefree_rational(const mpq_class& q) {
    mpz_class n = q.get_num() * q.get_den();
    const int sign = sgn(n);
    n = abs(n);
    mpz_class out = 1;
    for (u64 r = 2; r <= 1000000 && static_cast<mpz_class>(r) * r <= n; r += (r == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), r) != 0) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), r);
            ++e;
        }
        if (e % 2 == 1) out *= static_cast<unsigned long>(r);
    }
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) out *= n;
    return sign * out;
}

}  // namespace

FieldElement canonical_square_class(const FieldElement& d) {
    if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "square class of zero");
    const FieldPtr& K = d.field();
    RatPoly cur = d.rep();
    for (int round = 0; round < 8; ++round) {
        const auto [prim, c] = primitive_part(cur);
        mpq_class scalar = c;
        IntPoly odd = int_poly({1});
        if (degree(prim) >= 1) {
            scalar *= prim.back();
            const auto parts = squarefree_decomposition(to_rat(prim));
            for (std::size_t i = 0; i < parts.size(); ++i) {
                const auto [pi, si] = primitive_part(parts[i]);
                mpq_class power = 1;
                for (std::size_t k = 0; k <= i; ++k) power *= si;
                scalar *= power;
                if (i % 2 == 0) odd = mul(odd, pi);
            }
        }
        const IntPoly next_int = rem_monic(scale(odd, squarefree_rational(scalar)), K->poly());
        RatPoly next = to_rat(next_int);
        if (next == cur) break;
        cur = std::move(next);
    }
    return FieldElement(K, cur);
}

CharacterRep quad_char(const FieldElement& d) {
    const FieldElement c = canonical_square_class(d);
    if (is_square(c)) return TrivialChar{d.field(), 2};
    return QuadCharK{c};
}

// ---------------------------------------------------------------------------
// Evaluation and group law

std::optional<CycInt> eval_char(const CharacterRep& chi, const NumberField& K, const PrimeIdealData& P) {
    const auto& v = chi.variant();
    if (const auto* t = std::get_if<TrivialChar>(&v)) {
        if (!same_field(*t->base, K)) throw Error(ErrorKind::BaseFieldMismatch, "character over " + t->base->label());
        return CycInt::one(t->l);
    }
    if (const auto* d = std::get_if<DirichletCharQ>(&v)) {
        if (!K.is_rationals()) throw Error(ErrorKind::BaseFieldMismatch, "Dirichlet character needs base Q");
        const auto e = d->exponent_at(P.p);
        if (!e) return std::nullopt;
        return CycInt::zeta_pow(d->l, static_cast<long>(*e));
    }
    const auto& q = std::get<QuadCharK>(v);
    if (!same_field(*q.base(), K)) throw Error(ErrorKind::BaseFieldMismatch, "character over " + q.base()->label());
    if (P.p == 2) return std::nullopt;
    return residue_symbol(q.d, P, 2);
}

namespace {

void require_same_base(const CharacterRep& a, const CharacterRep& b) {
    if (!same_field(a.base(), b.base()) && !(a.base()->is_rationals() && b.base()->is_rationals())) {
        throw Error(ErrorKind::BaseFieldMismatch, a.base()->label() + " vs " + b.base()->label());
    }
    if (a.order_l() != b.order_l()) throw Error(ErrorKind::MixedOrder, "characters of different order");
}

}  // namespace

CharacterRep char_mul(const CharacterRep& a, const CharacterRep& b, u64 modulus_cap) {
    require_same_base(a, b);
    if (std::holds_alternative<TrivialChar>(a.variant())) return b;
    if (std::holds_alternative<TrivialChar>(b.variant())) return a;
    const auto* da = std::get_if<DirichletCharQ>(&a.variant());
    const auto* db = std::get_if<DirichletCharQ>(&b.variant());
    if (da && db) {
        DirichletCharQ prod = dirichlet_mul(*da, *db, modulus_cap);
        if (dirichlet_is_trivial(prod)) return TrivialChar{a.base(), a.order_l()};
        return prod;
    }
    const auto* qa = std::get_if<QuadCharK>(&a.variant());
    const auto* qb = std::get_if<QuadCharK>(&b.variant());
    if (qa && qb) return quad_char(qa->d * qb->d);
    throw Error(ErrorKind::IncompatibleRepresentation, a.describe() + " * " + b.describe());
}

CharacterRep char_pow(const CharacterRep& a, unsigned k, u64 modulus_cap) {
    CharacterRep out = TrivialChar{a.base(), a.order_l()};
    for (unsigned i = 0; i < k % a.order_l(); ++i) out = char_mul(out, a, modulus_cap);
    return out;
}

// ---------------------------------------------------------------------------
// Grunwald-Wang over Q

namespace {

bool is_auxiliary_modulus(u64 n, unsigned l) {
    if (l == 2) return n == 4 || n == 8 || (n % 2 == 1 && is_prime(n));
    return n == static_cast<u64>(l) * l || (is_prime(n) && n % l == 1);
}

DirichletCharQ auxiliary_character(u64 n, unsigned l) {
    if (l == 2 && n == 8) return make_dirichlet(2, 8, {0, 1});
    return make_dirichlet(l, n, {1});
}

}  // namespace

DirichletCharQ grunwald_wang_Q(unsigned l, const std::vector<GwTarget>& targets, u64 aux_bound, u64 modulus_cap) {
    if (!is_prime(l)) throw Error(ErrorKind::InvalidArgument, "character order must be prime");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (!is_prime(targets[i].p)) throw Error(ErrorKind::InvalidArgument, "targets must be primes");
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i].p == targets[j].p) throw Error(ErrorKind::InvalidArgument, "target primes must be distinct");
        }
    }
    const std::size_t k = targets.size();
    std::vector<unsigned> want(k);
    for (std::size_t i = 0; i < k; ++i) want[i] = targets[i].exponent % l;
    if (std::all_of(want.begin(), want.end(), [](unsigned w) { return w == 0; })) return dirichlet_trivial(l);

    // Echelon rows over Z/l: value vector, pivot column, combination of auxiliaries.
    struct Row {
        std::vector<unsigned> vec;
        std::size_t pivot;
        std::vector<unsigned> combo;
    };
    std::vector<Row> rows;
    std::vector<DirichletCharQ> aux;
    auto reduce = [&](std::vector<unsigned>& vec, std::vector<unsigned>& combo) {
        for (const Row& r : rows) {
            const unsigned c = vec[r.pivot];
            if (c == 0) continue;
            for (std::size_t i = 0; i < k; ++i) vec[i] = static_cast<unsigned>((vec[i] + (l - c) * r.vec[i]) % l);
            for (std::size_t i = 0; i < r.combo.size(); ++i) {
                combo[i] = static_cast<unsigned>((combo[i] + (l - c) * static_cast<u64>(r.combo[i])) % l);
            }
        }
    };
    for (u64 n = 3; n <= aux_bound; ++n) {
        if (!is_auxiliary_modulus(n, l)) continue;
        if (std::any_of(targets.begin(), targets.end(), [&](const GwTarget& t) { return n % t.p == 0; })) continue;
        aux.push_back(auxiliary_character(n, l));
        for (Row& r : rows) r.combo.push_back(0);
        std::vector<unsigned> vec(k);
        for (std::size_t i = 0; i < k; ++i) vec[i] = *aux.back().exponent_at(targets[i].p);
        std::vector<unsigned> combo(aux.size(), 0);
        combo.back() = 1;
        reduce(vec, combo);
        const auto nz = std::find_if(vec.begin(), vec.end(), [](unsigned v) { return v != 0; });
        if (nz == vec.end()) continue;
        const std::size_t pivot = static_cast<std::size_t>(nz - vec.begin());
        const u64 inv = inv_mod(vec[pivot], l);
        for (auto& v : vec) v = static_cast<unsigned>(mul_mod(v, inv, l));
        for (auto& c : combo) c = static_cast<unsigned>(mul_mod(c, inv, l));
        rows.push_back({std::move(vec), pivot, std::move(combo)});

        // want = sum c_j * row_j  <=>  want reduces to zero.
        std::vector<unsigned> rest = want;
        std::vector<unsigned> sol(aux.size(), 0);
        for (const Row& r : rows) {
            const unsigned c = rest[r.pivot];
            if (c == 0) continue;
            for (std::size_t i = 0; i < k; ++i) rest[i] = static_cast<unsigned>((rest[i] + (l - c) * r.vec[i]) % l);
            for (std::size_t i = 0; i < r.combo.size(); ++i) {
                sol[i] = static_cast<unsigned>((sol[i] + static_cast<u64>(c) * r.combo[i]) % l);
            }
        }
        if (std::any_of(rest.begin(), rest.end(), [](unsigned v) { return v != 0; })) continue;

        DirichletCharQ out = dirichlet_trivial(l);
        for (std::size_t j = 0; j < aux.size(); ++j) {
            if (sol[j] != 0) out = dirichlet_mul(out, dirichlet_scale(aux[j], sol[j]), modulus_cap);
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (out.exponent_at(targets[i].p) != want[i]) {
                throw Error(ErrorKind::ValueMismatch, "solver produced a wrong value", targets[i].p);
            }
        }
        return out;
    }
    throw Error(ErrorKind::SolverBoundExceeded, "no solution with auxiliary moduli <= " + std::to_string(aux_bound));
}

// ---------------------------------------------------------------------------
// Grunwald-Wang for quadratic characters over K

CharacterRep grunwald_wang_quad_K(const FieldPtr& K, const std::vector<std::pair<PrimeIdealData, int>>& targets) {
    if (targets.empty()) throw Error(ErrorKind::InvalidArgument, "no targets");
    const u64 p = targets.front().first.p;
    if (p == 2) throw Error(ErrorKind::EvenPrime, "quadratic targets above 2", 2);
    const auto primes = split_prime(*K, p);
    for (const auto& P : primes) {
        if (P.e != 1) throw Error(ErrorKind::RamifiedBase, std::to_string(p) + " ramifies in " + K->label(), p);
    }
    std::vector<int> sign(primes.size(), 1);
    for (const auto& [P, s] : targets) {
        if (P.p != p) throw Error(ErrorKind::InvalidArgument, "targets must lie over a single prime");
        if (P.index >= primes.size() || !(primes[P.index] == P)) {
            throw Error(ErrorKind::InvalidArgument, "target is not a prime of " + K->label(), p, P.index);
        }
        if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "target signs must be +1 or -1");
        sign[P.index] = s;
    }

    const PolyZp fbar = PolyZp::from_int_poly(K->poly(), p);
    PolyZp d(p);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        auto F = FiniteField::make_unchecked(primes[i].local_factor);
        PolyZp r = PolyZp::constant(p, 1);
        if (sign[i] == -1) {
            for (mpz_class idx = 2;; ++idx) {
                const FqElem a = FqElem::from_index(F, idx);
                if (!fq_pow_residue(a, 2)->is_one()) {
                    r = a.rep();
                    break;
                }
            }
        }
        const PolyZp& g = primes[i].local_factor;
        const PolyZp cofactor = divmod(fbar, g).first;
        const XgcdResult bez = xgcd(rem(cofactor, g), g);
        d += rem(r * cofactor * bez.s, fbar);
    }
    d = rem(d, fbar);

    IntPoly lift = d.to_int_poly();
    while (true) {
        std::vector<mpq_class> rep(lift.begin(), lift.end());
        const CharacterRep chi = quad_char(FieldElement(K, rep));
        if (!chi.is_trivial()) return chi;
        // Only reachable when every sign is +1: move within 1 + pO_K.
        if (lift.empty()) lift.emplace_back(0);
        lift[0] += static_cast<unsigned long>(p);
    }
}

CharacterRep x_p_character(const FieldPtr& K, const PrimeIdealData& P, unsigned l, u64 aux_bound) {
    if (P.p == 2) throw Error(ErrorKind::EvenPrime, "no X_p character above 2", 2);
    if (l == 2) {
        std::vector<std::pair<PrimeIdealData, int>> targets;
        for (const auto& Q : split_prime(*K, P.p)) targets.emplace_back(Q, Q.index == P.index ? -1 : 1);
        return grunwald_wang_quad_K(K, targets);
    }
    if (!K->is_rationals()) {
        throw Error(ErrorKind::UnsupportedOrder, "order " + std::to_string(l) + " characters need base Q");
    }
    if (!is_prime(l)) throw Error(ErrorKind::InvalidArgument, "character order must be prime");
    return grunwald_wang_Q(l, {{P.p, 1}}, aux_bound);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json rational_to_json(const mpq_class& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

mpq_class rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_string()) {
        mpq_class q;
        if (q.set_str(j.get<std::string>(), 10) != 0) {
            throw Error(ErrorKind::InvalidArgument, "bad rational " + j.get<std::string>());
        }
        if (q.get_den() == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
        q.canonicalize();
        return q;
    }
    throw Error(ErrorKind::InvalidArgument, "coefficient must be an integer or a string \"a/b\"");
}

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidArgument, std::string("missing key '") + key + "'");
    return j.at(key);
}

unsigned require_prime_l(const nlohmann::json& j) {
    const auto& v = require(j, "l");
    if (!v.is_number_unsigned() || !is_prime(v.get<u64>())) {
        throw Error(ErrorKind::InvalidArgument, "'l' must be a prime");
    }
    return v.get<unsigned>();
}

}  // namespace

nlohmann::json to_json(const CharacterRep& chi) {
    const auto& v = chi.variant();
    if (const auto* t = std::get_if<TrivialChar>(&v)) {
        return {{"kind", "trivial"}, {"field", t->base->label()}, {"l", t->l}};
    }
    if (const auto* d = std::get_if<DirichletCharQ>(&v)) {
        return {{"kind", "dirichlet_q"}, {"l", d->l}, {"modulus", d->modulus}, {"exponents", d->exponents}};
    }
    const auto& q = std::get<QuadCharK>(v);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : q.d.rep()) coeffs.push_back(rational_to_json(c));
    return {{"kind", "quad"}, {"field", q.base()->label()}, {"d", coeffs}};
}

CharacterRep character_from_json(const nlohmann::json& j, const FieldResolver& resolve) {
    const auto& kind = require(j, "kind");
    if (!kind.is_string()) throw Error(ErrorKind::InvalidArgument, "'kind' must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "trivial") {
        return TrivialChar{resolve(require(j, "field").get<std::string>()), require_prime_l(j)};
    }
    if (k == "dirichlet_q") {
        const unsigned l = require_prime_l(j);
        const auto& m = require(j, "modulus");
        if (!m.is_number_unsigned() || m.get<u64>() == 0) throw Error(ErrorKind::InvalidArgument, "'modulus' must be positive");
        const auto& e = require(j, "exponents");
        if (!e.is_array()) throw Error(ErrorKind::InvalidArgument, "'exponents' must be an array");
        std::vector<unsigned> exps;
        for (const auto& x : e) {
            if (!x.is_number_unsigned()) throw Error(ErrorKind::InvalidArgument, "exponents must be non-negative integers");
            exps.push_back(x.get<unsigned>());
        }
        DirichletCharQ d = make_dirichlet(l, m.get<u64>(), std::move(exps));
        if (dirichlet_is_trivial(d)) return TrivialChar{fixtures::field("Q"), l};
        return d;
    }
    if (k == "quad") {
        const auto& f = require(j, "field");
        if (!f.is_string()) throw Error(ErrorKind::InvalidArgument, "'field' must be a label");
        const FieldPtr K = resolve(f.get<std::string>());
        const auto& d = require(j, "d");
        if (!d.is_array() || d.empty()) throw Error(ErrorKind::InvalidArgument, "'d' must be a non-empty array");
        RatPoly rep;
        for (const auto& c : d) rep.push_back(rational_from_json(c));
        FieldElement elem(K, rep);
        if (elem.is_zero()) throw Error(ErrorKind::InvalidArgument, "'d' must be nonzero");
        return quad_char(elem);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown character kind '" + k + "'");
}

}  // namespace arteq
