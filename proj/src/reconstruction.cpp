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

#include "arteq/reconstruction.hpp"

#include <algorithm>
#include <sstream>

#include "arteq/arith.hpp"
#include "arteq/error.hpp"
#include "arteq/fixtures.hpp"

namespace arteq {

namespace {

bool base_matches(const CharacterRep& chi, const FieldPtr& K) {
    return same_field(chi.base(), K) || (chi.base()->is_rationals() && K->is_rationals());
}

// Squarefree integer d of a quadratic character over Q.
mpz_class rational_discriminant(const QuadCharK& q) {
    const auto& rep = q.d.rep();
    if (rep.size() != 1 || rep[0].get_den() != 1) {
        throw Error(ErrorKind::IncompatibleRepresentation, "expected an integer square class over Q");
    }
    return rep[0].get_num();
}

CharacterRep quad_over(const FieldPtr& K, const mpz_class& d) { return quad_char(FieldElement::from_int(K, d)); }

bool is_generator_key(const CharacterRep& chi) {
    const auto* q = std::get_if<QuadCharK>(&chi.variant());
    if (q == nullptr) return false;
    const mpz_class d = rational_discriminant(*q);
    return d == -1 || (d > 1 && d.fits_ulong_p() && is_prime(d.get_ui()));
}

bool table_is_multiplicative(const CharIso& psi) {
    return psi.l() == 2 && psi.source()->is_rationals() && psi.target()->is_rationals();
}

CharacterRep apply_remark(const RemarkRule& r, const FieldPtr& K, const CharacterRep& chi) {
    const auto* q = std::get_if<QuadCharK>(&chi.variant());
    if (q == nullptr) throw Error(ErrorKind::IncompatibleRepresentation, "remark rule acts on quadratic characters");
    mpz_class d = rational_discriminant(*q);
    mpz_class unit = d;
    while (mpz_divisible_ui_p(unit.get_mpz_t(), r.p) != 0) mpz_divexact_ui(unit.get_mpz_t(), unit.get_mpz_t(), r.p);
    if (legendre(unit, r.p) == 1) return chi;
    return quad_over(K, -d);
}

CharacterRep apply_table(const CharIso& psi, const TableRule& t, const CharacterRep& chi) {
    for (const auto& [key, image] : t.entries) {
        if (key == chi) return image;
    }
    if (!table_is_multiplicative(psi)) return chi;
    const auto* q = std::get_if<QuadCharK>(&chi.variant());
    if (q == nullptr) throw Error(ErrorKind::IncompatibleRepresentation, "table rule over Q acts on quadratic characters");
    const auto image_of = [&](const mpz_class& g) -> CharacterRep {
        const CharacterRep gen = quad_over(psi.source(), g);
        for (const auto& [key, image] : t.entries) {
            if (key == gen) return image;
        }
        return quad_over(psi.target(), g);
    };
    mpz_class d = rational_discriminant(*q);
    CharacterRep out = TrivialChar{psi.target(), 2};
    if (d < 0) {
        out = char_mul(out, image_of(-1));
        d = -d;
    }
    if (!d.fits_ulong_p()) throw Error(ErrorKind::InvalidArgument, "discriminant too large to factor");
    for (const auto& [prime, e] : factor_u64(d.get_ui())) {
        if (e % 2 == 1) out = char_mul(out, image_of(mpz_class(static_cast<unsigned long>(prime))));
    }
    return out;
}

void require_compatible(const CharIso& psi, const CharacterRep& chi) {
    if (!base_matches(chi, psi.source())) {
        throw Error(ErrorKind::BaseFieldMismatch, chi.describe() + " is not over " + psi.source()->label());
    }
    if (chi.order_l() != psi.l()) throw Error(ErrorKind::MixedOrder, chi.describe() + " has the wrong order");
}

// Value comparison at every prime of K up to B.
bool same_values(const CharacterRep& a, const CharacterRep& b, const NumberField& K,
                 const std::vector<std::vector<PrimeIdealData>>& primes) {
    if (a == b) return true;
    for (const auto& over_p : primes) {
        for (const auto& P : over_p) {
            if (eval_char(a, K, P) != eval_char(b, K, P)) return false;
        }
    }
    return true;
}

bool is_verdict(ErrorKind k) {
    return k == ErrorKind::NotSinglePrime || k == ErrorKind::NormMismatch || k == ErrorKind::ValueMismatch ||
           k == ErrorKind::NotBijective;
}

void add_exclusion(std::vector<Exclusion>& out, u64 p, const std::string& reason) {
    if (!out.empty() && out.back().p == p) {
        out.back().reason += "; " + reason;
    } else {
        out.push_back({p, reason});
    }
}

nlohmann::json value_json(const std::optional<CycInt>& v) {
    if (!v) return 0;
    if (v->coords().size() == 1) return v->coords()[0].get_si();
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : v->coords()) out.push_back(c.get_si());
    return out;
}

nlohmann::json exclusions_json(const std::vector<Exclusion>& ex) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : ex) out.push_back(to_json(e));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// CharIso

CharIso::CharIso(unsigned l, FieldPtr source, FieldPtr target, IsoRule rule)
    : l_(l), source_(std::move(source)), target_(std::move(target)), rule_(std::move(rule)) {
    if (!is_prime(l_)) throw Error(ErrorKind::InvalidArgument, "character order must be prime");
    if (std::holds_alternative<IdentityRule>(rule_) && !same_field(source_, target_)) {
        throw Error(ErrorKind::BaseFieldMismatch, "identity rule between different fields");
    }
    if (const auto* s = std::get_if<InducedBySigma>(&rule_)) {
        if (!same_field(s->sigma.source(), source_) || !same_field(s->sigma.target(), target_)) {
            throw Error(ErrorKind::BaseFieldMismatch, "isomorphism does not match the rule's fields");
        }
    }
    if (const auto* r = std::get_if<RemarkRule>(&rule_)) {
        if (r->p % 4 != 1 || !is_prime(r->p)) {
            throw Error(ErrorKind::BadModulus, "remark rule needs a prime p = 1 mod 4", r->p);
        }
        if (l_ != 2 || !source_->is_rationals() || !target_->is_rationals()) {
            throw Error(ErrorKind::UnsupportedOrder, "remark rule is defined for l = 2 over Q");
        }
    }
    if (const auto* t = std::get_if<TableRule>(&rule_)) {
        for (const auto& [key, image] : t->entries) {
            require_compatible(*this, key);
            if (!base_matches(image, target_) || image.order_l() != l_) {
                throw Error(ErrorKind::BaseFieldMismatch, image.describe() + " is not over " + target_->label());
            }
            if (table_is_multiplicative(*this) && !is_generator_key(key)) {
                throw Error(ErrorKind::InvalidArgument, key.describe() + " is not a generator chi_sqrt(-1) or chi_sqrt(q)");
            }
        }
        if (!table_is_multiplicative(*this) && !same_field(source_, target_)) {
            throw Error(ErrorKind::BaseFieldMismatch, "a table rule between different fields must be multiplicative");
        }
    }
}

CharIso CharIso::identity(const FieldPtr& K, unsigned l) { return CharIso(l, K, K, IdentityRule{}); }

CharIso CharIso::induced_by(const FieldIso& sigma, unsigned l) {
    return CharIso(l, sigma.source(), sigma.target(), InducedBySigma{sigma});
}

std::string CharIso::describe() const {
    std::ostringstream os;
    os << "psi[l=" << l_ << "," << source_->label() << "->" << target_->label() << ",";
    if (std::holds_alternative<IdentityRule>(rule_)) os << "identity";
    if (const auto* s = std::get_if<InducedBySigma>(&rule_)) {
        os << "sigma:theta->" << s->sigma.image_of_generator().to_string();
    }
    if (const auto* r = std::get_if<RemarkRule>(&rule_)) os << "remark:p=" << r->p;
    if (const auto* t = std::get_if<TableRule>(&rule_)) os << "table:" << t->entries.size();
    os << "]";
    return os.str();
}

CharacterRep CharIso::apply(const CharacterRep& chi) const {
    require_compatible(*this, chi);
    if (std::holds_alternative<TrivialChar>(chi.variant())) return TrivialChar{target_, l_};
    return std::visit(
        [&](const auto& r) -> CharacterRep {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, IdentityRule>) {
                return chi;
            } else if constexpr (std::is_same_v<T, InducedBySigma>) {
                return psi_sigma(r.sigma, chi);
            } else if constexpr (std::is_same_v<T, RemarkRule>) {
                return apply_remark(r, target_, chi);
            } else {
                return apply_table(*this, r, chi);
            }
        },
        rule_);
}

CharIso remark_rule(u64 p) {
    if (p % 4 != 1 || !is_prime(p)) throw Error(ErrorKind::BadModulus, "remark rule needs a prime p = 1 mod 4", p);
    const FieldPtr Q = fixtures::field("Q");
    return CharIso(2, Q, Q, RemarkRule{p});
}

CharacterRep psi_sigma(const FieldIso& sigma, const CharacterRep& chi) {
    if (!base_matches(chi, sigma.source())) {
        throw Error(ErrorKind::BaseFieldMismatch, chi.describe() + " is not over " + sigma.source()->label());
    }
    const auto& v = chi.variant();
    if (const auto* t = std::get_if<TrivialChar>(&v)) return TrivialChar{sigma.target(), t->l};
    if (const auto* q = std::get_if<QuadCharK>(&v)) return quad_char(sigma.apply(q->d));
    // Dirichlet characters live over Q, where the only isomorphism is the identity.
    return chi;
}

std::vector<std::string> homomorphism_failures(const CharIso& psi, const std::vector<CharacterRep>& sample, u64 B) {
    std::vector<std::string> out;
    const NumberField& Kp = *psi.target();
    std::vector<std::vector<PrimeIdealData>> primes;
    for (u64 p : primes_up_to(B)) {
        try {
            primes.push_back(split_prime(Kp, p));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotPMaximal) throw;
        }
    }
    if (!psi.apply(TrivialChar{psi.source(), psi.l()}).is_trivial()) out.push_back("trivial character not fixed");
    std::vector<CharacterRep> images;
    images.reserve(sample.size());
    for (const auto& chi : sample) images.push_back(psi.apply(chi));
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (std::size_t j = i; j < sample.size(); ++j) {
            std::optional<CharacterRep> prod;
            try {
                prod = char_mul(sample[i], sample[j]);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::IncompatibleRepresentation && e.kind() != ErrorKind::ModulusOverflow) throw;
                continue;
            }
            const CharacterRep lhs = psi.apply(*prod);
            const CharacterRep rhs = char_mul(images[i], images[j]);
            if (!same_values(lhs, rhs, Kp, primes)) {
                out.push_back(sample[i].describe() + " * " + sample[j].describe());
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Prime matchings

PrimeMatching reconstruct_prime_matching(const CharIso& psi, u64 p, u64 aux_bound) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime", p);
    if (p == 2) throw Error(ErrorKind::PrimeExcluded, "reconstruction needs an odd prime", p);
    const NumberField& K = *psi.source();
    const NumberField& Kp = *psi.target();
    const auto S = split_prime(K, p);
    const auto T = split_prime(Kp, p);
    for (const auto* side : {&S, &T}) {
        for (const auto& P : *side) {
            if (P.e > 1) throw Error(ErrorKind::RamifiedBase, std::to_string(p) + " ramifies", p, P.index);
        }
    }
    const CycInt zeta = CycInt::zeta_pow(psi.l(), 1);
    PrimeMatching out{p, {}, {}};
    std::vector<bool> used(T.size(), false);
    for (const auto& P : S) {
        const CharacterRep image = psi.apply(x_p_character(psi.source(), P, psi.l(), aux_bound));
        std::vector<std::size_t> hits;
        std::optional<CycInt> value;
        for (const auto& Q : T) {
            const auto v = eval_char(image, Kp, Q);
            if (!v || !v->is_one()) {
                hits.push_back(Q.index);
                value = v;
            }
        }
        if (hits.size() != 1) {
            throw Error(ErrorKind::NotSinglePrime,
                        std::to_string(hits.size()) + " target primes over " + std::to_string(p) +
                            " where the image of X_P is not 1",
                        p, P.index);
        }
        const std::size_t j = hits.front();
        if (T[j].f != P.f) throw Error(ErrorKind::NormMismatch, "residue degrees differ", p, P.index);
        if (!value || *value != zeta) throw Error(ErrorKind::ValueMismatch, "image of X_P is not zeta_l", p, P.index);
        if (used[j]) throw Error(ErrorKind::NotBijective, "two source primes hit one target prime", p, P.index);
        used[j] = true;
        out.pairs.emplace_back(P.index, j);
        out.f.push_back(P.f);
    }
    if (S.size() != T.size()) throw Error(ErrorKind::NotBijective, "different numbers of primes", p);
    return out;
}

std::vector<Exclusion> reconstruction_exclusions(const NumberField& K, const NumberField& Kp, u64 B) {
    std::vector<Exclusion> out;
    std::vector<const NumberField*> fields{&K};
    if (!same_field(K, Kp)) fields.push_back(&Kp);
    for (u64 p : primes_up_to(B)) {
        if (p == 2) add_exclusion(out, p, "even prime");
        for (const NumberField* F : fields) {
            if (mpz_divisible_ui_p(F->discriminant().get_mpz_t(), p) == 0) continue;
            if (!is_p_maximal(*F, p)) {
                add_exclusion(out, p, "not " + std::to_string(p) + "-maximal in " + F->label());
                continue;
            }
            const auto primes = split_prime(*F, p);
            if (std::any_of(primes.begin(), primes.end(), [](const PrimeIdealData& P) { return P.e > 1; })) {
                add_exclusion(out, p, "ramified in " + F->label());
            }
        }
    }
    return out;
}

CompatReport verify_compatibility(const CharIso& psi, const std::map<u64, PrimeMatching>& phi, u64 B,
                                  const std::vector<CharacterRep>& sample) {
    const NumberField& K = *psi.source();
    const NumberField& Kp = *psi.target();
    CompatReport out;
    out.bound = B;
    std::vector<CharacterRep> images;
    images.reserve(sample.size());
    for (const auto& chi : sample) images.push_back(psi.apply(chi));
    const auto reasons = reconstruction_exclusions(K, Kp, B);
    for (u64 p : primes_up_to(B)) {
        const auto it = phi.find(p);
        if (it == phi.end()) {
            const auto r = std::find_if(reasons.begin(), reasons.end(), [&](const Exclusion& e) { return e.p == p; });
            out.excluded.push_back({p, r != reasons.end() ? r->reason : "no matching supplied"});
            continue;
        }
        std::vector<PrimeIdealData> S;
        std::vector<PrimeIdealData> T;
        try {
            S = split_prime(K, p);
            T = split_prime(Kp, p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotPMaximal) throw;
            out.excluded.push_back({p, e.what()});
            continue;
        }
        out.tested.push_back(p);
        for (const auto& [i, j] : it->second.pairs) {
            for (std::size_t c = 0; c < sample.size(); ++c) {
                const auto expected = eval_char(sample[c], K, S.at(i));
                const auto got = eval_char(images[c], Kp, T.at(j));
                if (!expected) ++out.ramified_checks;
                if (expected != got) out.failures.push_back({p, i, sample[c].describe(), expected, got});
            }
        }
    }
    return out;
}

UniquenessWitness uniqueness_check(const CharIso& psi, const PrimeMatching& phi1, const PrimeMatching& phi2,
                                   u64 aux_bound) {
    UniquenessWitness out;
    for (const auto& [i, j1] : phi1.pairs) {
        const auto j2 = phi2.image_of(i);
        if (j2 && *j2 == j1) continue;
        if (!j2) throw Error(ErrorKind::InvalidArgument, "matchings cover different source primes", phi1.p, i);
        const auto T = split_prime(*psi.target(), phi1.p);
        out.equal = false;
        out.source_index = i;
        out.separating = x_p_character(psi.target(), T.at(*j2), psi.l(), aux_bound);
        out.value_at_first = eval_char(*out.separating, *psi.target(), T.at(j1));
        out.value_at_second = eval_char(*out.separating, *psi.target(), T.at(*j2));
        return out;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Arithmetic equivalence and the isomorphism search

GassmannReport gassmann_check(const FieldPtr& K, const FieldPtr& Kp, u64 B) {
    GassmannReport out;
    out.bound = B;
    out.zeta = compare_lseries(TrivialChar{K, 2}, *K, TrivialChar{Kp, 2}, *Kp, B);
    out.isomorphisms = find_isomorphisms(K, Kp).size();
    out.excluded = excluded_primes(*K, *Kp, B);
    std::size_t next = 0;
    for (u64 p : primes_up_to(B)) {
        if (next < out.excluded.size() && out.excluded[next].p == p) {
            ++next;
            continue;
        }
        ++out.tested;
        const auto type = [p](const NumberField& F) {
            std::vector<std::pair<unsigned, unsigned>> t;
            for (const auto& P : split_prime(F, p)) t.emplace_back(P.e, P.f);
            std::sort(t.begin(), t.end());
            return t;
        };
        if (out.splitting_types_equal && type(*K) != type(*Kp)) {
            out.splitting_types_equal = false;
            out.first_type_mismatch = p;
        }
    }
    return out;
}

std::string SigmaSearch::verdict() const {
    if (falsified()) return "falsified";
    if (unique()) return "unique sigma found";
    return agreeing.empty() ? "none found" : "ambiguous";
}

SigmaSearch recover_isomorphism(const CharIso& psi, u64 B, u64 aux_bound) {
    SigmaSearch out;
    out.bound = B;
    out.excluded = reconstruction_exclusions(*psi.source(), *psi.target(), B);
    std::size_t next = 0;
    for (u64 p : primes_up_to(B)) {
        if (next < out.excluded.size() && out.excluded[next].p == p) {
            ++next;
            continue;
        }
        try {
            out.matchings.emplace(p, reconstruct_prime_matching(psi, p, aux_bound));
        } catch (const Error& e) {
            if (!is_verdict(e.kind())) throw;
            out.failure_prime = p;
            out.failure = e.what();
            return out;
        }
    }
    const auto candidates = find_isomorphisms(psi.source(), psi.target());
    out.candidates = candidates.size();
    for (const auto& sigma : candidates) {
        bool agrees = true;
        for (const auto& [p, m] : out.matchings) {
            try {
                if (prime_map_of_iso(sigma, p) != m) {
                    agrees = false;
                    break;
                }
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::DenominatorClash) throw;
            }
        }
        if (agrees) out.agreeing.push_back(sigma);
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const PrimeMatching& m) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [i, j] : m.pairs) pairs.push_back({i, j});
    return {{"p", m.p}, {"pairs", pairs}, {"f", m.f}};
}

nlohmann::json to_json(const CompatReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"p", f.p},
                            {"index", f.source_index},
                            {"character", f.character},
                            {"expected", value_json(f.expected)},
                            {"got", value_json(f.got)}});
    }
    return {{"bound", r.bound},
            {"passed", r.passed()},
            {"tested", r.tested.size()},
            {"ramified_checks", r.ramified_checks},
            {"excluded", exclusions_json(r.excluded)},
            {"failures", failures}};
}

nlohmann::json to_json(const UniquenessWitness& w) {
    if (w.equal) return {{"equal", true}};
    return {{"equal", false},
            {"index", w.source_index},
            {"separating", to_json(*w.separating)},
            {"values", {value_json(w.value_at_first), value_json(w.value_at_second)}}};
}

nlohmann::json to_json(const GassmannReport& r) {
    return {{"bound", r.bound},
            {"zeta", to_json(r.zeta)},
            {"isomorphisms", r.isomorphisms},
            {"isomorphic", r.isomorphisms > 0},
            {"splitting_types_equal", r.splitting_types_equal},
            {"first_type_mismatch", r.splitting_types_equal ? nlohmann::json() : nlohmann::json(r.first_type_mismatch)},
            {"tested", r.tested},
            {"excluded", exclusions_json(r.excluded)}};
}

nlohmann::json to_json(const FieldIso& sigma) {
    return {{"source", sigma.source()->label()},
            {"target", sigma.target()->label()},
            {"image", sigma.image_of_generator().to_string()}};
}

nlohmann::json to_json(const SigmaSearch& s) {
    nlohmann::json matchings = nlohmann::json::array();
    for (const auto& [p, m] : s.matchings) matchings.push_back(to_json(m));
    nlohmann::json agreeing = nlohmann::json::array();
    for (const auto& sigma : s.agreeing) agreeing.push_back(to_json(sigma));
    nlohmann::json out = {{"bound", s.bound},
                          {"verdict", s.verdict()},
                          {"candidates", s.candidates},
                          {"agreeing", agreeing},
                          {"excluded", exclusions_json(s.excluded)},
                          {"matchings", matchings}};
    if (s.falsified()) out["failure"] = {{"p", *s.failure_prime}, {"error", s.failure}};
    return out;
}

}  // namespace arteq
