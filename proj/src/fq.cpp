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

#include "arteq/fq.hpp"

#include "arteq/error.hpp"

namespace arteq {

FiniteField::FiniteField(PolyZp modulus) : modulus_(std::move(modulus)) {
    mpz_ui_pow_ui(order_.get_mpz_t(), modulus_.prime(), static_cast<unsigned long>(modulus_.degree()));
}

std::shared_ptr<const FiniteField> FiniteField::make(const PolyZp& modulus) {
    if (!modulus.is_monic() || !is_irreducible(modulus)) {
        throw Error(ErrorKind::NotIrreducible, modulus.to_string() + " is not monic irreducible mod " +
                                                   std::to_string(modulus.prime()));
    }
    return make_unchecked(modulus);
}

std::shared_ptr<const FiniteField> FiniteField::make_unchecked(const PolyZp& modulus) {
    if (modulus.degree() < 1) throw Error(ErrorKind::InvalidArgument, "field modulus must have positive degree");
    return std::shared_ptr<const FiniteField>(new FiniteField(modulus));
}

std::shared_ptr<const FiniteField> FiniteField::standard(u64 p, unsigned f) {
    if (f == 1) return make_unchecked(PolyZp::x(p));
    // Monic candidates x^f + (lower part), lower part enumerated by base-p index.
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), p, f);
    for (mpz_class idx = 0; idx < count; ++idx) {
        std::vector<u64> coeffs(f + 1, 0);
        coeffs[f] = 1;
        mpz_class rest = idx;
        for (unsigned i = 0; i < f; ++i) {
            coeffs[i] = mpz_fdiv_ui(rest.get_mpz_t(), p);
            rest /= static_cast<unsigned long>(p);
        }
        PolyZp candidate(p, std::move(coeffs));
        if (is_irreducible(candidate)) return make_unchecked(candidate);
    }
    throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

FqElem::FqElem(FiniteFieldPtr field, const PolyZp& rep) : field_(std::move(field)), rep_(rem(rep, field_->modulus())) {
    if (rep.prime() != field_->prime()) throw Error(ErrorKind::InvalidArgument, "characteristic mismatch");
}

FqElem FqElem::zero(FiniteFieldPtr field) {
    const u64 p = field->prime();
    return FqElem(std::move(field), PolyZp(p));
}

FqElem FqElem::one(FiniteFieldPtr field) {
    const u64 p = field->prime();
    return FqElem(std::move(field), PolyZp::constant(p, 1));
}

FqElem FqElem::from_index(FiniteFieldPtr field, const mpz_class& index) {
    const u64 p = field->prime();
    std::vector<u64> coeffs(field->degree(), 0);
    mpz_class rest = index;
    for (auto& c : coeffs) {
        c = mpz_fdiv_ui(rest.get_mpz_t(), p);
        rest /= static_cast<unsigned long>(p);
    }
    return FqElem(std::move(field), PolyZp(p, std::move(coeffs)));
}

FqElem FqElem::pow(const mpz_class& e) const { return FqElem(field_, pow_mod(rep_, e, field_->modulus())); }

FqElem FqElem::inverse() const {
    if (is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero in finite field");
    return pow(field_->order() - 2);
}

namespace {

void require_same_field(const FqElem& a, const FqElem& b) {
    if (a.field() != b.field() && a.field()->modulus() != b.field()->modulus()) {
        throw Error(ErrorKind::InvalidArgument, "finite field elements from different fields");
    }
}

}  // namespace

FqElem operator+(const FqElem& a, const FqElem& b) {
    require_same_field(a, b);
    return FqElem(a.field_, a.rep_ + b.rep_);
}

FqElem operator-(const FqElem& a, const FqElem& b) {
    require_same_field(a, b);
    return FqElem(a.field_, a.rep_ - b.rep_);
}

FqElem operator*(const FqElem& a, const FqElem& b) {
    require_same_field(a, b);
    return FqElem(a.field_, a.rep_ * b.rep_);
}

bool operator==(const FqElem& a, const FqElem& b) {
    return a.field_->modulus() == b.field_->modulus() && a.rep_ == b.rep_;
}

std::optional<CycInt> fq_pow_residue(const FqElem& a, unsigned l) {
    const FiniteField& field = *a.field();
    const mpz_class q_minus_one = field.order() - 1;
    if (mpz_divisible_ui_p(q_minus_one.get_mpz_t(), l) == 0) {
        if (l != 2 || field.prime() != 2) {
            throw Error(ErrorKind::UnsupportedOrder, std::to_string(l) + " does not divide " + q_minus_one.get_str());
        }
    }
    if (a.is_zero()) return std::nullopt;
    if (l == 2 && field.prime() == 2) return CycInt::one(2);  // every element of F_{2^f} is a square
    const mpz_class exponent = q_minus_one / l;
    const FqElem power = a.pow(exponent);
    if (power.is_one()) return CycInt::one(l);
    if (l == 2) return CycInt::zeta_pow(2, 1);

    FqElem omega = FqElem::one(a.field());
    for (mpz_class idx = 2; idx < field.order(); ++idx) {
        FqElem candidate = FqElem::from_index(a.field(), idx).pow(exponent);
        if (!candidate.is_one()) {
            omega = candidate;
            break;
        }
    }
    FqElem acc = omega;
    for (unsigned k = 1; k < l; ++k) {
        if (acc == power) return CycInt::zeta_pow(l, static_cast<long>(k));
        acc = acc * omega;
    }
    throw Error(ErrorKind::InvalidArgument, "power residue is not an l-th root of unity");
}

}  // namespace arteq
