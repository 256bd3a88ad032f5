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

#include "arteq/cyc_int.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "arteq/arith.hpp"
#include "arteq/error.hpp"

namespace arteq {

namespace {

void require_prime_order(unsigned l) {
    if (!is_prime(l)) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be prime, got " + std::to_string(l));
}

}  // namespace

CycInt CycInt::zero(unsigned l) {
    require_prime_order(l);
    return CycInt(l, std::vector<mpz_class>(l - 1, 0));
}

CycInt CycInt::one(unsigned l) { return from_int(l, 1); }

CycInt CycInt::from_int(unsigned l, const mpz_class& n) {
    CycInt out = zero(l);
    out.c_[0] = n;
    return out;
}

CycInt CycInt::zeta_pow(unsigned l, long k) {
    require_prime_order(l);
    const long ll = static_cast<long>(l);
    std::vector<mpz_class> v(l, 0);
    v[static_cast<std::size_t>(((k % ll) + ll) % ll)] = 1;
    return normalize(l, v);
}

CycInt CycInt::normalize(unsigned l, const std::vector<mpz_class>& power_coeffs) {
    require_prime_order(l);
    // Fold into Z[x]/(x^l - 1), then use zeta^(l-1) = -(1 + ... + zeta^(l-2)).
    std::vector<mpz_class> folded(l, 0);
    for (std::size_t i = 0; i < power_coeffs.size(); ++i) folded[i % l] += power_coeffs[i];
    const mpz_class top = folded[l - 1];
    folded.pop_back();
    for (auto& c : folded) c -= top;
    return CycInt(l, std::move(folded));
}

void CycInt::check_order(const CycInt& o) const {
    if (l_ != o.l_) {
        throw Error(ErrorKind::MixedOrder,
                    "cyclotomic orders differ: " + std::to_string(l_) + " vs " + std::to_string(o.l_));
    }
}

bool CycInt::is_zero() const {
    for (const auto& c : c_) {
        if (c != 0) return false;
    }
    return true;
}

bool CycInt::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] != 0) return false;
    }
    return true;
}

int CycInt::root_of_unity_exponent() const {
    if (l_ == 2) {
        if (c_[0] == 1) return 0;
        if (c_[0] == -1) return 1;
        return -1;
    }
    // zeta^k for k < l-1 is a unit vector; zeta^(l-1) is all -1.
    int pos = -1;
    bool all_minus_one = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != -1) all_minus_one = false;
        if (c_[i] == 0) continue;
        if (c_[i] != 1 || pos >= 0) {
            pos = -2;
        } else {
            pos = static_cast<int>(i);
        }
    }
    if (all_minus_one) return static_cast<int>(l_) - 1;
    return pos >= 0 ? pos : -1;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    check_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    check_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
    check_order(o);
    if (l_ == 2) {
        c_[0] *= o.c_[0];
        return *this;
    }
    std::vector<mpz_class> prod(2 * c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    *this = normalize(l_, prod);
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

CycInt CycInt::pow(unsigned e) const {
    CycInt result = one(l_);
    CycInt base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

bool operator==(const CycInt& a, const CycInt& b) { return a.l_ == b.l_ && a.c_ == b.c_; }

std::complex<double> CycInt::to_complex() const {
    std::complex<double> acc = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(l_);
        acc += c_[i].get_d() * std::polar(1.0, angle);
    }
    return acc;
}

std::string CycInt::to_string() const {
    if (l_ == 2) return c_[0].get_str();
    const int k = root_of_unity_exponent();
    if (k == 0) return "1";
    if (k == 1) return "z" + std::to_string(l_);
    if (k > 1) return "z" + std::to_string(l_) + "^" + std::to_string(k);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].get_str();
    os << "]";
    return os.str();
}

}  // namespace arteq
