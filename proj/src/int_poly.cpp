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

#include "arteq/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

#include "arteq/error.hpp"

namespace arteq {

namespace {

template <class Poly>
Poly add_impl(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

template <class Poly>
Poly sub_impl(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

template <class Poly>
Poly mul_impl(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

template <class Poly>
std::string to_string_impl(const Poly& f, const std::string& var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(f); i >= 0; --i) {
        const auto& c = f[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool negative = c < 0;
        using Coeff = std::remove_cvref_t<decltype(c)>;
        const Coeff magnitude = negative ? Coeff(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = magnitude == 1;
        if (!unit || i == 0) os << magnitude.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace

IntPoly int_poly(std::initializer_list<long> coeffs) {
    IntPoly out;
    out.reserve(coeffs.size());
    for (long c : coeffs) out.emplace_back(c);
    trim(out);
    return out;
}

RatPoly to_rat(const IntPoly& f) {
    RatPoly out;
    out.reserve(f.size());
    for (const auto& c : f) out.emplace_back(c);
    return out;
}

IntPoly add(const IntPoly& a, const IntPoly& b) { return add_impl(a, b); }
IntPoly sub(const IntPoly& a, const IntPoly& b) { return sub_impl(a, b); }
IntPoly mul(const IntPoly& a, const IntPoly& b) { return mul_impl(a, b); }
RatPoly add(const RatPoly& a, const RatPoly& b) { return add_impl(a, b); }
RatPoly sub(const RatPoly& a, const RatPoly& b) { return sub_impl(a, b); }
RatPoly mul(const RatPoly& a, const RatPoly& b) { return mul_impl(a, b); }

IntPoly scale(const IntPoly& a, const mpz_class& c) {
    IntPoly out = a;
    for (auto& x : out) x *= c;
    trim(out);
    return out;
}

RatPoly scale(const RatPoly& a, const mpq_class& c) {
    RatPoly out = a;
    for (auto& x : out) x *= c;
    trim(out);
    return out;
}

mpz_class eval(const IntPoly& f, const mpz_class& x) {
    mpz_class acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class eval(const RatPoly& f, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpz_class content(const IntPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
    if (a.empty()) return IntPoly{};
    if (a.size() < b.size()) return std::nullopt;
    IntPoly r = a;
    IntPoly q(a.size() - b.size() + 1);
    const mpz_class& lead = b.back();
    for (int i = degree(a) - degree(b); i >= 0; --i) {
        const auto top = static_cast<std::size_t>(i) + b.size() - 1;
        if (r[top] == 0) continue;
        if (mpz_divisible_p(r[top].get_mpz_t(), lead.get_mpz_t()) == 0) return std::nullopt;
        mpz_class c = r[top] / lead;
        q[static_cast<std::size_t>(i)] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[static_cast<std::size_t>(i) + j] -= c * b[j];
    }
    trim(r);
    if (!r.empty()) return std::nullopt;
    trim(q);
    return q;
}

IntPoly rem_monic(const IntPoly& a, const IntPoly& b) {
    if (b.empty() || b.back() != 1) throw Error(ErrorKind::NotMonic, "rem_monic needs a monic divisor");
    IntPoly r = a;
    trim(r);
    while (r.size() >= b.size()) {
        const mpz_class c = r.back();
        const std::size_t shift = r.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        trim(r);
    }
    return r;
}

RatPoly derivative(const RatPoly& f) {
    if (f.size() <= 1) return {};
    RatPoly out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<long>(i);
    trim(out);
    return out;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.empty()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
    RatPoly r = a;
    trim(r);
    if (r.size() < b.size()) return {RatPoly{}, r};
    RatPoly q(r.size() - b.size() + 1);
    const mpq_class lead_inv = 1 / b.back();
    while (r.size() >= b.size()) {
        const mpq_class c = r.back() * lead_inv;
        const std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        r.pop_back();
        trim(r);
    }
    trim(q);
    return {q, r};
}

RatPoly rem(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return scale(a, 1 / a.back());
}

RatPoly compose_mod(const RatPoly& f, const RatPoly& g, const RatPoly& m) {
    RatPoly acc;
    const RatPoly g_red = rem(g, m);
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        acc = rem(mul(acc, g_red), m);
        acc = add(acc, RatPoly{*it});
    }
    return rem(acc, m);
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& f) {
    std::vector<RatPoly> parts;
    if (degree(f) < 1) return parts;
    const RatPoly df = derivative(f);
    RatPoly a = gcd(f, df);
    RatPoly b = divmod(f, a).first;
    RatPoly c = divmod(df, a).first;
    RatPoly d = sub(c, derivative(b));
    while (degree(b) >= 1) {
        RatPoly g = gcd(b, d);
        parts.push_back(g);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = sub(c, derivative(b));
    }
    while (!parts.empty() && degree(parts.back()) == 0) parts.pop_back();
    return parts;
}

mpq_class resultant(const RatPoly& a_in, const RatPoly& b_in) {
    RatPoly a = a_in;
    RatPoly b = b_in;
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    mpq_class result = 1;
    while (true) {
        const int da = degree(a);
        const int db = degree(b);
        if (db == 0) {
            mpq_class lb = b.back();
            for (int i = 0; i < da; ++i) result *= lb;
            return result;
        }
        RatPoly r = rem(a, b);
        if (r.empty()) return 0;
        // res(a, b) = (-1)^(da*db) * lc(b)^(da - dr) * res(b, r)
        const int dr = degree(r);
        if ((da * db) % 2 != 0) result = -result;
        for (int i = 0; i < da - dr; ++i) result *= b.back();
        a = std::move(b);
        b = std::move(r);
    }
}

mpz_class discriminant(const IntPoly& f) {
    const int n = degree(f);
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "discriminant of a constant");
    const RatPoly fr = to_rat(f);
    mpq_class res = resultant(fr, derivative(fr));
    res /= mpq_class(f.back());
    if ((n * (n - 1) / 2) % 2 != 0) res = -res;
    res.canonicalize();
    return res.get_num();
}

std::pair<IntPoly, mpq_class> primitive_part(const RatPoly& f) {
    if (f.empty()) return {IntPoly{}, mpq_class(0)};
    mpz_class den = 1;
    for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    IntPoly g;
    g.reserve(f.size());
    for (const auto& c : f) {
        mpq_class scaled = c * den;
        g.push_back(scaled.get_num());
    }
    mpz_class cont = content(g);
    if (g.back() < 0) cont = -cont;
    for (auto& c : g) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cont.get_mpz_t());
    mpq_class scalar(cont, den);
    scalar.canonicalize();
    return {g, scalar};
}

std::string to_string(const IntPoly& f, const std::string& var) { return to_string_impl(f, var); }
std::string to_string(const RatPoly& f, const std::string& var) { return to_string_impl(f, var); }

}  // namespace arteq
