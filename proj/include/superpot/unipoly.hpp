/*
 * Copyright 2026 The superpot developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SUPERPOT_UNIPOLY_HPP
#define SUPERPOT_UNIPOLY_HPP

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "superpot/errors.hpp"
#include "superpot/field.hpp"

namespace superpot {

/* dense univariate polynomial, c[i] is the coefficient of x^i;
 * normalized form has no trailing zero coefficients */
template <class K>
struct UniPoly {
    using Elem = typename K::Elem;
    std::vector<Elem> c;

    [[nodiscard]] long degree() const { return static_cast<long>(c.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c.empty(); }
};

template <class K>
void up_normalize(const K& k, UniPoly<K>& f) {
    while (!f.c.empty() && k.is_zero(f.c.back())) f.c.pop_back();
}

template <class K>
UniPoly<K> up_zero(const K&) {
    return {};
}

template <class K>
UniPoly<K> up_const(const K& k, const typename K::Elem& a) {
    UniPoly<K> f{{a}};
    up_normalize(k, f);
    return f;
}

template <class K>
UniPoly<K> up_from_ints(const K& k, const std::vector<long>& v) {
    UniPoly<K> f;
    f.c.reserve(v.size());
    for (long x : v) f.c.push_back(k.from_int(x));
    up_normalize(k, f);
    return f;
}

/* x^n */
template <class K>
UniPoly<K> up_monomial(const K& k, size_t n, const typename K::Elem& a) {
    UniPoly<K> f;
    if (k.is_zero(a)) return f;
    f.c.assign(n + 1, k.zero());
    f.c[n] = a;
    return f;
}

template <class K>
UniPoly<K> up_add(const K& k, const UniPoly<K>& a, const UniPoly<K>& b) {
    UniPoly<K> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = k.add(r.c[i], b.c[i]);
    up_normalize(k, r);
    return r;
}

template <class K>
UniPoly<K> up_neg(const K& k, const UniPoly<K>& a) {
    UniPoly<K> r = a;
    for (auto& x : r.c) x = k.neg(x);
    return r;
}

template <class K>
UniPoly<K> up_sub(const K& k, const UniPoly<K>& a, const UniPoly<K>& b) {
    return up_add(k, a, up_neg(k, b));
}

template <class K>
UniPoly<K> up_scale(const K& k, const UniPoly<K>& a, const typename K::Elem& s) {
    if (k.is_zero(s)) return {};
    UniPoly<K> r = a;
    for (auto& x : r.c) x = k.mul(x, s);
    up_normalize(k, r);
    return r;
}

template <class K>
UniPoly<K> up_mul(const K& k, const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UniPoly<K> r;
    r.c.assign(a.c.size() + b.c.size() - 1, k.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (k.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
    }
    up_normalize(k, r);
    return r;
}

template <class K>
bool up_eq(const K& k, const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!k.eq(a.c[i], b.c[i])) return false;
    return true;
}

/* quotient and remainder; divisor must be nonzero */
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> up_divmod(const K& k, const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero()) throw InvariantViolation("univariate division by zero");
    UniPoly<K> q, r = a;
    long db = b.degree();
    auto lb_inv = k.inv(b.c.back());
    if (r.degree() >= db) q.c.assign(static_cast<size_t>(r.degree() - db) + 1, k.zero());
    while (r.degree() >= db) {
        long shift = r.degree() - db;
        auto coef = k.mul(r.c.back(), lb_inv);
        q.c[static_cast<size_t>(shift)] = coef;
        for (long i = 0; i <= db; ++i) {
            size_t idx = static_cast<size_t>(i + shift);
            r.c[idx] = k.sub(r.c[idx], k.mul(coef, b.c[static_cast<size_t>(i)]));
        }
        up_normalize(k, r);
    }
    up_normalize(k, q);
    return {q, r};
}

template <class K>
UniPoly<K> up_mod(const K& k, const UniPoly<K>& a, const UniPoly<K>& b) {
    return up_divmod(k, a, b).second;
}

template <class K>
UniPoly<K> up_make_monic(const K& k, const UniPoly<K>& a) {
    if (a.is_zero()) return a;
    return up_scale(k, a, k.inv(a.c.back()));
}

/* monic gcd */
template <class K>
UniPoly<K> up_gcd(const K& k, UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        auto r = up_mod(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return up_make_monic(k, a);
}

/* returns (g, s, t) with s*a + t*b = g, g monic */
template <class K>
std::array<UniPoly<K>, 3> up_xgcd(const K& k, const UniPoly<K>& a, const UniPoly<K>& b) {
    UniPoly<K> r0 = a, r1 = b;
    UniPoly<K> s0 = up_const(k, k.one()), s1 = up_zero(k);
    UniPoly<K> t0 = up_zero(k), t1 = up_const(k, k.one());
    while (!r1.is_zero()) {
        auto [q, r] = up_divmod(k, r0, r1);
        UniPoly<K> s = up_sub(k, s0, up_mul(k, q, s1));
        UniPoly<K> t = up_sub(k, t0, up_mul(k, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    auto lead_inv = k.inv(r0.c.back());
    return {up_scale(k, r0, lead_inv), up_scale(k, s0, lead_inv), up_scale(k, t0, lead_inv)};
}

template <class K>
UniPoly<K> up_lcm(const K& k, const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    auto g = up_gcd(k, a, b);
    return up_make_monic(k, up_divmod(k, up_mul(k, a, b), g).first);
}

template <class K>
UniPoly<K> up_derivative(const K& k, const UniPoly<K>& a) {
    UniPoly<K> r;
    if (a.c.size() < 2) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = k.mul(a.c[i], k.from_int(static_cast<long>(i)));
    up_normalize(k, r);
    return r;
}

template <class K>
typename K::Elem up_eval(const K& k, const UniPoly<K>& a, const typename K::Elem& x) {
    auto v = k.zero();
    for (size_t i = a.c.size(); i-- > 0;) v = k.add(k.mul(v, x), a.c[i]);
    return v;
}

/* a^e mod m */
template <class K>
UniPoly<K> up_powmod(const K& k, UniPoly<K> a, mpz_class e, const UniPoly<K>& m) {
    UniPoly<K> r = up_const(k, k.one());
    a = up_mod(k, a, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = up_mod(k, up_mul(k, r, a), m);
        a = up_mod(k, up_mul(k, a, a), m);
        e >>= 1;
    }
    return r;
}

/* substitute x -> x^n */
template <class K>
UniPoly<K> up_inflate(const K& k, const UniPoly<K>& a, size_t n) {
    UniPoly<K> r;
    if (a.is_zero()) return r;
    r.c.assign((a.c.size() - 1) * n + 1, k.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i * n] = a.c[i];
    up_normalize(k, r);
    return r;
}

/* total ordering used to sort factor lists: degree first, then coefficients
 * from the top down */
template <class K>
int up_cmp(const K& k, const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (size_t i = a.c.size(); i-- > 0;) {
        int c = k.cmp(a.c[i], b.c[i]);
        if (c != 0) return c;
    }
    return 0;
}

template <class K>
std::string up_to_string(const K& k, const UniPoly<K>& a, const std::string& var = "x") {
    if (a.is_zero()) return "0";
    std::string out;
    for (size_t i = a.c.size(); i-- > 0;) {
        if (k.is_zero(a.c[i])) continue;
        std::string coeff = k.to_string(a.c[i]);
        bool neg = !coeff.empty() && coeff[0] == '-';
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) coeff = coeff.substr(1);
        if (i == 0) {
            out += coeff;
        } else {
            if (coeff != "1") out += coeff + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace superpot

#endif
