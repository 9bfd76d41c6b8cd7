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

#ifndef SUPERPOT_FIELD_HPP
#define SUPERPOT_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "superpot/errors.hpp"

namespace superpot {

/* deterministic Miller-Rabin, valid for all n < 2^64 with this base set */
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) -> uint64_t {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](uint64_t a, uint64_t e, uint64_t m) -> uint64_t {
        uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/* runtime description of the coefficient field: p == 0 means the rationals */
struct FieldSpec {
    uint32_t p = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime(uint32_t p) {
        if (!is_prime_u64(p)) throw ParseError("not a prime: " + std::to_string(p));
        return FieldSpec{p};
    }
    [[nodiscard]] uint32_t characteristic() const noexcept { return p; }
    bool operator==(const FieldSpec&) const = default;
    [[nodiscard]] std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

/* exact rationals backed by GMP; expression templates are materialized before use */
struct Rationals {
    using Elem = mpq_class;
    static constexpr bool is_prime_field = false;

    [[nodiscard]] uint32_t characteristic() const noexcept { return 0; }
    [[nodiscard]] FieldSpec spec() const { return FieldSpec::rationals(); }

    [[nodiscard]] Elem zero() const { return mpq_class(0); }
    [[nodiscard]] Elem one() const { return mpq_class(1); }
    [[nodiscard]] Elem from_int(long v) const { return mpq_class(v); }
    [[nodiscard]] Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
    [[nodiscard]] Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
    [[nodiscard]] Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
    [[nodiscard]] Elem neg(const Elem& a) const { return Elem(-a); }
    [[nodiscard]] Elem inv(const Elem& a) const {
        if (a == 0) throw InvariantViolation("division by zero in Q");
        return Elem(1 / a);
    }
    [[nodiscard]] Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    [[nodiscard]] bool is_zero(const Elem& a) const { return a == 0; }
    [[nodiscard]] bool is_one(const Elem& a) const { return a == 1; }
    [[nodiscard]] bool eq(const Elem& a, const Elem& b) const { return a == b; }
    [[nodiscard]] int cmp(const Elem& a, const Elem& b) const { return ::cmp(a, b); }

    [[nodiscard]] std::string to_string(const Elem& a) const { return a.get_str(); }

    [[nodiscard]] Elem parse(const std::string& s) const {
        try {
            mpq_class v(s, 10);
            v.canonicalize();
            if (v.get_den() == 0) throw ParseError("zero denominator in rational literal " + s);
            return v;
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational literal: " + s);
        }
    }
};

/* prime field with p < 2^31; residues fit products in 64 bits */
struct PrimeField {
    using Elem = uint64_t;
    static constexpr bool is_prime_field = true;

    uint64_t p;

    explicit PrimeField(uint32_t p_) : p(p_) {
        if (p_ >= (1u << 31) || !is_prime_u64(p_)) throw ParseError("prime field characteristic must be a prime < 2^31");
    }

    [[nodiscard]] uint32_t characteristic() const noexcept { return static_cast<uint32_t>(p); }
    [[nodiscard]] FieldSpec spec() const { return FieldSpec{static_cast<uint32_t>(p)}; }

    [[nodiscard]] Elem zero() const { return 0; }
    [[nodiscard]] Elem one() const { return p == 1 ? 0 : 1; }
    [[nodiscard]] Elem from_int(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<Elem>(r);
    }
    [[nodiscard]] Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    [[nodiscard]] Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    [[nodiscard]] Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    [[nodiscard]] Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    [[nodiscard]] Elem inv(Elem a) const {
        if (a == 0) throw InvariantViolation("division by zero in F" + std::to_string(p));
        /* extended Euclid on (a, p) */
        int64_t t = 0, nt = 1;
        int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a);
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += static_cast<int64_t>(p);
        return static_cast<Elem>(t);
    }
    [[nodiscard]] Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    [[nodiscard]] bool is_zero(Elem a) const { return a == 0; }
    [[nodiscard]] bool is_one(Elem a) const { return a == one(); }
    [[nodiscard]] bool eq(Elem a, Elem b) const { return a == b; }
    [[nodiscard]] int cmp(Elem a, Elem b) const { return a < b ? -1 : (a == b ? 0 : 1); }

    [[nodiscard]] Elem pow_u(Elem a, uint64_t e) const {
        Elem r = one();
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    [[nodiscard]] std::string to_string(Elem a) const { return std::to_string(a); }

    [[nodiscard]] Elem parse(const std::string& s) const {
        auto slash = s.find('/');
        if (slash != std::string::npos)
            return div(parse(s.substr(0, slash)), parse(s.substr(slash + 1)));
        try {
            mpz_class z(s, 10);
            mpz_class r = z % static_cast<long>(p);
            if (r < 0) r += static_cast<long>(p);
            return static_cast<Elem>(r.get_ui());
        } catch (const std::invalid_argument&) {
            throw ParseError("bad integer literal: " + s);
        }
    }
};

}  // namespace superpot

#endif
