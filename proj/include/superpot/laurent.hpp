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

#ifndef SUPERPOT_LAURENT_HPP
#define SUPERPOT_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superpot/matrix.hpp"

namespace superpot {

using Expo = std::vector<int64_t>;

inline Expo expo_add(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        if (__builtin_add_overflow(a[i], b[i], &r[i]))
            throw InvariantViolation("exponent overflow");
    return r;
}

inline Expo expo_sub(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        if (__builtin_sub_overflow(a[i], b[i], &r[i]))
            throw InvariantViolation("exponent overflow");
    return r;
}

/* sparse Laurent polynomial; doubles as an ordinary polynomial when all
 * exponents are non-negative.  terms maps exponent vectors to nonzero
 * coefficients, lexicographically keyed, so the representation is canonical */
template <class K>
struct LaurentPoly {
    using Elem = typename K::Elem;
    size_t n_vars = 0;
    std::map<Expo, Elem> terms;

    [[nodiscard]] bool is_zero() const { return terms.empty(); }
};

template <class K>
LaurentPoly<K> lp_zero(const K&, size_t n) {
    return {n, {}};
}

template <class K>
LaurentPoly<K> lp_term(const K& k, size_t n, const Expo& e, const typename K::Elem& c) {
    LaurentPoly<K> f{n, {}};
    if (!k.is_zero(c)) f.terms.emplace(e, c);
    return f;
}

template <class K>
LaurentPoly<K> lp_const(const K& k, size_t n, const typename K::Elem& c) {
    return lp_term(k, n, Expo(n, 0), c);
}

template <class K>
LaurentPoly<K> lp_one(const K& k, size_t n) {
    return lp_const(k, n, k.one());
}

template <class K>
void lp_add_term(const K& k, LaurentPoly<K>& f, const Expo& e, const typename K::Elem& c) {
    if (k.is_zero(c)) return;
    auto it = f.terms.find(e);
    if (it == f.terms.end()) {
        f.terms.emplace(e, c);
    } else {
        it->second = k.add(it->second, c);
        if (k.is_zero(it->second)) f.terms.erase(it);
    }
}

template <class K>
LaurentPoly<K> lp_add(const K& k, const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    LaurentPoly<K> r = a;
    for (const auto& [e, c] : b.terms) lp_add_term(k, r, e, c);
    return r;
}

template <class K>
LaurentPoly<K> lp_neg(const K& k, const LaurentPoly<K>& a) {
    LaurentPoly<K> r = a;
    for (auto& [e, c] : r.terms) c = k.neg(c);
    return r;
}

template <class K>
LaurentPoly<K> lp_sub(const K& k, const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    return lp_add(k, a, lp_neg(k, b));
}

template <class K>
LaurentPoly<K> lp_scale(const K& k, const LaurentPoly<K>& a, const typename K::Elem& s) {
    LaurentPoly<K> r{a.n_vars, {}};
    if (k.is_zero(s)) return r;
    for (const auto& [e, c] : a.terms) r.terms.emplace(e, k.mul(c, s));
    return r;
}

template <class K>
LaurentPoly<K> lp_mul(const K& k, const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    LaurentPoly<K> r{a.n_vars, {}};
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) lp_add_term(k, r, expo_add(ea, eb), k.mul(ca, cb));
    return r;
}

template <class K>
LaurentPoly<K> lp_mul_term(const K& k, const LaurentPoly<K>& a, const Expo& e,
                           const typename K::Elem& c) {
    LaurentPoly<K> r{a.n_vars, {}};
    if (k.is_zero(c)) return r;
    for (const auto& [ea, ca] : a.terms) r.terms.emplace(expo_add(ea, e), k.mul(ca, c));
    return r;
}

template <class K>
bool lp_eq(const K& k, const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    if (a.terms.size() != b.terms.size()) return false;
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    for (; ia != a.terms.end(); ++ia, ++ib)
        if (ia->first != ib->first || !k.eq(ia->second, ib->second)) return false;
    return true;
}

template <class K>
LaurentPoly<K> lp_pow(const K& k, LaurentPoly<K> a, uint64_t e) {
    auto r = lp_one(k, a.n_vars);
    while (e) {
        if (e & 1) r = lp_mul(k, r, a);
        a = lp_mul(k, a, a);
        e >>= 1;
    }
    return r;
}

/* the operator z_i d/dz_i, which keeps Laurent polynomials Laurent */
template <class K>
LaurentPoly<K> log_derivative(const K& k, const LaurentPoly<K>& f, size_t i) {
    LaurentPoly<K> r{f.n_vars, {}};
    for (const auto& [e, c] : f.terms) {
        auto v = k.mul(c, k.from_int(static_cast<long>(e[i])));
        if (!k.is_zero(v)) r.terms.emplace(e, v);
    }
    return r;
}

template <class K>
typename K::Elem elem_pow(const K& k, const typename K::Elem& x, int64_t e) {
    auto b = e < 0 ? k.inv(x) : x;
    uint64_t n = e < 0 ? static_cast<uint64_t>(-e) : static_cast<uint64_t>(e);
    auto r = k.one();
    while (n) {
        if (n & 1) r = k.mul(r, b);
        b = k.mul(b, b);
        n >>= 1;
    }
    return r;
}

/* point with all coordinates on the torus, i.e. nonzero */
template <class K>
struct TorusPoint {
    std::vector<typename K::Elem> coords;
};

template <class K>
TorusPoint<K> make_torus_point(const K& k, std::vector<typename K::Elem> coords) {
    for (const auto& c : coords)
        if (k.is_zero(c)) throw ParseError("torus point has a zero coordinate");
    return TorusPoint<K>{std::move(coords)};
}

template <class K>
typename K::Elem evaluate(const K& k, const LaurentPoly<K>& f, const TorusPoint<K>& p) {
    if (p.coords.size() != f.n_vars) throw ParseError("point dimension mismatch");
    auto v = k.zero();
    for (const auto& [e, c] : f.terms) {
        auto t = c;
        for (size_t i = 0; i < f.n_vars; ++i) t = k.mul(t, elem_pow(k, p.coords[i], e[i]));
        v = k.add(v, t);
    }
    return v;
}

template <class K>
typename K::Elem lp_constant_term(const K& k, const LaurentPoly<K>& f) {
    auto it = f.terms.find(Expo(f.n_vars, 0));
    return it == f.terms.end() ? k.zero() : it->second;
}

/* constant terms of W^1 .. W^m */
template <class K>
std::vector<typename K::Elem> periods(const K& k, const LaurentPoly<K>& w, size_t m) {
    std::vector<typename K::Elem> out;
    out.reserve(m);
    auto acc = lp_one(k, w.n_vars);
    for (size_t i = 1; i <= m; ++i) {
        acc = lp_mul(k, acc, w);
        out.push_back(lp_constant_term(k, acc));
    }
    return out;
}

/* determinant of the matrix of second logarithmic derivatives at p */
template <class K>
typename K::Elem hessian_det(const K& k, const LaurentPoly<K>& w, const TorusPoint<K>& p) {
    size_t n = w.n_vars;
    auto h = mat_zero(k, n, n);
    for (size_t i = 0; i < n; ++i) {
        auto di = log_derivative(k, w, i);
        for (size_t j = 0; j < n; ++j) h.at(i, j) = evaluate(k, log_derivative(k, di, j), p);
    }
    return mat_det(k, h);
}

/* ------------------------------------------------------------------ */
/* multivariate gcd via contents and a primitive remainder sequence    */

namespace detail {

template <class K>
long mp_degree_in(const LaurentPoly<K>& f, size_t v) {
    long d = -1;
    for (const auto& [e, c] : f.terms) d = std::max(d, e[v]);
    return d;
}

/* coefficients of f seen as a polynomial in variable v */
template <class K>
std::vector<LaurentPoly<K>> mp_coeffs_in(const K&, const LaurentPoly<K>& f, size_t v) {
    long d = mp_degree_in(f, v);
    std::vector<LaurentPoly<K>> out(static_cast<size_t>(d + 1), LaurentPoly<K>{f.n_vars, {}});
    for (const auto& [e, c] : f.terms) {
        Expo r = e;
        auto dv = r[v];
        r[v] = 0;
        out[static_cast<size_t>(dv)].terms.emplace(r, c);
    }
    return out;
}

template <class K>
LaurentPoly<K> mp_from_coeffs(const K& k, const std::vector<LaurentPoly<K>>& cs, size_t v,
                              size_t n_vars) {
    LaurentPoly<K> f{n_vars, {}};
    for (size_t j = 0; j < cs.size(); ++j)
        for (const auto& [e, c] : cs[j].terms) {
            Expo r = e;
            r[v] = static_cast<int64_t>(j);
            lp_add_term(k, f, r, c);
        }
    return f;
}

}  // namespace detail

namespace detail {

/* componentwise minimum of all exponent vectors */
template <class K>
Expo lp_min_expo(const LaurentPoly<K>& f) {
    Expo m = f.terms.begin()->first;
    for (const auto& [e, c] : f.terms)
        for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

}  // namespace detail

/* exact division; throws if b does not divide a. Monomials are units, so
 * both sides are first shifted to honest polynomials, where the leading
 * term of any exact quotient must divide step by step. */
template <class K>
LaurentPoly<K> mp_exact_div(const K& k, const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    if (b.is_zero()) throw InvariantViolation("division by the zero polynomial");
    if (a.is_zero()) return a;
    Expo sa = detail::lp_min_expo(a), sb = detail::lp_min_expo(b);
    LaurentPoly<K> r = lp_mul_term(k, a, expo_sub(Expo(a.n_vars, 0), sa), k.one());
    LaurentPoly<K> bp = lp_mul_term(k, b, expo_sub(Expo(b.n_vars, 0), sb), k.one());
    LaurentPoly<K> q{a.n_vars, {}};
    const auto& ltb = *bp.terms.rbegin();
    while (!r.is_zero()) {
        const auto& lta = *r.terms.rbegin();
        Expo e = expo_sub(lta.first, ltb.first);
        for (int64_t x : e)
            if (x < 0) throw DivisionFailure("inexact polynomial division");
        auto c = k.div(lta.second, ltb.second);
        lp_add_term(k, q, e, c);
        r = lp_sub(k, r, lp_mul_term(k, bp, e, c));
    }
    return lp_mul_term(k, q, expo_sub(sa, sb), k.one());
}

template <class K>
LaurentPoly<K> mv_gcd(const K& k, const LaurentPoly<K>& a, const LaurentPoly<K>& b);

namespace detail {

template <class K>
LaurentPoly<K> mv_gcd_list(const K& k, const std::vector<LaurentPoly<K>>& fs, size_t n_vars) {
    LaurentPoly<K> g{n_vars, {}};
    for (const auto& f : fs) {
        g = mv_gcd(k, g, f);
        if (g.terms.size() == 1 && g.terms.begin()->first == Expo(n_vars, 0)) break;
    }
    return g;
}

/* pseudo-remainder of a by b in variable v (coefficients stay polynomial) */
template <class K>
LaurentPoly<K> mp_prem(const K& k, LaurentPoly<K> a, const LaurentPoly<K>& b, size_t v) {
    long db = mp_degree_in(b, v);
    auto bc = mp_coeffs_in(k, b, v);
    const auto& lcb = bc.back();
    long da = mp_degree_in(a, v);
    while (!a.is_zero() && (da = mp_degree_in(a, v)) >= db) {
        auto ac = mp_coeffs_in(k, a, v);
        const auto& lca = ac.back();
        Expo shift(a.n_vars, 0);
        shift[v] = da - db;
        auto shifted = lp_mul(k, lca, mp_from_coeffs(k, bc, v, a.n_vars));
        LaurentPoly<K> moved{a.n_vars, {}};
        for (const auto& [e, c] : shifted.terms) moved.terms.emplace(expo_add(e, shift), c);
        a = lp_sub(k, lp_mul(k, mp_from_coeffs(k, std::vector<LaurentPoly<K>>{lcb}, v, a.n_vars), a),
                   moved);
    }
    return a;
}

}  // namespace detail

/* canonical normalization: leading (lex-largest) coefficient becomes one */
template <class K>
LaurentPoly<K> mp_normalize(const K& k, const LaurentPoly<K>& f) {
    if (f.is_zero()) return f;
    return lp_scale(k, f, k.inv(f.terms.rbegin()->second));
}

template <class K>
LaurentPoly<K> mv_gcd(const K& k, const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    if (a.is_zero()) return mp_normalize(k, b);
    if (b.is_zero()) return mp_normalize(k, a);
    size_t n = a.n_vars;
    size_t v = n;
    for (size_t i = n; i-- > 0;)
        if (detail::mp_degree_in(a, i) > 0 || detail::mp_degree_in(b, i) > 0) {
            v = i;
            break;
        }
    if (v == n) return lp_one(k, n); /* both constant */

    auto ac = detail::mp_coeffs_in(k, a, v);
    auto bc = detail::mp_coeffs_in(k, b, v);
    auto cont_a = detail::mv_gcd_list(k, ac, n);
    auto cont_b = detail::mv_gcd_list(k, bc, n);
    auto pa = mp_exact_div(k, a, cont_a);
    auto pb = mp_exact_div(k, b, cont_b);
    auto cont = mv_gcd(k, cont_a, cont_b);

    /* primitive remainder sequence in v */
    if (detail::mp_degree_in(pa, v) < detail::mp_degree_in(pb, v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        auto r = detail::mp_prem(k, pa, pb, v);
        if (!r.is_zero()) {
            auto rc = detail::mp_coeffs_in(k, r, v);
            r = mp_exact_div(k, r, detail::mv_gcd_list(k, rc, n));
        }
        pa = pb;
        pb = r;
    }
    if (detail::mp_degree_in(pa, v) > 0) {
        auto pc = detail::mp_coeffs_in(k, pa, v);
        pa = mp_exact_div(k, pa, detail::mv_gcd_list(k, pc, n));
    } else {
        pa = lp_one(k, n);
    }
    return mp_normalize(k, lp_mul(k, cont, pa));
}

/* ------------------------------------------------------------------ */
/* rational functions, kept reduced                                    */

template <class K>
struct RationalFunc {
    LaurentPoly<K> num, den;
};

template <class K>
RationalFunc<K> rf_make(const K& k, const LaurentPoly<K>& num, const LaurentPoly<K>& den) {
    if (den.is_zero()) throw InvariantViolation("rational function with zero denominator");
    if (num.is_zero()) return {lp_zero(k, num.n_vars), lp_one(k, num.n_vars)};
    auto g = mv_gcd(k, num, den);
    auto n = mp_exact_div(k, num, g);
    auto d = mp_exact_div(k, den, g);
    auto lead = d.terms.rbegin()->second;
    return {lp_scale(k, n, k.inv(lead)), lp_scale(k, d, k.inv(lead))};
}

template <class K>
RationalFunc<K> rf_from_poly(const K& k, const LaurentPoly<K>& p) {
    return {p, lp_one(k, p.n_vars)};
}

template <class K>
RationalFunc<K> rf_add(const K& k, const RationalFunc<K>& a, const RationalFunc<K>& b) {
    return rf_make(k, lp_add(k, lp_mul(k, a.num, b.den), lp_mul(k, b.num, a.den)),
                   lp_mul(k, a.den, b.den));
}

template <class K>
RationalFunc<K> rf_mul(const K& k, const RationalFunc<K>& a, const RationalFunc<K>& b) {
    return rf_make(k, lp_mul(k, a.num, b.num), lp_mul(k, a.den, b.den));
}

template <class K>
RationalFunc<K> rf_inv(const K& k, const RationalFunc<K>& a) {
    if (a.num.is_zero()) throw ZeroSubstitution("inverse of the zero rational function");
    return rf_make(k, a.den, a.num);
}

template <class K>
RationalFunc<K> rf_pow(const K& k, const RationalFunc<K>& a, int64_t e) {
    auto base = e < 0 ? rf_inv(k, a) : a;
    uint64_t m = e < 0 ? static_cast<uint64_t>(-e) : static_cast<uint64_t>(e);
    RationalFunc<K> r = rf_from_poly(k, lp_one(k, a.num.n_vars));
    while (m) {
        if (m & 1) r = rf_mul(k, r, base);
        base = rf_mul(k, base, base);
        m >>= 1;
    }
    return r;
}

template <class K>
bool rf_eq(const K& k, const RationalFunc<K>& a, const RationalFunc<K>& b) {
    return lp_eq(k, lp_mul(k, a.num, b.den), lp_mul(k, b.num, a.den));
}

/* W with each variable replaced by the corresponding rational function;
 * every intermediate result is reduced */
template <class K>
RationalFunc<K> substitute(const K& k, const LaurentPoly<K>& w,
                           const std::vector<RationalFunc<K>>& comps) {
    if (comps.size() != w.n_vars) throw ParseError("substitution arity mismatch");
    size_t m = comps.empty() ? 0 : comps[0].num.n_vars;
    auto acc = rf_from_poly(k, lp_zero(k, m));
    for (const auto& [e, c] : w.terms) {
        auto term = rf_from_poly(k, lp_const(k, m, c));
        for (size_t i = 0; i < w.n_vars; ++i) {
            if (e[i] == 0) continue;
            if (comps[i].num.is_zero())
                throw ZeroSubstitution("substituting the zero function at a nonzero power");
            term = rf_mul(k, term, rf_pow(k, comps[i], e[i]));
        }
        acc = rf_add(k, acc, term);
    }
    return acc;
}

template <class K>
std::string lp_to_string(const K& k, const LaurentPoly<K>& f, const std::vector<std::string>& vars);

/* a reduced rational function is Laurent iff its denominator is a single term */
template <class K>
LaurentPoly<K> as_laurent(const K& k, const RationalFunc<K>& f,
                          const std::vector<std::string>& var_names = {}) {
    auto r = rf_make(k, f.num, f.den);
    if (r.den.terms.size() != 1) {
        std::vector<std::string> names = var_names;
        if (names.empty())
            for (size_t i = 0; i < r.den.n_vars; ++i) names.push_back("z" + std::to_string(i));
        throw NotLaurent(lp_to_string(k, r.den, names));
    }
    const auto& [de, dc] = *r.den.terms.begin();
    LaurentPoly<K> out{r.num.n_vars, {}};
    auto inv = k.inv(dc);
    for (const auto& [e, c] : r.num.terms) out.terms.emplace(expo_sub(e, de), k.mul(c, inv));
    return out;
}

template <class K>
std::string lp_to_string(const K& k, const LaurentPoly<K>& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string coeff = k.to_string(c);
        bool neg = !coeff.empty() && coeff[0] == '-';
        if (neg) coeff = coeff.substr(1);
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        bool any_var = false;
        std::string mono;
        for (size_t i = 0; i < f.n_vars; ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono += "*";
            mono += vars[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
            any_var = true;
        }
        if (!any_var) {
            out += coeff;
        } else {
            if (coeff != "1") out += coeff + "*";
            out += mono;
        }
    }
    return out;
}

}  // namespace superpot

#endif
