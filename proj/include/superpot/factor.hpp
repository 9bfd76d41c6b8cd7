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

#ifndef SUPERPOT_FACTOR_HPP
#define SUPERPOT_FACTOR_HPP

#include <cstdlib>
#include <random>
#include <vector>

#include "superpot/unipoly.hpp"

namespace superpot {

/* all randomized routines draw from one seeded generator so runs are
 * reproducible; override with the SUPERPOT_SEED environment variable */
inline uint64_t superpot_seed() {
    if (const char* s = std::getenv("SUPERPOT_SEED")) return std::strtoull(s, nullptr, 10);
    return 0;
}

template <class K>
struct UFactor {
    UniPoly<K> poly;
    size_t mult = 1;
};

namespace detail {

/* squarefree decomposition over F_p, f monic nonconstant */
inline std::vector<std::pair<UniPoly<PrimeField>, size_t>> sqf_fp(const PrimeField& k,
                                                                  UniPoly<PrimeField> f) {
    std::vector<std::pair<UniPoly<PrimeField>, size_t>> out;
    size_t outer = 1;
    while (f.degree() > 0) {
        auto fd = up_derivative(k, f);
        if (fd.is_zero()) {
            /* f is a p-th power; Frobenius fixes F_p pointwise */
            UniPoly<PrimeField> g;
            g.c.resize(f.c.size() / k.p + 1, 0);
            for (size_t i = 0; i < f.c.size(); i += k.p) g.c[i / k.p] = f.c[i];
            up_normalize(k, g);
            f = g;
            outer *= k.p;
            continue;
        }
        auto c = up_gcd(k, f, fd);
        auto w = up_divmod(k, f, c).first;
        size_t i = 1;
        while (w.degree() > 0) {
            auto y = up_gcd(k, w, c);
            auto fac = up_divmod(k, w, y).first;
            if (fac.degree() > 0) out.emplace_back(up_make_monic(k, fac), i * outer);
            w = y;
            c = up_divmod(k, c, y).first;
            ++i;
        }
        f = c;
    }
    return out;
}

/* distinct-degree split of a squarefree monic f: list of (product, d) */
inline std::vector<std::pair<UniPoly<PrimeField>, size_t>> ddf_fp(const PrimeField& k,
                                                                  UniPoly<PrimeField> f) {
    std::vector<std::pair<UniPoly<PrimeField>, size_t>> out;
    auto x = up_monomial(k, 1, k.one());
    auto h = up_mod(k, x, f);
    size_t d = 0;
    while (f.degree() > 0 && static_cast<long>(2 * (d + 1)) <= f.degree()) {
        ++d;
        h = up_powmod(k, h, mpz_class(static_cast<long>(k.p)), f);
        auto g = up_gcd(k, up_sub(k, h, x), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = up_divmod(k, f, g).first;
            h = up_mod(k, h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<size_t>(f.degree()));
    return out;
}

inline UniPoly<PrimeField> random_poly_fp(const PrimeField& k, std::mt19937_64& rng, long deg_lt) {
    UniPoly<PrimeField> a;
    std::uniform_int_distribution<uint64_t> dist(0, k.p - 1);
    a.c.resize(static_cast<size_t>(deg_lt));
    for (auto& c : a.c) c = dist(rng);
    up_normalize(k, a);
    return a;
}

/* equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic 2) */
inline void edf_fp(const PrimeField& k, const UniPoly<PrimeField>& f, size_t d,
                   std::mt19937_64& rng, std::vector<UniPoly<PrimeField>>& out) {
    if (f.degree() == static_cast<long>(d)) {
        out.push_back(up_make_monic(k, f));
        return;
    }
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(k.p), static_cast<unsigned long>(d));
    while (true) {
        auto a = random_poly_fp(k, rng, f.degree());
        if (a.degree() < 1) continue;
        UniPoly<PrimeField> b;
        if (k.p == 2) {
            b = a;
            auto t = a;
            for (size_t i = 1; i < d; ++i) {
                t = up_mod(k, up_mul(k, t, t), f);
                b = up_add(k, b, t);
            }
        } else {
            mpz_class e = (pd - 1) / 2;
            b = up_sub(k, up_powmod(k, a, e, f), up_const(k, k.one()));
        }
        auto g = up_gcd(k, b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf_fp(k, g, d, rng, out);
            edf_fp(k, up_divmod(k, f, g).first, d, rng, out);
            return;
        }
    }
}

inline std::vector<UFactor<PrimeField>> factor_fp(const PrimeField& k, UniPoly<PrimeField> f) {
    std::vector<UFactor<PrimeField>> out;
    f = up_make_monic(k, f);
    std::mt19937_64 rng(superpot_seed() ^ 0x51e9b5u);
    for (auto& [sq, mult] : sqf_fp(k, f)) {
        for (auto& [prod, d] : ddf_fp(k, sq)) {
            std::vector<UniPoly<PrimeField>> irr;
            edf_fp(k, prod, d, rng, irr);
            for (auto& g : irr) out.push_back({g, mult});
        }
    }
    return out;
}

/* ---- rational factorization: Yun, then Hensel lifting mod a good prime ---- */

using ZPoly = std::vector<mpz_class>;

inline void zp_normalize(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long zp_degree(const ZPoly& f) { return static_cast<long>(f.size()) - 1; }

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline mpz_class zp_content(const ZPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

/* clear denominators, divide by content, force positive leading coefficient */
inline ZPoly zp_from_rational(const UniPoly<Rationals>& f) {
    mpz_class den = 1;
    for (const auto& c : f.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly r;
    r.reserve(f.c.size());
    for (const auto& c : f.c) {
        mpq_class v = c * den;
        r.push_back(v.get_num());
    }
    zp_normalize(r);
    if (r.empty()) return r;
    mpz_class cont = zp_content(r);
    if (r.back() < 0) cont = -cont;
    for (auto& c : r) c /= cont;
    return r;
}

inline UniPoly<Rationals> zp_to_rational(const Rationals& k, const ZPoly& f) {
    UniPoly<Rationals> r;
    r.c.reserve(f.size());
    for (const auto& c : f) r.c.push_back(mpq_class(c));
    up_normalize(k, r);
    return r;
}

inline UniPoly<PrimeField> zp_mod_p(const PrimeField& kp, const ZPoly& f) {
    UniPoly<PrimeField> r;
    r.c.reserve(f.size());
    for (const auto& c : f) {
        mpz_class m = c % static_cast<long>(kp.p);
        if (m < 0) m += static_cast<long>(kp.p);
        r.c.push_back(m.get_ui());
    }
    up_normalize(kp, r);
    return r;
}

/* coefficients reduced into (-m/2, m/2] */
inline ZPoly zp_symmetric(const ZPoly& f, const mpz_class& m) {
    ZPoly r = f;
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
        if (2 * c > m) c -= m;
    }
    zp_normalize(r);
    return r;
}

/* linear multifactor Hensel lift: G == lc * prod(monic f_i) mod p^a */
inline std::vector<ZPoly> hensel_lift(const PrimeField& kp, const ZPoly& G,
                                      const std::vector<UniPoly<PrimeField>>& facs,
                                      const mpz_class& target) {
    long p = static_cast<long>(kp.p);
    mpz_class lc = G.back();

    /* Bezout data mod p: t_i = (lc * prod_{j != i} f_j)^(-1) mod f_i */
    std::vector<UniPoly<PrimeField>> tinv(facs.size());
    for (size_t i = 0; i < facs.size(); ++i) {
        auto prod = up_const(kp, kp.from_int(mpz_class(lc % p).get_si()));
        for (size_t j = 0; j < facs.size(); ++j)
            if (j != i) prod = up_mod(kp, up_mul(kp, prod, facs[j]), facs[i]);
        auto [g, s, t] = up_xgcd(kp, prod, facs[i]);
        if (g.degree() != 0) throw InvariantViolation("hensel lift: factors not coprime");
        tinv[i] = s;
    }

    std::vector<ZPoly> lifted(facs.size());
    for (size_t i = 0; i < facs.size(); ++i) {
        lifted[i].reserve(facs[i].c.size());
        for (auto c : facs[i].c) lifted[i].push_back(mpz_class(static_cast<long>(c)));
    }

    mpz_class modulus = p;
    while (modulus < target) {
        mpz_class next = modulus * p;
        ZPoly prod{lc};
        for (const auto& f : lifted) prod = zp_mul(prod, f);
        ZPoly err(std::max(G.size(), prod.size()), mpz_class(0));
        for (size_t i = 0; i < G.size(); ++i) err[i] += G[i];
        for (size_t i = 0; i < prod.size(); ++i) err[i] -= prod[i];
        zp_normalize(err);
        ZPoly delta;
        delta.reserve(err.size());
        for (const auto& c : err) delta.push_back(c / modulus);
        auto delta_p = zp_mod_p(kp, delta);
        for (size_t i = 0; i < lifted.size(); ++i) {
            auto d_i = up_mod(kp, up_mul(kp, delta_p, tinv[i]), facs[i]);
            if (lifted[i].size() < facs[i].c.size()) lifted[i].resize(facs[i].c.size(), mpz_class(0));
            for (size_t j = 0; j < d_i.c.size(); ++j) {
                mpz_class add = modulus * static_cast<long>(d_i.c[j]);
                lifted[i][j] = (lifted[i][j] + add) % next;
                if (lifted[i][j] < 0) lifted[i][j] += next;
            }
        }
        modulus = next;
    }
    return lifted;
}

inline std::vector<UniPoly<Rationals>> factor_squarefree_q(const Rationals& k,
                                                           const UniPoly<Rationals>& f);

}  // namespace detail

/* monic irreducible factors with multiplicities, deterministically ordered */
template <class K>
std::vector<UFactor<K>> factor_univariate(const K& k, const UniPoly<K>& f) {
    if (f.is_zero()) throw ZeroPolynomial("factor_univariate");
    std::vector<UFactor<K>> out;
    if (f.degree() == 0) return out;
    if constexpr (K::is_prime_field) {
        out = detail::factor_fp(k, f);
    } else {
        /* Yun splits off the squarefree layers in characteristic zero */
        auto fm = up_make_monic(k, f);
        auto fd = up_derivative(k, fm);
        auto g = up_gcd(k, fm, fd);
        auto b = up_divmod(k, fm, g).first;
        auto c = up_divmod(k, fd, g).first;
        auto d = up_sub(k, c, up_derivative(k, b));
        size_t i = 1;
        while (b.degree() > 0) {
            auto a = up_gcd(k, b, d);
            if (a.degree() > 0)
                for (auto& irr : detail::factor_squarefree_q(k, a)) out.push_back({irr, i});
            b = up_divmod(k, b, a).first;
            c = up_divmod(k, d, a).first;
            d = up_sub(k, c, up_derivative(k, b));
            ++i;
        }
    }
    std::sort(out.begin(), out.end(), [&](const UFactor<K>& x, const UFactor<K>& y) {
        int c = up_cmp(k, x.poly, y.poly);
        return c != 0 ? c < 0 : x.mult < y.mult;
    });
    return out;
}

namespace detail {

/* Zassenhaus: factor a squarefree monic rational polynomial */
inline std::vector<UniPoly<Rationals>> factor_squarefree_q(const Rationals& k,
                                                           const UniPoly<Rationals>& f) {
    std::vector<UniPoly<Rationals>> out;
    if (f.degree() == 1) {
        out.push_back(up_make_monic(k, f));
        return out;
    }
    ZPoly G = zp_from_rational(f);

    /* prime with invertible leading coefficient and squarefree reduction */
    uint32_t good_p = 0;
    for (uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u,
                       53u, 59u, 61u, 67u, 71u, 73u, 79u, 83u, 89u, 97u, 101u, 103u}) {
        if (G.back() % p == 0) continue;
        PrimeField kp(p);
        auto gp = zp_mod_p(kp, G);
        if (gp.degree() != zp_degree(G)) continue;
        if (up_gcd(kp, gp, up_derivative(kp, gp)).degree() == 0) {
            good_p = p;
            break;
        }
    }
    if (good_p == 0) throw InvariantViolation("no usable small prime for rational factorization");
    PrimeField kp(good_p);

    auto modular = factor_fp(kp, zp_mod_p(kp, G));
    if (modular.size() == 1) {
        out.push_back(up_make_monic(k, f));
        return out;
    }

    /* Landau-Mignotte style bound on factor coefficients, times the leading
     * coefficient that the recombination products carry */
    mpz_class norm2 = 0;
    for (const auto& c : G) norm2 += c * c;
    mpz_class bound = 1;
    mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
    bound += 1;
    mpz_class two_deg;
    /* generous exponent: candidate products of lifted factors are compared
     * against quotients of G as well, whose coefficients obey the same kind
     * of bound; doubling the exponent covers both sides */
    mpz_ui_pow_ui(two_deg.get_mpz_t(), 2, static_cast<unsigned long>(2 * zp_degree(G) + 4));
    bound *= two_deg;
    bound *= abs(mpz_class(G.back()));
    mpz_class target = 2 * bound + 1;

    std::vector<UniPoly<PrimeField>> facs;
    facs.reserve(modular.size());
    for (auto& m : modular) facs.push_back(m.poly);
    auto lifted = hensel_lift(kp, G, facs, target);
    mpz_class modulus = good_p;
    while (modulus < target) modulus *= good_p;

    /* recombine subsets of the lifted factors, smallest cardinality first */
    std::vector<size_t> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;
    auto rational_G = [&]() { return zp_to_rational(k, G); };

    size_t t = 1;
    while (2 * t <= live.size()) {
        std::vector<size_t> idx(t);
        for (size_t i = 0; i < t; ++i) idx[i] = i;
        bool advanced_t = true;
        while (true) {
            ZPoly cand{mpz_class(G.back())};
            for (size_t i : idx) cand = zp_mul(cand, lifted[live[i]]);
            cand = zp_symmetric(cand, modulus);
            mpz_class cont = zp_content(cand);
            if (cand.back() < 0) cont = -cont;
            for (auto& c : cand) c /= cont;
            auto h = zp_to_rational(k, cand);
            auto [q, r] = up_divmod(k, rational_G(), h);
            if (r.is_zero()) {
                out.push_back(up_make_monic(k, h));
                G = zp_from_rational(q);
                std::vector<size_t> next_live;
                for (size_t i = 0, j = 0; i < live.size(); ++i) {
                    if (j < idx.size() && idx[j] == i)
                        ++j;
                    else
                        next_live.push_back(live[i]);
                }
                live = std::move(next_live);
                advanced_t = false;
                break;
            }
            /* next subset of the same cardinality */
            long pos = static_cast<long>(t) - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == live.size() - t + static_cast<size_t>(pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (size_t i = static_cast<size_t>(pos) + 1; i < t; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (advanced_t) ++t;
    }
    if (zp_degree(G) > 0) out.push_back(up_make_monic(k, zp_to_rational(k, G)));
    return out;
}

}  // namespace detail

/* squarefree part (radical) of a univariate polynomial, monic */
template <class K>
UniPoly<K> squarefree_part(const K& k, const UniPoly<K>& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree_part");
    auto r = up_const(k, k.one());
    if (f.degree() == 0) return r;
    for (auto& [g, m] : factor_univariate(k, f)) r = up_mul(k, r, g);
    return r;
}

}  // namespace superpot

#endif
