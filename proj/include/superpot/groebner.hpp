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

#ifndef SUPERPOT_GROEBNER_HPP
#define SUPERPOT_GROEBNER_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "superpot/laurent.hpp"

namespace superpot {

constexpr long kDefaultDegreeCap = 200;

struct MonomialOrder {
    enum class Kind { GrevLex, Lex, Block };
    Kind kind = Kind::GrevLex;
    size_t block = 0;

    static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder block_elim(size_t leading) { return {Kind::Block, leading}; }

    static int cmp_grevlex(const Expo& a, const Expo& b, size_t lo, size_t hi) {
        int64_t da = 0, db = 0;
        for (size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }

    [[nodiscard]] int cmp(const Expo& a, const Expo& b) const {
        switch (kind) {
            case Kind::GrevLex:
                return cmp_grevlex(a, b, 0, a.size());
            case Kind::Lex:
                for (size_t i = 0; i < a.size(); ++i)
                    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
                return 0;
            case Kind::Block: {
                int c = cmp_grevlex(a, b, 0, block);
                if (c != 0) return c;
                return cmp_grevlex(a, b, block, a.size());
            }
        }
        return 0;
    }
};

template <class K>
struct PolyIdeal {
    size_t n_vars = 0;
    std::vector<LaurentPoly<K>> gens;
};

template <class K>
PolyIdeal<K> make_ideal(const K&, size_t n_vars, std::vector<LaurentPoly<K>> gens) {
    for (const auto& g : gens)
        for (const auto& [e, c] : g.terms)
            for (auto v : e)
                if (v < 0) throw ParseError("ideal generator has a negative exponent");
    std::vector<LaurentPoly<K>> keep;
    for (auto& g : gens)
        if (!g.is_zero()) keep.push_back(std::move(g));
    return {n_vars, std::move(keep)};
}

template <class K>
struct GroebnerBasis {
    MonomialOrder ord;
    size_t n_vars = 0;
    std::vector<LaurentPoly<K>> gens; /* reduced, monic, sorted by leading monomial */

    [[nodiscard]] bool is_unit() const {
        return gens.size() == 1 && gens[0].terms.size() == 1 &&
               gens[0].terms.begin()->first == Expo(n_vars, 0);
    }
};

namespace detail {

template <class K>
const Expo& lt_expo(const LaurentPoly<K>& f, const MonomialOrder& ord) {
    auto best = f.terms.begin();
    for (auto it = std::next(f.terms.begin()); it != f.terms.end(); ++it)
        if (ord.cmp(it->first, best->first) > 0) best = it;
    return best->first;
}

inline bool expo_divides(const Expo& a, const Expo& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Expo expo_lcm(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline int64_t expo_total(const Expo& e) {
    int64_t t = 0;
    for (auto v : e) t += v;
    return t;
}

}  // namespace detail

/* full normal form: every term of the result is reduced */
template <class K>
LaurentPoly<K> normal_form(const K& k, LaurentPoly<K> f, const std::vector<LaurentPoly<K>>& basis,
                           const MonomialOrder& ord) {
    LaurentPoly<K> r{f.n_vars, {}};
    std::vector<Expo> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis) lts.push_back(detail::lt_expo(g, ord));
    while (!f.is_zero()) {
        Expo le = detail::lt_expo(f, ord);
        auto lc = f.terms.at(le);
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!detail::expo_divides(lts[i], le)) continue;
            auto factor = k.div(lc, basis[i].terms.at(lts[i]));
            f = lp_sub(k, f, lp_mul_term(k, basis[i], expo_sub(le, lts[i]), factor));
            reduced = true;
            break;
        }
        if (!reduced) {
            r.terms.emplace(le, lc);
            f.terms.erase(le);
        }
    }
    return r;
}

template <class K>
LaurentPoly<K> normal_form(const K& k, const LaurentPoly<K>& f, const GroebnerBasis<K>& gb) {
    return normal_form(k, f, gb.gens, gb.ord);
}

template <class K>
GroebnerBasis<K> buchberger(const K& k, const PolyIdeal<K>& ideal, const MonomialOrder& ord,
                            long degree_cap = kDefaultDegreeCap) {
    std::vector<LaurentPoly<K>> basis;
    for (const auto& g : ideal.gens)
        if (!g.is_zero()) basis.push_back(g);

    struct Pair {
        size_t i, j;
        Expo lcm;
        int64_t deg;
    };
    auto make_pair_entry = [&](size_t i, size_t j) {
        Expo l = detail::expo_lcm(detail::lt_expo(basis[i], ord), detail::lt_expo(basis[j], ord));
        return Pair{i, j, l, detail::expo_total(l)};
    };

    std::vector<Pair> pending;
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < j; ++i) pending.push_back(make_pair_entry(i, j));

    while (!pending.empty()) {
        size_t best = 0;
        for (size_t t = 1; t < pending.size(); ++t) {
            const auto& a = pending[t];
            const auto& b = pending[best];
            if (a.deg < b.deg || (a.deg == b.deg && (a.j < b.j || (a.j == b.j && a.i < b.i))))
                best = t;
        }
        Pair p = pending[best];
        pending.erase(pending.begin() + static_cast<long>(best));

        const Expo lti = detail::lt_expo(basis[p.i], ord);
        const Expo ltj = detail::lt_expo(basis[p.j], ord);

        /* coprime leading terms reduce to zero */
        if (p.lcm == expo_add(lti, ltj)) continue;

        /* chain criterion, restricted to proper divisors so no cyclic
         * elimination can occur */
        bool skip = false;
        for (size_t t = 0; t < basis.size() && !skip; ++t) {
            if (t == p.i || t == p.j) continue;
            const Expo& ltt = detail::lt_expo(basis[t], ord);
            if (!detail::expo_divides(ltt, p.lcm)) continue;
            if (detail::expo_lcm(ltt, lti) != p.lcm && detail::expo_lcm(ltt, ltj) != p.lcm)
                skip = true;
        }
        if (skip) continue;

        auto ci = basis[p.i].terms.at(lti);
        auto cj = basis[p.j].terms.at(ltj);
        auto s = lp_sub(k, lp_mul_term(k, basis[p.i], expo_sub(p.lcm, lti), k.inv(ci)),
                        lp_mul_term(k, basis[p.j], expo_sub(p.lcm, ltj), k.inv(cj)));
        s = normal_form(k, s, basis, ord);
        if (s.is_zero()) continue;
        if (detail::expo_total(detail::lt_expo(s, ord)) > degree_cap) throw DegreeExplosion(degree_cap);
        basis.push_back(s);
        for (size_t i = 0; i + 1 < basis.size(); ++i) pending.push_back(make_pair_entry(i, basis.size() - 1));
    }

    /* minimalize: drop generators whose leading term another one divides */
    std::vector<LaurentPoly<K>> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Expo& li = detail::lt_expo(basis[i], ord);
            const Expo& lj = detail::lt_expo(basis[j], ord);
            if (detail::expo_divides(lj, li) && (li != lj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    /* tail-reduce into the reduced basis */
    std::vector<LaurentPoly<K>> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<LaurentPoly<K>> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto h = normal_form(k, minimal[i], others, ord);
        if (h.is_zero()) continue;
        reduced.push_back(lp_scale(k, h, k.inv(h.terms.at(detail::lt_expo(h, ord)))));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
        return ord.cmp(detail::lt_expo(a, ord), detail::lt_expo(b, ord)) < 0;
    });
    return GroebnerBasis<K>{ord, ideal.n_vars, std::move(reduced)};
}

template <class K>
bool gb_contains(const K& k, const GroebnerBasis<K>& gb, const LaurentPoly<K>& f) {
    return normal_form(k, f, gb).is_zero();
}

/* every S-polynomial of a Groebner basis must reduce to zero */
template <class K>
bool gb_spoly_audit(const K& k, const GroebnerBasis<K>& gb) {
    for (size_t j = 0; j < gb.gens.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            const Expo lti = detail::lt_expo(gb.gens[i], gb.ord);
            const Expo ltj = detail::lt_expo(gb.gens[j], gb.ord);
            Expo l = detail::expo_lcm(lti, ltj);
            auto ci = gb.gens[i].terms.at(lti);
            auto cj = gb.gens[j].terms.at(ltj);
            auto s = lp_sub(k, lp_mul_term(k, gb.gens[i], expo_sub(l, lti), k.inv(ci)),
                            lp_mul_term(k, gb.gens[j], expo_sub(l, ltj), k.inv(cj)));
            if (!normal_form(k, s, gb).is_zero()) return false;
        }
    return true;
}

template <class K>
bool ideal_equal(const K& k, const GroebnerBasis<K>& a, const GroebnerBasis<K>& b) {
    for (const auto& g : a.gens)
        if (!gb_contains(k, b, g)) return false;
    for (const auto& g : b.gens)
        if (!gb_contains(k, a, g)) return false;
    return true;
}

/* Krull dimension of the quotient ring, read off the initial ideal;
 * the unit ideal reports -1 */
template <class K>
long ideal_dimension(const K& k, const GroebnerBasis<K>& gb) {
    (void)k;
    if (gb.is_unit()) return -1;
    size_t n = gb.n_vars;
    std::vector<Expo> lts;
    for (const auto& g : gb.gens) lts.push_back(detail::lt_expo(g, gb.ord));
    long best = 0;
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool independent = true;
        for (const auto& e : lts) {
            bool inside = true;
            for (size_t i = 0; i < n && inside; ++i)
                if (e[i] > 0 && !(mask >> i & 1)) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, static_cast<long>(__builtin_popcountll(mask)));
    }
    return best;
}

/* monomials outside the initial ideal, sorted by the basis order;
 * empty for the unit ideal, NotZeroDimensional if infinitely many */
template <class K>
std::vector<Expo> quotient_basis(const K& k, const GroebnerBasis<K>& gb) {
    if (gb.is_unit()) return {};
    long dim = ideal_dimension(k, gb);
    if (dim != 0) throw NotZeroDimensional("quotient dimension is " + std::to_string(dim));
    size_t n = gb.n_vars;
    std::vector<Expo> lts;
    for (const auto& g : gb.gens) lts.push_back(detail::lt_expo(g, gb.ord));
    auto in_initial = [&](const Expo& e) {
        for (const auto& l : lts)
            if (detail::expo_divides(l, e)) return true;
        return false;
    };
    std::set<Expo> seen;
    std::vector<Expo> queue{Expo(n, 0)};
    seen.insert(queue[0]);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Expo e = queue[qi];
        for (size_t i = 0; i < n; ++i) {
            Expo f = e;
            ++f[i];
            if (in_initial(f) || !seen.insert(f).second) continue;
            queue.push_back(f);
        }
    }
    std::vector<Expo> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](const Expo& a, const Expo& b) { return gb.ord.cmp(a, b) < 0; });
    return out;
}

namespace detail {

template <class K>
LaurentPoly<K> lp_prepend_var(const LaurentPoly<K>& f, int64_t t_exp) {
    LaurentPoly<K> r{f.n_vars + 1, {}};
    for (const auto& [e, c] : f.terms) {
        Expo x(f.n_vars + 1);
        x[0] = t_exp;
        std::copy(e.begin(), e.end(), x.begin() + 1);
        r.terms.emplace(std::move(x), c);
    }
    return r;
}

template <class K>
LaurentPoly<K> lp_strip_first_var(const LaurentPoly<K>& f) {
    LaurentPoly<K> r{f.n_vars - 1, {}};
    for (const auto& [e, c] : f.terms) r.terms.emplace(Expo(e.begin() + 1, e.end()), c);
    return r;
}

/* compute a basis of J cap k[x_2..x_n] where J lives in k[t, x_2..x_n] */
template <class K>
std::vector<LaurentPoly<K>> eliminate_first(const K& k, size_t n_plus_1,
                                            std::vector<LaurentPoly<K>> gens, long cap) {
    auto gb = buchberger(k, PolyIdeal<K>{n_plus_1, std::move(gens)}, MonomialOrder::block_elim(1), cap);
    std::vector<LaurentPoly<K>> out;
    for (const auto& g : gb.gens) {
        bool has_t = false;
        for (const auto& [e, c] : g.terms)
            if (e[0] > 0) {
                has_t = true;
                break;
            }
        if (!has_t) out.push_back(lp_strip_first_var(g));
    }
    return out;
}

}  // namespace detail

/* I : f^infinity */
template <class K>
GroebnerBasis<K> saturate(const K& k, const PolyIdeal<K>& ideal, const LaurentPoly<K>& f,
                          const MonomialOrder& ord = MonomialOrder::grevlex(),
                          long cap = kDefaultDegreeCap) {
    if (f.is_zero()) throw InvariantViolation("saturation at zero");
    std::vector<LaurentPoly<K>> gens;
    for (const auto& g : ideal.gens) gens.push_back(detail::lp_prepend_var(g, 0));
    auto tf = detail::lp_prepend_var(f, 1);
    gens.push_back(lp_sub(k, tf, lp_one(k, ideal.n_vars + 1)));
    auto elim = detail::eliminate_first(k, ideal.n_vars + 1, std::move(gens), cap);
    return buchberger(k, PolyIdeal<K>{ideal.n_vars, std::move(elim)}, ord, cap);
}

/* generators of I cap J via the usual interpolation variable */
template <class K>
std::vector<LaurentPoly<K>> intersect_ideals(const K& k, const PolyIdeal<K>& a, const PolyIdeal<K>& b,
                                             long cap = kDefaultDegreeCap) {
    std::vector<LaurentPoly<K>> gens;
    for (const auto& g : a.gens) gens.push_back(detail::lp_prepend_var(g, 1));
    for (const auto& g : b.gens) {
        auto tg = detail::lp_prepend_var(g, 1);
        auto g0 = detail::lp_prepend_var(g, 0);
        gens.push_back(lp_sub(k, g0, tg));
    }
    return detail::eliminate_first(k, a.n_vars + 1, std::move(gens), cap);
}

/* I : f, through I cap (f) */
template <class K>
GroebnerBasis<K> colon(const K& k, const PolyIdeal<K>& ideal, const LaurentPoly<K>& f,
                       const MonomialOrder& ord = MonomialOrder::grevlex(),
                       long cap = kDefaultDegreeCap) {
    if (f.is_zero()) throw InvariantViolation("colon by zero");
    if (ideal.gens.empty()) return buchberger(k, ideal, ord, cap);
    PolyIdeal<K> fid{ideal.n_vars, {f}};
    auto inter = intersect_ideals(k, ideal, fid, cap);
    std::vector<LaurentPoly<K>> quots;
    for (const auto& g : inter) quots.push_back(mp_exact_div(k, g, f));
    return buchberger(k, PolyIdeal<K>{ideal.n_vars, std::move(quots)}, ord, cap);
}

template <class K>
PolyIdeal<K> ideal_from_gb(const GroebnerBasis<K>& gb) {
    return {gb.n_vars, gb.gens};
}

template <class K>
PolyIdeal<K> ideal_sum(const K&, const PolyIdeal<K>& a, const PolyIdeal<K>& b) {
    PolyIdeal<K> r = a;
    for (const auto& g : b.gens) r.gens.push_back(g);
    return r;
}

/* all products of exactly n generators (with repetition) */
template <class K>
PolyIdeal<K> ideal_power(const K& k, const PolyIdeal<K>& ideal, size_t n) {
    if (n == 0) return {ideal.n_vars, {lp_one(k, ideal.n_vars)}};
    std::vector<std::pair<LaurentPoly<K>, size_t>> acc;
    for (size_t i = 0; i < ideal.gens.size(); ++i) acc.emplace_back(ideal.gens[i], i);
    for (size_t step = 1; step < n; ++step) {
        std::vector<std::pair<LaurentPoly<K>, size_t>> nxt;
        for (const auto& [v, last_idx] : acc)
            for (size_t i = last_idx; i < ideal.gens.size(); ++i)
                nxt.emplace_back(lp_mul(k, v, ideal.gens[i]), i);
        acc = std::move(nxt);
    }
    std::vector<LaurentPoly<K>> out;
    out.reserve(acc.size());
    for (auto& [v, i] : acc) out.push_back(std::move(v));
    return {ideal.n_vars, std::move(out)};
}

namespace detail {

template <class K>
GroebnerBasis<K> saturate_at_ideal_once(const K& k, const PolyIdeal<K>& ideal, const PolyIdeal<K>& at,
                                        const MonomialOrder& ord, long cap) {
    /* I : J^inf is the intersection of the I : f^inf over generators f of J */
    PolyIdeal<K> current = ideal_from_gb(saturate(k, ideal, at.gens[0], ord, cap));
    for (size_t i = 1; i < at.gens.size(); ++i) {
        auto part = ideal_from_gb(saturate(k, ideal, at.gens[i], ord, cap));
        auto gens = intersect_ideals(k, current, part, cap);
        current = PolyIdeal<K>{ideal.n_vars, std::move(gens)};
    }
    return buchberger(k, current, ord, cap);
}

}  // namespace detail

/* saturation at an ideal, with a fixed-point check */
template <class K>
GroebnerBasis<K> saturate_at_ideal(const K& k, const PolyIdeal<K>& ideal, const PolyIdeal<K>& at,
                                   const MonomialOrder& ord = MonomialOrder::grevlex(),
                                   long cap = kDefaultDegreeCap) {
    if (at.gens.empty()) throw InvariantViolation("saturation at the zero ideal");
    auto gb = detail::saturate_at_ideal_once(k, ideal, at, ord, cap);
    auto again = detail::saturate_at_ideal_once(k, ideal_from_gb(gb), at, ord, cap);
    if (!ideal_equal(k, gb, again)) throw InvariantViolation("ideal saturation did not reach a fixed point");
    return gb;
}

}  // namespace superpot

#endif
