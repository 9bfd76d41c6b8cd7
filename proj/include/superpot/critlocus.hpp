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

#ifndef SUPERPOT_CRITLOCUS_HPP
#define SUPERPOT_CRITLOCUS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "superpot/artin.hpp"
#include "superpot/groebner.hpp"
#include "superpot/laurent.hpp"

namespace superpot {

/* the Jacobian ideal of a Laurent polynomial, as an honest polynomial ideal
 * cut back to the torus by saturating at the coordinate product */
template <class K>
struct JacobianData {
    LaurentPoly<K> w;
    std::vector<LaurentPoly<K>> gens; /* z_i dW/dz_i with negative exponents cleared */
    GroebnerBasis<K> saturated;
    long dim = -1; /* Krull dimension, -1 for the unit ideal */
};

template <class K>
JacobianData<K> jacobian(const K& k, const LaurentPoly<K>& w, long cap = kDefaultDegreeCap) {
    size_t n = w.n_vars;
    JacobianData<K> out;
    out.w = w;
    for (size_t i = 0; i < n; ++i) {
        auto d = log_derivative(k, w, i);
        if (d.is_zero()) {
            out.gens.push_back(std::move(d));
            continue;
        }
        auto m = detail::lp_min_expo(d);
        for (auto& x : m) x = std::min<int64_t>(x, 0);
        out.gens.push_back(lp_mul_term(k, d, expo_sub(Expo(n, 0), m), k.one()));
    }
    auto ideal = make_ideal(k, n, out.gens);
    if (ideal.gens.empty()) {
        out.saturated = buchberger(k, ideal, MonomialOrder::grevlex(), cap);
    } else {
        out.saturated =
            saturate(k, ideal, lp_term(k, n, Expo(n, 1), k.one()), MonomialOrder::grevlex(), cap);
    }
    out.dim = ideal_dimension(k, out.saturated);
    return out;
}

enum class Isolation { Isolated, NonIsolated, UnknownAtBound };

/* a closed point of the critical locus; rational points carry coordinates,
 * higher residue degree points carry their maximal ideal instead */
template <class K>
struct CriticalPoint {
    std::optional<TorusPoint<K>> coords;
    std::optional<GroebnerBasis<K>> maximal_ideal;
    size_t residue_degree = 1;
    std::optional<typename K::Elem> critical_value;
    std::optional<UniPoly<K>> critical_value_minpoly; /* of the value, over the prime field */
    std::optional<Isolation> isolated;
    std::optional<size_t> milnor;
    std::optional<bool> nondegenerate;
};

/* local Jacobian ring at an isolated point */
template <class K>
struct LocalAlgebra {
    size_t dim = 0;
    std::vector<Expo> basis;
    std::vector<Mat<K>> mult_matrices; /* one per ambient variable */
    size_t max_ideal_nilpotency = 0;
    size_t residue_degree = 1;
    ArtinAlgebra<K> algebra;
};

template <class K>
struct IsolatedPart {
    std::vector<CriticalPoint<K>> points;
    std::vector<LocalAlgebra<K>> locals;
    size_t total_dim = 0;
};

struct BoundReport {
    size_t n_points = 0;
    size_t total_dim = 0;
    long bound = 0;
    bool points_ok = true;
    bool dim_ok = true;
};

enum class Strategy { ExhaustiveFp, ZeroDimEigen, Candidates };

namespace detail {

/* univariate polynomial placed on the v-th coordinate */
template <class K>
LaurentPoly<K> up_as_laurent(const K& k, const UniPoly<K>& f, size_t n, size_t v) {
    LaurentPoly<K> r{n, {}};
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (k.is_zero(f.c[i])) continue;
        Expo e(n, 0);
        e[v] = static_cast<int64_t>(i);
        r.terms.emplace(std::move(e), f.c[i]);
    }
    return r;
}

template <class K>
LaurentPoly<K> lp_from_coords(const K& k, const std::vector<Expo>& monomials, const AlgVec<K>& v,
                              size_t n) {
    LaurentPoly<K> r{n, {}};
    for (size_t i = 0; i < v.size(); ++i) lp_add_term(k, r, monomials[i], v[i]);
    return r;
}

/* class of a Laurent polynomial in a quotient where each variable acts
 * invertibly; negative exponents go through matrix inverses */
template <class K>
AlgVec<K> laurent_class(const K& k, const LaurentPoly<K>& w, const std::vector<Mat<K>>& var_mult,
                        const AlgVec<K>& unit) {
    AlgVec<K> acc(unit.size(), k.zero());
    for (const auto& [e, c] : w.terms) {
        auto v = unit;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            v = mat_apply(k, mat_pow(k, var_mult[i], e[i]), v);
        }
        for (size_t r = 0; r < v.size(); ++r) acc[r] = k.add(acc[r], k.mul(c, v[r]));
    }
    return acc;
}

template <class K>
PolyIdeal<K> translated_max_ideal(const K& k, size_t n, const TorusPoint<K>& p) {
    std::vector<LaurentPoly<K>> gens;
    for (size_t i = 0; i < n; ++i) {
        Expo e(n, 0);
        e[i] = 1;
        auto g = lp_term(k, n, e, k.one());
        lp_add_term(k, g, Expo(n, 0), k.neg(p.coords[i]));
        gens.push_back(std::move(g));
    }
    return PolyIdeal<K>{n, std::move(gens)};
}

template <class K>
void check_critical(const K& k, const JacobianData<K>& jac, const TorusPoint<K>& p) {
    for (const auto& g : jac.gens)
        if (!k.is_zero(evaluate(k, g, p)))
            throw NotCritical("a logarithmic derivative does not vanish at the point");
}

template <class K>
void check_critical_closed(const K& k, const JacobianData<K>& jac, const GroebnerBasis<K>& mx) {
    for (const auto& g : jac.saturated.gens)
        if (!normal_form(k, g, mx).is_zero())
            throw NotCritical("the Jacobian ideal does not vanish at the closed point");
}

template <class K>
struct IsolationData {
    Isolation verdict = Isolation::NonIsolated;
    GroebnerBasis<K> away; /* I : m^infinity, the components away from the point */
};

template <class K>
IsolationData<K> isolation_data(const K& k, const JacobianData<K>& jac, const PolyIdeal<K>& mx,
                                long cap) {
    auto away = saturate_at_ideal(k, ideal_from_gb(jac.saturated), mx, jac.saturated.ord, cap);
    auto sum = buchberger(k, ideal_sum(k, ideal_from_gb(away), mx), jac.saturated.ord, cap);
    Isolation v = sum.is_unit() ? Isolation::Isolated : Isolation::NonIsolated;
    return {v, std::move(away)};
}

/* pick s in the away ideal that is a unit at the point; the saturation of
 * the Jacobian ideal at any such s is the primary component at the point */
template <class K>
GroebnerBasis<K> primary_component(const K& k, const JacobianData<K>& jac,
                                   const IsolationData<K>& iso, const TorusPoint<K>* p,
                                   const GroebnerBasis<K>* mx, long cap) {
    LaurentPoly<K> s;
    for (const auto& g : iso.away.gens) {
        if (p) {
            auto val = evaluate(k, g, *p);
            if (k.is_zero(val)) continue;
            s = lp_scale(k, g, k.inv(val));
        } else {
            if (normal_form(k, g, *mx).is_zero()) continue;
            s = g;
        }
        break;
    }
    if (s.is_zero()) throw InvariantViolation("no localizing element separates the point");
    return saturate(k, ideal_from_gb(jac.saturated), s, jac.saturated.ord, cap);
}

template <class K>
LocalAlgebra<K> build_local(const K& k, const QuotientData<K>& qd, const TorusPoint<K>* p) {
    LocalAlgebra<K> out;
    out.dim = qd.algebra.dim;
    out.basis = qd.monomials;
    for (const auto& vi : qd.var_image)
        out.mult_matrices.push_back(alg_mult_by(k, qd.algebra, vi));
    out.algebra = qd.algebra;
    auto factors = local_decomposition(k, qd.algebra);
    if (factors.size() != 1) throw InvariantViolation("the localized quotient is not local");
    out.max_ideal_nilpotency = factors[0].nilpotency;
    out.residue_degree = factors[0].residue_field_degree;
    if (p) {
        /* every basis element must be its residue scalar plus a nilpotent */
        for (size_t i = 0; i < out.dim; ++i) {
            auto s = k.one();
            for (size_t v = 0; v < p->coords.size(); ++v)
                s = k.mul(s, elem_pow(k, p->coords[v], qd.monomials[i][v]));
            auto m = qd.algebra.mult[i];
            for (size_t r = 0; r < out.dim; ++r) m.at(r, r) = k.sub(m.at(r, r), s);
            if (!mat_eq(k, mat_pow(k, m, static_cast<long>(out.dim)),
                        mat_zero(k, out.dim, out.dim)))
                throw InvariantViolation("a basis element is not scalar plus nilpotent");
        }
    }
    return out;
}

}  // namespace detail

template <class K>
std::vector<CriticalPoint<K>> find_critical_points(const K& k, const JacobianData<K>& jac,
                                                   Strategy strategy,
                                                   const std::vector<TorusPoint<K>>& candidates = {},
                                                   long cap = kDefaultDegreeCap) {
    size_t n = jac.w.n_vars;
    std::vector<CriticalPoint<K>> out;

    if (strategy == Strategy::ExhaustiveFp) {
        uint64_t p = k.characteristic();
        if (p == 0) throw SearchSpaceTooLarge("exhaustive search needs a finite prime field");
        if (std::pow(static_cast<double>(p), static_cast<double>(n)) > 1e7)
            throw SearchSpaceTooLarge("p^n exceeds 10^7");
        std::vector<uint64_t> idx(n, 1);
        while (true) {
            std::vector<typename K::Elem> cs;
            cs.reserve(n);
            for (auto v : idx) cs.push_back(k.from_int(static_cast<long>(v)));
            TorusPoint<K> pt{std::move(cs)};
            bool crit = true;
            for (const auto& g : jac.gens)
                if (!k.is_zero(evaluate(k, g, pt))) {
                    crit = false;
                    break;
                }
            if (crit) {
                CriticalPoint<K> cp;
                cp.critical_value = evaluate(k, jac.w, pt);
                cp.coords = std::move(pt);
                out.push_back(std::move(cp));
            }
            size_t i = 0;
            while (i < n && ++idx[i] == p) {
                idx[i] = 1;
                ++i;
            }
            if (i == n) break;
        }
        return out;
    }

    if (strategy == Strategy::ZeroDimEigen) {
        if (jac.saturated.is_unit()) return out; /* empty critical locus */
        if (jac.dim != 0)
            throw NotZeroDimensional("the saturated Jacobian ideal has positive dimension");
        auto qd = from_quotient_data(k, jac.saturated);
        auto factors = local_decomposition(k, qd.algebra);
        std::vector<Mat<K>> vm;
        vm.reserve(n);
        for (size_t v = 0; v < n; ++v) vm.push_back(alg_mult_by(k, qd.algebra, qd.var_image[v]));
        auto w_class = detail::laurent_class(k, jac.w, vm, qd.algebra.unit);
        auto mw = alg_mult_by(k, qd.algebra, w_class);
        for (const auto& f : factors) {
            auto scratch = detail::factor_scratch(k, qd.algebra, f.idempotent);
            CriticalPoint<K> cp;
            cp.residue_degree = f.residue_field_degree;
            cp.isolated = Isolation::Isolated; /* a zero-dimensional locus has no other kind */
            if (f.residue_field_degree == 0 || f.dim % f.residue_field_degree != 0)
                throw InvariantViolation("factor dimension is not a multiple of the residue degree");
            cp.milnor = f.dim / f.residue_field_degree;
            if (k.characteristic() != 2) cp.nondegenerate = (*cp.milnor == 1);
            std::vector<UniPoly<K>> mins;
            mins.reserve(n);
            for (size_t v = 0; v < n; ++v) {
                auto t = detail::restrict_operator(k, scratch.basis, vm[v]);
                mins.push_back(squarefree_part(k, minimal_polynomial(k, t)));
            }
            if (f.residue_field_degree == 1) {
                std::vector<typename K::Elem> cs;
                cs.reserve(n);
                for (const auto& q : mins) {
                    if (q.degree() != 1)
                        throw InvariantViolation("rational point with a nonlinear coordinate");
                    cs.push_back(k.neg(q.c[0]));
                    if (k.is_zero(cs.back()))
                        throw InvariantViolation("critical point left the torus");
                }
                cp.coords = TorusPoint<K>{std::move(cs)};
                cp.critical_value = evaluate(k, jac.w, *cp.coords);
            } else {
                auto lift = detail::lp_from_coords(k, qd.monomials, f.idempotent, n);
                auto primary = colon(k, ideal_from_gb(jac.saturated), lift, jac.saturated.ord, cap);
                auto gens = primary.gens;
                for (size_t v = 0; v < n; ++v)
                    gens.push_back(detail::up_as_laurent(k, mins[v], n, v));
                cp.maximal_ideal =
                    buchberger(k, PolyIdeal<K>{n, std::move(gens)}, jac.saturated.ord, cap);
                auto tw = detail::restrict_operator(k, scratch.basis, mw);
                cp.critical_value_minpoly = squarefree_part(k, minimal_polynomial(k, tw));
            }
            out.push_back(std::move(cp));
        }
        return out;
    }

    /* Strategy::Candidates */
    for (const auto& pt : candidates) {
        if (pt.coords.size() != n) throw ParseError("point dimension mismatch");
        bool crit = true;
        for (const auto& g : jac.gens)
            if (!k.is_zero(evaluate(k, g, pt))) {
                crit = false;
                break;
            }
        if (!crit) continue;
        CriticalPoint<K> cp;
        cp.coords = pt;
        cp.critical_value = evaluate(k, jac.w, pt);
        out.push_back(std::move(cp));
    }
    return out;
}

template <class K>
std::vector<CriticalPoint<K>> find_critical_points(const K& k, const LaurentPoly<K>& w,
                                                   Strategy strategy,
                                                   const std::vector<TorusPoint<K>>& candidates = {},
                                                   long cap = kDefaultDegreeCap) {
    return find_critical_points(k, jacobian(k, w, cap), strategy, candidates, cap);
}

template <class K>
Isolation is_isolated(const K& k, const JacobianData<K>& jac, const TorusPoint<K>& p,
                      long cap = kDefaultDegreeCap) {
    detail::check_critical(k, jac, p);
    return detail::isolation_data(k, jac, detail::translated_max_ideal(k, jac.w.n_vars, p), cap)
        .verdict;
}

template <class K>
Isolation is_isolated(const K& k, const JacobianData<K>& jac, const GroebnerBasis<K>& mx,
                      long cap = kDefaultDegreeCap) {
    detail::check_critical_closed(k, jac, mx);
    return detail::isolation_data(k, jac, ideal_from_gb(mx), cap).verdict;
}

template <class K>
Isolation is_isolated(const K& k, const LaurentPoly<K>& w, const TorusPoint<K>& p,
                      long cap = kDefaultDegreeCap) {
    return is_isolated(k, jacobian(k, w, cap), p, cap);
}

template <class K>
LocalAlgebra<K> local_jacobian(const K& k, const JacobianData<K>& jac, const TorusPoint<K>& p,
                               long cap = kDefaultDegreeCap) {
    detail::check_critical(k, jac, p);
    auto mx = detail::translated_max_ideal(k, jac.w.n_vars, p);
    auto iso = detail::isolation_data(k, jac, mx, cap);
    if (iso.verdict != Isolation::Isolated)
        throw NotIsolated("the local Jacobian ring is infinite-dimensional");
    auto q = detail::primary_component(k, jac, iso, &p, static_cast<const GroebnerBasis<K>*>(nullptr), cap);
    auto qd = from_quotient_data(k, q);
    auto out = detail::build_local(k, qd, &p);
    if (out.residue_degree != 1) throw InvariantViolation("rational point with a larger residue field");
    return out;
}

template <class K>
LocalAlgebra<K> local_jacobian(const K& k, const LaurentPoly<K>& w, const TorusPoint<K>& p,
                               long cap = kDefaultDegreeCap) {
    return local_jacobian(k, jacobian(k, w, cap), p, cap);
}

template <class K>
IsolatedPart<K> isolated_part(const K& k, const JacobianData<K>& jac,
                              const std::vector<CriticalPoint<K>>& points,
                              long cap = kDefaultDegreeCap) {
    IsolatedPart<K> out;
    size_t n = jac.w.n_vars;
    for (auto cp : points) {
        PolyIdeal<K> mx;
        if (cp.coords) {
            detail::check_critical(k, jac, *cp.coords);
            mx = detail::translated_max_ideal(k, n, *cp.coords);
        } else if (cp.maximal_ideal) {
            detail::check_critical_closed(k, jac, *cp.maximal_ideal);
            mx = ideal_from_gb(*cp.maximal_ideal);
        } else {
            throw InvariantViolation("critical point carries neither coordinates nor an ideal");
        }
        auto iso = detail::isolation_data(k, jac, mx, cap);
        if (iso.verdict != Isolation::Isolated) continue;
        cp.isolated = Isolation::Isolated;
        auto q = detail::primary_component(k, jac, iso, cp.coords ? &*cp.coords : nullptr,
                                           cp.maximal_ideal ? &*cp.maximal_ideal : nullptr, cap);
        auto qd = from_quotient_data(k, q);
        auto local = detail::build_local(k, qd, cp.coords ? &*cp.coords : nullptr);
        if (local.residue_degree != cp.residue_degree)
            throw InvariantViolation("residue degree of the local ring disagrees with the point");
        if (cp.residue_degree == 0 || local.dim % cp.residue_degree != 0)
            throw InvariantViolation("local dimension is not a multiple of the residue degree");
        cp.milnor = local.dim / cp.residue_degree;
        if (k.characteristic() != 2) cp.nondegenerate = (*cp.milnor == 1);
        out.total_dim += local.dim;
        out.points.push_back(std::move(cp));
        out.locals.push_back(std::move(local));
    }

    /* zero-dimensional case: every local must match a factor of the full
     * quotient, so the Milnor numbers are globally consistent */
    if (jac.dim == 0 && !jac.saturated.is_unit() && !out.locals.empty()) {
        auto qd = from_quotient_data(k, jac.saturated);
        auto factors = local_decomposition(k, qd.algebra);
        std::vector<LocalFingerprint> pool;
        pool.reserve(factors.size());
        for (const auto& f : factors) pool.push_back(f.fingerprint);
        for (const auto& loc : out.locals) {
            auto fp = fingerprint(k, loc.algebra);
            if (fp.factors.size() != 1)
                throw InvariantViolation("local algebra decomposed further");
            auto it = std::find(pool.begin(), pool.end(), fp.factors[0]);
            if (it == pool.end())
                throw InvariantViolation("local algebra matches no factor of the quotient");
            pool.erase(it);
        }
    }
    return out;
}

template <class K>
IsolatedPart<K> isolated_part(const K& k, const LaurentPoly<K>& w,
                              const std::vector<CriticalPoint<K>>& points,
                              long cap = kDefaultDegreeCap) {
    return isolated_part(k, jacobian(k, w, cap), points, cap);
}

/* image of W in a local algebra built at a rational point; validated to be
 * the critical value plus a nilpotent */
template <class K>
AlgVec<K> potential_image(const K& k, const LaurentPoly<K>& w, const LocalAlgebra<K>& local,
                          const TorusPoint<K>& p) {
    auto img = detail::laurent_class(k, w, local.mult_matrices, local.algebra.unit);
    auto lam = evaluate(k, w, p);
    AlgVec<K> nil(local.dim, k.zero());
    for (size_t i = 0; i < local.dim; ++i)
        nil[i] = k.sub(img[i], k.mul(lam, local.algebra.unit[i]));
    auto acc = nil;
    for (size_t j = 1; j < local.max_ideal_nilpotency && !alg_vec_is_zero(k, acc); ++j)
        acc = alg_mul(k, local.algebra, acc, nil);
    if (!alg_vec_is_zero(k, acc))
        throw InvariantViolation("potential image is not its value plus a nilpotent");
    return img;
}

template <class K>
BoundReport bound_checks(const IsolatedPart<K>& part, long d) {
    if (d < 0) throw InvariantViolation("negative dimension bound");
    BoundReport r;
    r.n_points = part.points.size();
    r.total_dim = part.total_dim;
    r.bound = d;
    r.points_ok = r.n_points <= static_cast<size_t>(d);
    r.dim_ok = r.total_dim <= static_cast<size_t>(d);
    return r;
}

}  // namespace superpot

#endif
