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

#ifndef SUPERPOT_KOSZUL_HPP
#define SUPERPOT_KOSZUL_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "superpot/artin.hpp"
#include "superpot/critlocus.hpp"
#include "superpot/errors.hpp"
#include "superpot/groebner.hpp"
#include "superpot/laurent.hpp"
#include "superpot/matrix.hpp"

namespace superpot {

/* Koszul complex of n elements acting on a finite-dimensional algebra.
 * Terms sit in degrees 0..n; degree 0 is the end whose cohomology is the
 * quotient by the elements. */
template <class K>
struct KoszulComplex {
    ArtinAlgebra<K> base;
    std::vector<AlgVec<K>> elements;
    std::vector<size_t> terms;         /* C(n,j) * dim for j = 0..n */
    std::vector<Mat<K>> differentials; /* differentials[j] : degree j+1 -> degree j */
};

namespace detail {

/* subsets of {0..n-1} grouped by size; each level in increasing mask order */
inline std::vector<std::vector<uint32_t>> subsets_by_size(size_t n) {
    std::vector<std::vector<uint32_t>> lv(n + 1);
    for (uint32_t m = 0; m < (uint32_t{1} << n); ++m)
        lv[static_cast<size_t>(std::popcount(m))].push_back(m);
    return lv;
}

inline size_t mask_index(const std::vector<uint32_t>& level, uint32_t m) {
    return static_cast<size_t>(std::lower_bound(level.begin(), level.end(), m) - level.begin());
}

template <class K>
SMat<K> to_smat(const K& k, const Mat<K>& m) {
    auto s = smat_zero(k, m.rows, m.cols);
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c)
            if (!k.is_zero(m.at(r, c))) smat_set(k, s, r, c, m.at(r, c));
    return s;
}

template <class K>
void smat_paste(const K& k, SMat<K>& dst, const Mat<K>& src, size_t r0, size_t c0) {
    for (size_t r = 0; r < src.rows; ++r)
        for (size_t c = 0; c < src.cols; ++c)
            if (!k.is_zero(src.at(r, c))) smat_set(k, dst, r0 + r, c0 + c, src.at(r, c));
}

}  // namespace detail

template <class K>
KoszulComplex<K> koszul_build(const K& k, ArtinAlgebra<K> base, std::vector<AlgVec<K>> elements) {
    size_t n = elements.size();
    size_t d = base.dim;
    if (n > 20) throw DimensionMismatch("too many Koszul elements");
    for (const auto& e : elements)
        if (e.size() != d) throw DimensionMismatch("a Koszul element does not live in the base");

    std::vector<Mat<K>> mult;
    mult.reserve(n);
    for (const auto& e : elements) mult.push_back(alg_mult_by(k, base, e));

    auto levels = detail::subsets_by_size(n);
    KoszulComplex<K> kc{std::move(base), std::move(elements), {}, {}};
    for (size_t j = 0; j <= n; ++j) kc.terms.push_back(levels[j].size() * d);

    for (size_t j = 0; j < n; ++j) {
        auto m = mat_zero(k, kc.terms[j], kc.terms[j + 1]);
        for (size_t ct = 0; ct < levels[j + 1].size(); ++ct) {
            uint32_t t = levels[j + 1][ct];
            for (size_t i = 0; i < n; ++i) {
                if (!(t & (uint32_t{1} << i))) continue;
                /* Leibniz sign from the position of i inside t */
                bool flip = std::popcount(t & ((uint32_t{1} << i) - 1)) % 2 == 1;
                size_t rt = detail::mask_index(levels[j], t ^ (uint32_t{1} << i));
                for (size_t r = 0; r < d; ++r)
                    for (size_t c = 0; c < d; ++c) {
                        const auto& v = mult[i].at(r, c);
                        m.at(rt * d + r, ct * d + c) = flip ? k.neg(v) : v;
                    }
            }
        }
        kc.differentials.push_back(std::move(m));
    }

    for (size_t j = 0; j + 1 < kc.differentials.size(); ++j) {
        auto z = mat_mul(k, kc.differentials[j], kc.differentials[j + 1]);
        if (!mat_eq(k, z, mat_zero(k, z.rows, z.cols)))
            throw InvariantViolation("the Koszul differential does not square to zero");
    }
    return kc;
}

template <class K>
std::vector<size_t> cohomology_dims(const K& k, const KoszulComplex<K>& kc) {
    size_t n = kc.elements.size();
    std::vector<size_t> rank(n + 2, 0); /* rank[j] = rank of the map out of degree j */
    for (size_t j = 1; j <= n; ++j)
        rank[j] = smat_rank(k, detail::to_smat(k, kc.differentials[j - 1]));
    std::vector<size_t> dims(n + 1, 0);
    for (size_t j = 0; j <= n; ++j) dims[j] = kc.terms[j] - rank[j] - rank[j + 1];
    return dims;
}

/* ------------------------------------------------------------------ */
/* regular sequences, certified locally through exact colon ideals     */

namespace detail {

/* one step: (prev : g) must fall into prev after clearing by a single unit
 * at the point; the witness s lives in (prev : colon) and is checked */
template <class K, class IsUnit>
bool regular_step(const K& k, const GroebnerBasis<K>& prev, const LaurentPoly<K>& g,
                  const IsUnit& unit_at, long cap) {
    if (g.is_zero()) return false;
    auto cln = colon(k, ideal_from_gb(prev), g, prev.ord, cap);
    std::vector<LaurentPoly<K>> outside;
    for (const auto& c : cln.gens)
        if (!normal_form(k, c, prev).is_zero()) outside.push_back(c);
    if (outside.empty()) return true;

    PolyIdeal<K> acc = ideal_from_gb(colon(k, ideal_from_gb(prev), outside[0], prev.ord, cap));
    for (size_t i = 1; i < outside.size(); ++i) {
        auto part = colon(k, ideal_from_gb(prev), outside[i], prev.ord, cap);
        acc = PolyIdeal<K>{prev.n_vars, intersect_ideals(k, acc, ideal_from_gb(part), cap)};
    }
    auto denom = buchberger(k, acc, prev.ord, cap);
    for (const auto& s : denom.gens) {
        if (!unit_at(s)) continue;
        for (const auto& c : outside)
            if (!normal_form(k, lp_mul(k, s, c), prev).is_zero())
                throw InvariantViolation("the localizing unit fails to clear the colon ideal");
        return true;
    }
    return false;
}

template <class K, class IsUnit>
bool regular_core(const K& k, const JacobianData<K>& jac, const IsUnit& unit_at, long cap) {
    size_t n = jac.gens.size();
    auto prev = buchberger(k, PolyIdeal<K>{n, {}}, jac.saturated.ord, cap);
    for (const auto& g : jac.gens) {
        if (!regular_step(k, prev, g, unit_at, cap)) return false;
        prev = buchberger(k, ideal_sum(k, ideal_from_gb(prev), PolyIdeal<K>{n, {g}}),
                          jac.saturated.ord, cap);
    }
    return true;
}

}  // namespace detail

template <class K>
bool is_regular_sequence(const K& k, const JacobianData<K>& jac, const TorusPoint<K>& p,
                         long cap = kDefaultDegreeCap) {
    detail::check_critical(k, jac, p);
    auto unit_at = [&](const LaurentPoly<K>& s) { return !k.is_zero(evaluate(k, s, p)); };
    return detail::regular_core(k, jac, unit_at, cap);
}

template <class K>
bool is_regular_sequence(const K& k, const JacobianData<K>& jac, const GroebnerBasis<K>& mx,
                         long cap = kDefaultDegreeCap) {
    detail::check_critical_closed(k, jac, mx);
    auto unit_at = [&](const LaurentPoly<K>& s) { return !normal_form(k, s, mx).is_zero(); };
    return detail::regular_core(k, jac, unit_at, cap);
}

template <class K>
bool is_regular_sequence(const K& k, const LaurentPoly<K>& w, const TorusPoint<K>& p,
                         long cap = kDefaultDegreeCap) {
    return is_regular_sequence(k, jacobian(k, w, cap), p, cap);
}

/* ------------------------------------------------------------------ */
/* localized cohomology                                                */

struct LocalKoszul {
    std::vector<size_t> dims;
    bool exact = false;      /* certified from the localized quotient */
    bool stabilized = false; /* the truncation sweep reached a repeat */
    long truncation = 0;     /* last truncation used, 0 on the exact path */
};

namespace detail {

template <class K>
struct TruncatedModel {
    GroebnerBasis<K> gb;
    QuotientData<K> qd;
    KoszulComplex<K> kc;
};

/* the log-derivatives acting on S/m^N */
template <class K>
TruncatedModel<K> truncated_model(const K& k, const JacobianData<K>& jac, const PolyIdeal<K>& mx,
                                  long n_trunc, long cap) {
    auto gb = buchberger(k, ideal_power(k, mx, static_cast<size_t>(n_trunc)), jac.saturated.ord,
                         cap);
    auto qd = from_quotient_data(k, gb);
    std::vector<Mat<K>> var_mult;
    for (const auto& vi : qd.var_image) var_mult.push_back(alg_mult_by(k, qd.algebra, vi));
    std::vector<AlgVec<K>> els;
    for (const auto& g : jac.gens) els.push_back(laurent_class(k, g, var_mult, qd.algebra.unit));
    auto kc = koszul_build(k, qd.algebra, std::move(els));
    return {std::move(gb), std::move(qd), std::move(kc)};
}

/* matrix of the quotient surjection between two truncations */
template <class K>
Mat<K> quotient_projection(const K& k, const TruncatedModel<K>& hi, const TruncatedModel<K>& lo) {
    std::map<Expo, size_t> idx;
    for (size_t i = 0; i < lo.qd.monomials.size(); ++i) idx[lo.qd.monomials[i]] = i;
    size_t n = lo.gb.n_vars;
    auto m = mat_zero(k, lo.qd.algebra.dim, hi.qd.algebra.dim);
    for (size_t j = 0; j < hi.qd.monomials.size(); ++j) {
        auto nf = normal_form(k, lp_term(k, n, hi.qd.monomials[j], k.one()), lo.gb);
        for (const auto& [e, c] : nf.terms) {
            auto it = idx.find(e);
            if (it == idx.end()) throw InvariantViolation("projection left the staircase");
            m.at(it->second, j) = c;
        }
    }
    return m;
}

/* dimensions of im(H_j(hi) -> H_j(lo)); these are what survive deeper
 * truncation, the naive kernels carry socle junk that dies here */
template <class K>
std::vector<size_t> stable_dims(const K& k, const KoszulComplex<K>& hi, const KoszulComplex<K>& lo,
                                const Mat<K>& proj) {
    size_t n = hi.elements.size();
    size_t d_hi = hi.base.dim;
    size_t d_lo = lo.base.dim;
    auto levels = subsets_by_size(n);

    std::vector<size_t> r_hi(n + 2, 0), r_lo(n + 2, 0);
    for (size_t j = 1; j <= n; ++j) {
        r_hi[j] = smat_rank(k, to_smat(k, hi.differentials[j - 1]));
        r_lo[j] = smat_rank(k, to_smat(k, lo.differentials[j - 1]));
    }

    std::vector<size_t> out(n + 1, 0);
    for (size_t j = 0; j <= n; ++j) {
        size_t rows = (j >= 1 ? hi.terms[j - 1] : 0) + lo.terms[j];
        size_t cols = hi.terms[j] + (j < n ? lo.terms[j + 1] : 0);
        auto m = smat_zero(k, rows, cols);
        size_t r_off = 0;
        if (j >= 1) {
            smat_paste(k, m, hi.differentials[j - 1], 0, 0);
            r_off = hi.terms[j - 1];
        }
        for (size_t b = 0; b < levels[j].size(); ++b)
            smat_paste(k, m, proj, r_off + b * d_lo, b * d_hi);
        if (j < n) smat_paste(k, m, lo.differentials[j], r_off, hi.terms[j]);
        size_t r = smat_rank(k, std::move(m));
        out[j] = r - r_hi[j] - r_lo[j + 1];
    }
    return out;
}

}  // namespace detail

template <class K>
LocalKoszul local_koszul_sweep(const K& k, const JacobianData<K>& jac, const PolyIdeal<K>& mx,
                               long n_start = 2, long n_max = 12,
                               long cap = kDefaultDegreeCap) {
    if (n_start < 1) n_start = 1;
    LocalKoszul out;
    auto lo = detail::truncated_model(k, jac, mx, n_start, cap);
    std::vector<size_t> prev;
    for (long nt = n_start; nt < n_max; ++nt) {
        auto hi = detail::truncated_model(k, jac, mx, nt + 1, cap);
        auto proj = detail::quotient_projection(k, hi, lo);
        auto cur = detail::stable_dims(k, hi.kc, lo.kc, proj);
        out.dims = cur;
        out.truncation = nt + 1;
        if (!prev.empty() && cur == prev) {
            out.stabilized = true;
            break;
        }
        prev = std::move(cur);
        lo = std::move(hi);
    }
    return out;
}

namespace detail {

template <class K>
LocalKoszul local_koszul_core(const K& k, const JacobianData<K>& jac, const PolyIdeal<K>& mx,
                              const TorusPoint<K>* p, const GroebnerBasis<K>* mxgb, bool regular,
                              long n_max, long cap) {
    auto iso = isolation_data(k, jac, mx, cap);
    if (iso.verdict == Isolation::Isolated) {
        auto prim = primary_component(k, jac, iso, p, mxgb, cap);
        if (!regular)
            throw InvariantViolation("isolated point without a locally regular sequence");
        LocalKoszul out;
        out.dims.assign(jac.gens.size() + 1, 0);
        out.dims[0] = from_quotient_data(k, prim).algebra.dim;
        out.exact = true;
        out.stabilized = true;
        return out;
    }
    return local_koszul_sweep(k, jac, mx, 2, n_max, cap);
}

}  // namespace detail

template <class K>
LocalKoszul local_koszul(const K& k, const JacobianData<K>& jac, const TorusPoint<K>& p,
                         long n_max = 12, long cap = kDefaultDegreeCap) {
    detail::check_critical(k, jac, p);
    auto mx = detail::translated_max_ideal(k, jac.gens.size(), p);
    return detail::local_koszul_core(k, jac, mx, &p, static_cast<const GroebnerBasis<K>*>(nullptr),
                                     is_regular_sequence(k, jac, p, cap), n_max, cap);
}

template <class K>
LocalKoszul local_koszul(const K& k, const JacobianData<K>& jac, const GroebnerBasis<K>& mx,
                         long n_max = 12, long cap = kDefaultDegreeCap) {
    detail::check_critical_closed(k, jac, mx);
    return detail::local_koszul_core(k, jac, ideal_from_gb(mx),
                                     static_cast<const TorusPoint<K>*>(nullptr), &mx,
                                     is_regular_sequence(k, jac, mx, cap), n_max, cap);
}

template <class K>
LocalKoszul local_koszul(const K& k, const LaurentPoly<K>& w, const TorusPoint<K>& p,
                         long n_max = 12, long cap = kDefaultDegreeCap) {
    return local_koszul(k, jacobian(k, w, cap), p, n_max, cap);
}

}  // namespace superpot

#endif
