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

#ifndef SUPERPOT_ARTIN_HPP
#define SUPERPOT_ARTIN_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "superpot/factor.hpp"
#include "superpot/groebner.hpp"
#include "superpot/matrix.hpp"

namespace superpot {

/* finite dimensional commutative algebra given by one multiplication
 * matrix per basis element */
template <class K>
struct ArtinAlgebra {
    using Elem = typename K::Elem;
    size_t dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<Mat<K>> mult;
    std::vector<Elem> unit;
    std::vector<int> parity; /* empty when ungraded */
};

template <class K>
using AlgVec = std::vector<typename K::Elem>;

template <class K>
Mat<K> alg_mult_by(const K& k, const ArtinAlgebra<K>& a, const AlgVec<K>& v) {
    auto m = mat_zero(k, a.dim, a.dim);
    for (size_t i = 0; i < a.dim; ++i) {
        if (k.is_zero(v[i])) continue;
        for (size_t r = 0; r < a.dim; ++r)
            for (size_t c = 0; c < a.dim; ++c)
                m.at(r, c) = k.add(m.at(r, c), k.mul(v[i], a.mult[i].at(r, c)));
    }
    return m;
}

template <class K>
AlgVec<K> alg_mul(const K& k, const ArtinAlgebra<K>& a, const AlgVec<K>& u, const AlgVec<K>& v) {
    AlgVec<K> r(a.dim, k.zero());
    for (size_t i = 0; i < a.dim; ++i) {
        if (k.is_zero(u[i])) continue;
        for (size_t j = 0; j < a.dim; ++j) {
            if (k.is_zero(v[j])) continue;
            auto c = k.mul(u[i], v[j]);
            for (size_t r_ = 0; r_ < a.dim; ++r_)
                r[r_] = k.add(r[r_], k.mul(c, a.mult[i].at(r_, j)));
        }
    }
    return r;
}

template <class K>
bool alg_vec_eq(const K& k, const AlgVec<K>& u, const AlgVec<K>& v) {
    if (u.size() != v.size()) return false;
    for (size_t i = 0; i < u.size(); ++i)
        if (!k.eq(u[i], v[i])) return false;
    return true;
}

template <class K>
bool alg_vec_is_zero(const K& k, const AlgVec<K>& u) {
    for (const auto& x : u)
        if (!k.is_zero(x)) return false;
    return true;
}

/* validated constructor: commutative (with signs when graded),
 * associative and unital, all checked exhaustively */
template <class K>
ArtinAlgebra<K> make_algebra(const K& k, std::vector<std::string> labels,
                             std::vector<Mat<K>> mult, AlgVec<K> unit,
                             std::vector<int> parity = {}) {
    ArtinAlgebra<K> a;
    a.dim = labels.size();
    a.basis_labels = std::move(labels);
    a.mult = std::move(mult);
    a.unit = std::move(unit);
    a.parity = std::move(parity);
    if (a.mult.size() != a.dim || a.unit.size() != a.dim)
        throw InvariantViolation("algebra data sizes disagree");
    if (!a.parity.empty() && a.parity.size() != a.dim)
        throw InvariantViolation("parity vector has the wrong length");
    for (const auto& m : a.mult)
        if (m.rows != a.dim || m.cols != a.dim)
            throw InvariantViolation("multiplication matrix has the wrong shape");

    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) {
            bool flip = !a.parity.empty() && (a.parity[i] & 1) && (a.parity[j] & 1);
            for (size_t r = 0; r < a.dim; ++r) {
                auto lhs = a.mult[i].at(r, j);
                auto rhs = a.mult[j].at(r, i);
                if (flip) rhs = k.neg(rhs);
                if (!k.eq(lhs, rhs)) throw InvariantViolation("product is not commutative");
            }
        }

    auto u = alg_mult_by(k, a, a.unit);
    if (!mat_eq(k, u, mat_identity(k, a.dim)))
        throw InvariantViolation("unit vector does not act as identity");

    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) {
            /* multiplication by b_i b_j must equal the composite; the
             * structure matrices are typically sparse, so skip zeros */
            auto composite = mat_zero(k, a.dim, a.dim);
            for (size_t c = 0; c < a.dim; ++c)
                for (size_t l = 0; l < a.dim; ++l) {
                    const auto& y = a.mult[j].at(l, c);
                    if (k.is_zero(y)) continue;
                    for (size_t r = 0; r < a.dim; ++r) {
                        const auto& x = a.mult[i].at(r, l);
                        if (k.is_zero(x)) continue;
                        composite.at(r, c) = k.add(composite.at(r, c), k.mul(x, y));
                    }
                }
            auto direct = mat_zero(k, a.dim, a.dim);
            for (size_t l = 0; l < a.dim; ++l) {
                const auto& c = a.mult[i].at(l, j);
                if (k.is_zero(c)) continue;
                for (size_t r = 0; r < a.dim; ++r)
                    for (size_t s = 0; s < a.dim; ++s) {
                        const auto& y = a.mult[l].at(r, s);
                        if (k.is_zero(y)) continue;
                        direct.at(r, s) = k.add(direct.at(r, s), k.mul(c, y));
                    }
            }
            if (!mat_eq(k, composite, direct)) throw InvariantViolation("product is not associative");
        }
    return a;
}

namespace detail {

inline std::string expo_label(const Expo& e, const std::vector<std::string>& names) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace detail

template <class K>
struct QuotientData {
    ArtinAlgebra<K> algebra;
    std::vector<Expo> monomials;
    std::vector<AlgVec<K>> var_image; /* coordinates of each ambient variable */
};

/* the quotient by a zero-dimensional ideal as an algebra on the standard
 * monomials */
template <class K>
QuotientData<K> from_quotient_data(const K& k, const GroebnerBasis<K>& gb,
                                   const std::vector<std::string>& names = {}) {
    if (gb.is_unit()) throw NotZeroDimensional("the quotient ring is zero");
    auto mons = quotient_basis(k, gb);
    size_t d = mons.size();
    std::map<Expo, size_t> index;
    for (size_t i = 0; i < d; ++i) index[mons[i]] = i;

    std::vector<std::string> vnames = names;
    if (vnames.empty())
        for (size_t i = 0; i < gb.n_vars; ++i) vnames.push_back("z" + std::to_string(i + 1));

    auto coords_of = [&](const LaurentPoly<K>& f) {
        AlgVec<K> v(d, k.zero());
        for (const auto& [e, c] : f.terms) {
            auto it = index.find(e);
            if (it == index.end()) throw InvariantViolation("normal form left the staircase");
            v[it->second] = c;
        }
        return v;
    };

    QuotientData<K> out;
    out.monomials = mons;
    std::vector<std::string> labels;
    for (const auto& m : mons) labels.push_back(detail::expo_label(m, vnames));

    std::vector<Mat<K>> mult;
    for (size_t i = 0; i < d; ++i) {
        auto mi = mat_zero(k, d, d);
        for (size_t j = 0; j < d; ++j) {
            auto prod = lp_term(k, gb.n_vars, expo_add(mons[i], mons[j]), k.one());
            auto v = coords_of(normal_form(k, prod, gb));
            for (size_t r = 0; r < d; ++r) mi.at(r, j) = v[r];
        }
        mult.push_back(std::move(mi));
    }

    AlgVec<K> unit(d, k.zero());
    unit[index.at(Expo(gb.n_vars, 0))] = k.one();
    out.algebra = make_algebra(k, std::move(labels), std::move(mult), std::move(unit));

    for (size_t v = 0; v < gb.n_vars; ++v) {
        Expo e(gb.n_vars, 0);
        e[v] = 1;
        out.var_image.push_back(coords_of(normal_form(k, lp_term(k, gb.n_vars, e, k.one()), gb)));
    }
    return out;
}

template <class K>
ArtinAlgebra<K> from_quotient(const K& k, const GroebnerBasis<K>& gb,
                              const std::vector<std::string>& names = {}) {
    return from_quotient_data(k, gb, names).algebra;
}

/* ------------------------------------------------------------------ */
/* local decomposition                                                  */

struct LocalFingerprint {
    size_t dim = 0;
    size_t residue_field_degree = 0;
    std::vector<size_t> radical_filtration; /* dims of rad^k / rad^{k+1} */

    bool operator==(const LocalFingerprint&) const = default;
    bool operator<(const LocalFingerprint& o) const {
        if (dim != o.dim) return dim < o.dim;
        if (residue_field_degree != o.residue_field_degree)
            return residue_field_degree < o.residue_field_degree;
        return radical_filtration < o.radical_filtration;
    }
};

struct Fingerprint {
    size_t dim = 0;
    std::vector<LocalFingerprint> factors; /* sorted */
    bool operator==(const Fingerprint&) const = default;
};

template <class K>
struct LocalFactor {
    AlgVec<K> idempotent;
    size_t dim = 0;
    size_t residue_field_degree = 0;
    size_t nilpotency = 0; /* least N with rad^N = 0, counting rad^0 as the factor */
    LocalFingerprint fingerprint;
};

namespace detail {

/* basis of the column span, taken from the original columns */
template <class K>
Mat<K> column_space(const K& k, const Mat<K>& m) {
    auto r = m;
    auto pivots = mat_rref(k, r);
    auto out = mat_zero(k, m.rows, pivots.size());
    for (size_t j = 0; j < pivots.size(); ++j)
        for (size_t i = 0; i < m.rows; ++i) out.at(i, j) = m.at(i, pivots[j]);
    return out;
}

/* express an endomorphism on a subspace through a basis of it */
template <class K>
Mat<K> restrict_operator(const K& k, const Mat<K>& basis, const Mat<K>& t) {
    auto rhs = mat_mul(k, t, basis);
    size_t n = basis.rows, f = basis.cols;
    auto aug = mat_zero(k, n, f + rhs.cols);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < f; ++j) aug.at(i, j) = basis.at(i, j);
        for (size_t j = 0; j < rhs.cols; ++j) aug.at(i, f + j) = rhs.at(i, j);
    }
    auto pivots = mat_rref(k, aug);
    auto r = mat_zero(k, f, rhs.cols);
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
        if (pivots[pi] >= f) throw InvariantViolation("subspace is not invariant");
        for (size_t j = 0; j < rhs.cols; ++j) r.at(pivots[pi], j) = aug.at(pi, f + j);
    }
    return r;
}

/* g(b) * e inside the algebra, with b^0 read as e */
template <class K>
AlgVec<K> alg_poly_at(const K& k, const ArtinAlgebra<K>& a, const UniPoly<K>& g,
                      const Mat<K>& mult_b, const AlgVec<K>& e) {
    AlgVec<K> r(a.dim, k.zero());
    for (size_t j = g.c.size(); j-- > 0;) {
        r = mat_apply(k, mult_b, r);
        for (size_t i = 0; i < a.dim; ++i) r[i] = k.add(r[i], k.mul(g.c[j], e[i]));
    }
    return r;
}

template <class K>
struct FactorScratch {
    AlgVec<K> e;
    Mat<K> basis; /* columns span e*A */
};

template <class K>
FactorScratch<K> factor_scratch(const K& k, const ArtinAlgebra<K>& a, const AlgVec<K>& e) {
    auto me = alg_mult_by(k, a, e);
    return FactorScratch<K>{e, column_space(k, me)};
}

}  // namespace detail

/* orthogonal idempotents refining the unit until every factor is local.
 * Splitting on basis elements is complete over perfect coefficient
 * fields: a non-local commutative algebra cannot be spanned by elements
 * whose minimal polynomials are all primary. */
template <class K>
std::vector<LocalFactor<K>> local_decomposition(const K& k, const ArtinAlgebra<K>& a) {
    std::vector<detail::FactorScratch<K>> factors;
    if (a.dim == 0) return {};
    factors.push_back(detail::factor_scratch(k, a, a.unit));

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t fi = 0; fi < factors.size() && !changed; ++fi) {
            for (size_t b = 0; b < a.dim && !changed; ++b) {
                const auto& f = factors[fi];
                auto rb = detail::restrict_operator(k, f.basis, a.mult[b]);
                auto mp = minimal_polynomial(k, rb);
                auto facs = factor_univariate(k, mp);
                if (facs.size() < 2) continue;

                std::vector<detail::FactorScratch<K>> pieces;
                auto mb = a.mult[b];
                for (const auto& qf : facs) {
                    /* 1 = u q^a + v rest; the piece idempotent is (v rest)(b) e */
                    auto qa = up_const(k, k.one());
                    for (size_t t = 0; t < qf.mult; ++t) qa = up_mul(k, qa, qf.poly);
                    auto rest = up_divmod(k, mp, qa).first;
                    auto [g, u, v] = up_xgcd(k, qa, rest);
                    if (g.degree() != 0) throw InvariantViolation("minimal polynomial split is not coprime");
                    auto proj = up_mul(k, v, rest);
                    auto ei = detail::alg_poly_at(k, a, proj, mb, f.e);
                    if (alg_vec_is_zero(k, ei)) throw InvariantViolation("zero projection idempotent");
                    if (!alg_vec_eq(k, alg_mul(k, a, ei, ei), ei))
                        throw InvariantViolation("projection is not idempotent");
                    pieces.push_back(detail::factor_scratch(k, a, ei));
                }
                factors.erase(factors.begin() + static_cast<long>(fi));
                for (auto& p : pieces) factors.push_back(std::move(p));
                changed = true;
            }
        }
    }

    std::vector<LocalFactor<K>> out;
    for (const auto& f : factors) {
        LocalFactor<K> lf;
        lf.idempotent = f.e;
        lf.dim = f.basis.cols;

        /* radical = ideal generated by the squarefree parts of the basis
         * minimal polynomials, evaluated on the factor (perfect field) */
        std::vector<AlgVec<K>> rad_gens;
        for (size_t b = 0; b < a.dim; ++b) {
            auto rb = detail::restrict_operator(k, f.basis, a.mult[b]);
            auto mp = minimal_polynomial(k, rb);
            auto sf = squarefree_part(k, mp);
            auto nb = detail::alg_poly_at(k, a, sf, a.mult[b], f.e);
            if (!alg_vec_is_zero(k, nb)) rad_gens.push_back(std::move(nb));
        }
        auto span_of = [&](const std::vector<AlgVec<K>>& vecs) {
            auto m = mat_zero(k, a.dim, vecs.size());
            for (size_t j = 0; j < vecs.size(); ++j)
                for (size_t i = 0; i < a.dim; ++i) m.at(i, j) = vecs[j][i];
            return detail::column_space(k, m);
        };
        std::vector<AlgVec<K>> rad_vecs;
        for (const auto& g : rad_gens) {
            auto mg = alg_mult_by(k, a, g);
            for (size_t j = 0; j < f.basis.cols; ++j) {
                AlgVec<K> col(a.dim, k.zero());
                for (size_t i = 0; i < a.dim; ++i) col[i] = f.basis.at(i, j);
                rad_vecs.push_back(mat_apply(k, mg, col));
            }
        }
        auto rad_basis = span_of(rad_vecs);
        lf.residue_field_degree = lf.dim - rad_basis.cols;

        /* powers of the radical until they vanish */
        std::vector<size_t> power_dims{lf.dim};
        auto cur = rad_basis;
        while (cur.cols > 0) {
            power_dims.push_back(cur.cols);
            std::vector<AlgVec<K>> next;
            for (size_t rj = 0; rj < rad_basis.cols; ++rj) {
                AlgVec<K> rv(a.dim, k.zero());
                for (size_t i = 0; i < a.dim; ++i) rv[i] = rad_basis.at(i, rj);
                auto mr = alg_mult_by(k, a, rv);
                for (size_t cj = 0; cj < cur.cols; ++cj) {
                    AlgVec<K> cv(a.dim, k.zero());
                    for (size_t i = 0; i < a.dim; ++i) cv[i] = cur.at(i, cj);
                    next.push_back(mat_apply(k, mr, cv));
                }
            }
            cur = span_of(next);
        }
        lf.nilpotency = power_dims.size();
        for (size_t j = 0; j + 1 < power_dims.size(); ++j)
            lf.fingerprint.radical_filtration.push_back(power_dims[j] - power_dims[j + 1]);
        if (!power_dims.empty())
            lf.fingerprint.radical_filtration.push_back(power_dims.back());
        lf.fingerprint.dim = lf.dim;
        lf.fingerprint.residue_field_degree = lf.residue_field_degree;
        out.push_back(std::move(lf));
    }

    std::sort(out.begin(), out.end(), [&](const LocalFactor<K>& x, const LocalFactor<K>& y) {
        if (x.dim != y.dim) return x.dim < y.dim;
        for (size_t i = 0; i < x.idempotent.size(); ++i) {
            int c = k.cmp(x.idempotent[i], y.idempotent[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

template <class K>
Fingerprint fingerprint(const K& k, const ArtinAlgebra<K>& a) {
    Fingerprint fp;
    fp.dim = a.dim;
    for (const auto& f : local_decomposition(k, a)) fp.factors.push_back(f.fingerprint);
    std::sort(fp.factors.begin(), fp.factors.end());
    return fp;
}

/* ------------------------------------------------------------------ */
/* pairings and eigenspaces                                             */

template <class K>
bool pairing_orthogonal(const K& k, const ArtinAlgebra<K>& a, const Mat<K>& form,
                        const std::vector<LocalFactor<K>>& factors) {
    if (form.rows != a.dim || form.cols != a.dim)
        throw InvariantViolation("pairing matrix has the wrong shape");
    if (k.is_zero(mat_det(k, form))) throw InvariantViolation("pairing is degenerate");
    std::vector<Mat<K>> bases;
    for (const auto& f : factors) bases.push_back(detail::column_space(k, alg_mult_by(k, a, f.idempotent)));
    for (size_t i = 0; i < bases.size(); ++i)
        for (size_t j = 0; j < bases.size(); ++j) {
            if (i == j) continue;
            auto g = mat_mul(k, mat_transpose(k, bases[i]), mat_mul(k, form, bases[j]));
            if (!mat_is_zero(k, g)) return false;
        }
    return true;
}

template <class K>
struct EigenPiece {
    UniPoly<K> factor; /* irreducible piece of the minimal polynomial */
    size_t mult = 0;
    size_t dim = 0;
    Mat<K> space; /* columns span the generalised eigenspace */
};

template <class K>
std::vector<EigenPiece<K>> eigen_split(const K& k, const ArtinAlgebra<K>& a, const AlgVec<K>& b) {
    auto t = alg_mult_by(k, a, b);
    auto mp = minimal_polynomial(k, t);
    auto facs = factor_univariate(k, mp);
    std::vector<EigenPiece<K>> out;
    for (const auto& qf : facs) {
        auto qa = up_const(k, k.one());
        for (size_t i = 0; i < qf.mult; ++i) qa = up_mul(k, qa, qf.poly);
        auto ns = mat_nullspace(k, up_eval_mat(k, qa, t));
        out.push_back(EigenPiece<K>{qf.poly, qf.mult, ns.cols, std::move(ns)});
    }
    return out;
}

}  // namespace superpot

#endif
