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

#ifndef SUPERPOT_MATRIX_HPP
#define SUPERPOT_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "superpot/unipoly.hpp"

namespace superpot {

template <class K>
struct Mat {
    using Elem = typename K::Elem;
    size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    Elem& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Elem& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

template <class K>
Mat<K> mat_zero(const K& k, size_t r, size_t c) {
    Mat<K> m{r, c, {}};
    m.a.assign(r * c, k.zero());
    return m;
}

template <class K>
Mat<K> mat_identity(const K& k, size_t n) {
    auto m = mat_zero(k, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = k.one();
    return m;
}

template <class K>
Mat<K> mat_add(const K& k, const Mat<K>& x, const Mat<K>& y) {
    Mat<K> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = k.add(r.a[i], y.a[i]);
    return r;
}

template <class K>
Mat<K> mat_sub(const K& k, const Mat<K>& x, const Mat<K>& y) {
    Mat<K> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = k.sub(r.a[i], y.a[i]);
    return r;
}

template <class K>
Mat<K> mat_scale(const K& k, const Mat<K>& x, const typename K::Elem& s) {
    Mat<K> r = x;
    for (auto& v : r.a) v = k.mul(v, s);
    return r;
}

template <class K>
Mat<K> mat_mul(const K& k, const Mat<K>& x, const Mat<K>& y) {
    auto r = mat_zero(k, x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t l = 0; l < x.cols; ++l) {
            if (k.is_zero(x.at(i, l))) continue;
            for (size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = k.add(r.at(i, j), k.mul(x.at(i, l), y.at(l, j)));
        }
    return r;
}

template <class K>
std::vector<typename K::Elem> mat_apply(const K& k, const Mat<K>& x, const std::vector<typename K::Elem>& v) {
    std::vector<typename K::Elem> r(x.rows, k.zero());
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j)
            if (!k.is_zero(x.at(i, j))) r[i] = k.add(r[i], k.mul(x.at(i, j), v[j]));
    return r;
}

template <class K>
bool mat_eq(const K& k, const Mat<K>& x, const Mat<K>& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (!k.eq(x.a[i], y.a[i])) return false;
    return true;
}

template <class K>
bool mat_is_zero(const K& k, const Mat<K>& x) {
    for (const auto& v : x.a)
        if (!k.is_zero(v)) return false;
    return true;
}

template <class K>
Mat<K> mat_transpose(const K&, const Mat<K>& x) {
    Mat<K> r{x.cols, x.rows, std::vector<typename K::Elem>(x.a.size(), typename K::Elem())};
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

/* in-place reduced row echelon; returns pivot columns */
template <class K>
std::vector<size_t> mat_rref(const K& k, Mat<K>& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t sel = row;
        while (sel < m.rows && k.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        auto inv = k.inv(m.at(row, col));
        for (size_t j = col; j < m.cols; ++j) m.at(row, j) = k.mul(m.at(row, j), inv);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == row || k.is_zero(m.at(i, col))) continue;
            auto f = m.at(i, col);
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
size_t mat_rank(const K& k, Mat<K> m) {
    return mat_rref(k, m).size();
}

/* columns form a basis of the kernel */
template <class K>
Mat<K> mat_nullspace(const K& k, Mat<K> m) {
    size_t n = m.cols;
    auto pivots = mat_rref(k, m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    auto ns = mat_zero(k, n, free_cols.size());
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        size_t f = free_cols[fi];
        ns.at(f, fi) = k.one();
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            ns.at(pivots[pi], fi) = k.neg(m.at(pi, f));
    }
    return ns;
}

/* particular solution of m x = b, if consistent */
template <class K>
std::optional<std::vector<typename K::Elem>> mat_solve(const K& k, const Mat<K>& m,
                                                       const std::vector<typename K::Elem>& b) {
    auto aug = mat_zero(k, m.rows, m.cols + 1);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto pivots = mat_rref(k, aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<typename K::Elem> x(m.cols, k.zero());
    for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(pi, m.cols);
    return x;
}

template <class K>
std::optional<Mat<K>> mat_inverse(const K& k, const Mat<K>& m) {
    auto aug = mat_zero(k, m.rows, 2 * m.cols);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = k.one();
    }
    auto pivots = mat_rref(k, aug);
    if (pivots.size() != m.rows) return std::nullopt;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        if (pivots[pi] != pi) return std::nullopt;
    auto inv = mat_zero(k, m.rows, m.cols);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

template <class K>
Mat<K> mat_pow(const K& k, Mat<K> m, long e) {
    if (e < 0) {
        auto inv = mat_inverse(k, m);
        if (!inv) throw InvariantViolation("negative power of a singular matrix");
        m = *inv;
        e = -e;
    }
    auto r = mat_identity(k, m.rows);
    while (e) {
        if (e & 1) r = mat_mul(k, r, m);
        m = mat_mul(k, m, m);
        e >>= 1;
    }
    return r;
}

template <class K>
typename K::Elem mat_det(const K& k, Mat<K> m) {
    auto det = k.one();
    size_t n = m.rows;
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && k.is_zero(m.at(sel, col))) ++sel;
        if (sel == n) return k.zero();
        if (sel != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            det = k.neg(det);
        }
        det = k.mul(det, m.at(col, col));
        auto inv = k.inv(m.at(col, col));
        for (size_t i = col + 1; i < n; ++i) {
            if (k.is_zero(m.at(i, col))) continue;
            auto f = k.mul(m.at(i, col), inv);
            for (size_t j = col; j < n; ++j) m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(col, j)));
        }
    }
    return det;
}

/* monic minimal polynomial, as the lcm of the minimal polynomials of the
 * Krylov sequences started at each standard basis vector */
template <class K>
UniPoly<K> minimal_polynomial(const K& k, const Mat<K>& m) {
    if (m.rows != m.cols) throw InvariantViolation("minimal polynomial of a non-square matrix");
    size_t n = m.rows;
    UniPoly<K> result = up_const(k, k.one());
    for (size_t start = 0; start < n; ++start) {
        /* echelon of {v, Mv, ...} with coordinates back to the power basis */
        std::vector<std::vector<typename K::Elem>> rows, combos;
        std::vector<size_t> lead;
        std::vector<typename K::Elem> v(n, k.zero());
        v[start] = k.one();
        for (size_t step = 0; step <= n; ++step) {
            std::vector<typename K::Elem> combo(step + 1, k.zero());
            combo[step] = k.one();
            auto w = v;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (k.is_zero(w[lead[r]])) continue;
                auto f = w[lead[r]];
                for (size_t j = 0; j < n; ++j) w[j] = k.sub(w[j], k.mul(f, rows[r][j]));
                for (size_t j = 0; j < combos[r].size() && j < combo.size(); ++j)
                    combo[j] = k.sub(combo[j], k.mul(f, combos[r][j]));
            }
            size_t l = 0;
            while (l < n && k.is_zero(w[l])) ++l;
            if (l == n) {
                UniPoly<K> mp{std::move(combo)};
                up_normalize(k, mp);
                result = up_lcm(k, result, up_make_monic(k, mp));
                break;
            }
            auto inv = k.inv(w[l]);
            for (auto& x : w) x = k.mul(x, inv);
            for (auto& x : combo) x = k.mul(x, inv);
            rows.push_back(std::move(w));
            combos.push_back(std::move(combo));
            lead.push_back(l);
            v = mat_apply(k, m, v);
        }
    }
    return result;
}

/* evaluate a univariate polynomial at a square matrix */
template <class K>
Mat<K> up_eval_mat(const K& k, const UniPoly<K>& f, const Mat<K>& m) {
    auto r = mat_zero(k, m.rows, m.cols);
    for (size_t i = f.c.size(); i-- > 0;) {
        r = mat_mul(k, r, m);
        for (size_t d = 0; d < m.rows; ++d) r.at(d, d) = k.add(r.at(d, d), f.c[i]);
    }
    return r;
}

/* ------------------------------------------------------------------ */
/* sparse rows, used only for rank computations on large complexes     */

template <class K>
struct SMat {
    using Elem = typename K::Elem;
    /* each row holds (column, value) sorted by column */
    size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<uint32_t, Elem>>> row;
};

template <class K>
SMat<K> smat_zero(const K&, size_t r, size_t c) {
    SMat<K> m;
    m.rows = r;
    m.cols = c;
    m.row.resize(r);
    return m;
}

template <class K>
void smat_set(const K& k, SMat<K>& m, size_t i, size_t j, const typename K::Elem& v) {
    if (k.is_zero(v)) return;
    auto& r = m.row[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& e, size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j)
        it->second = v;
    else
        r.insert(it, {static_cast<uint32_t>(j), v});
}

template <class K>
void smat_add_at(const K& k, SMat<K>& m, size_t i, size_t j, const typename K::Elem& v) {
    if (k.is_zero(v)) return;
    auto& r = m.row[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& e, size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
        it->second = k.add(it->second, v);
        if (k.is_zero(it->second)) r.erase(it);
    } else {
        r.insert(it, {static_cast<uint32_t>(j), v});
    }
}

/* dst += f * src, sorted merge */
template <class K>
void srow_axpy(const K& k, std::vector<std::pair<uint32_t, typename K::Elem>>& dst,
               const typename K::Elem& f,
               const std::vector<std::pair<uint32_t, typename K::Elem>>& src) {
    std::vector<std::pair<uint32_t, typename K::Elem>> out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            auto v = k.mul(f, src[j].second);
            if (!k.is_zero(v)) out.emplace_back(src[j].first, std::move(v));
            ++j;
        } else {
            auto v = k.add(dst[i].second, k.mul(f, src[j].second));
            if (!k.is_zero(v)) out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

/* exact rank by elimination with structural (Markowitz-style) pivoting */
template <class K>
size_t smat_rank(const K& k, SMat<K> m) {
    size_t n_rows = m.rows;
    std::vector<char> done(n_rows, 0);
    std::vector<uint32_t> col_count(m.cols, 0);
    for (const auto& r : m.row)
        for (const auto& [c, v] : r) ++col_count[c];

    /* queue of (nnz, row); entries may be stale and are re-checked on pop */
    using QE = std::pair<size_t, size_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> q;
    for (size_t i = 0; i < n_rows; ++i)
        if (!m.row[i].empty()) q.emplace(m.row[i].size(), i);

    /* rows that currently contain a given column, lazily maintained */
    std::vector<std::vector<uint32_t>> col_rows(m.cols);
    for (size_t i = 0; i < n_rows; ++i)
        for (const auto& [c, v] : m.row[i]) col_rows[c].push_back(static_cast<uint32_t>(i));

    size_t rank = 0;
    while (!q.empty()) {
        auto [nnz, pr] = q.top();
        q.pop();
        if (done[pr] || m.row[pr].empty() || m.row[pr].size() != nnz) continue;

        /* pivot column: fewest active occupants, ties toward smaller index */
        uint32_t pc = m.row[pr][0].first;
        uint32_t best = col_count[pc];
        for (const auto& [c, v] : m.row[pr]) {
            if (col_count[c] < best) {
                best = col_count[c];
                pc = c;
            }
        }
        done[pr] = 1;
        ++rank;
        for (const auto& [c, v] : m.row[pr]) --col_count[c];

        auto piv_it = std::lower_bound(m.row[pr].begin(), m.row[pr].end(), pc,
                                       [](const auto& e, uint32_t c) { return e.first < c; });
        auto piv_inv = k.inv(piv_it->second);

        auto occupants = std::move(col_rows[pc]);
        col_rows[pc].clear();
        for (uint32_t ri : occupants) {
            if (done[ri] || ri == pr) continue;
            auto& r = m.row[ri];
            auto it = std::lower_bound(r.begin(), r.end(), pc,
                                       [](const auto& e, uint32_t c) { return e.first < c; });
            if (it == r.end() || it->first != pc) continue;
            auto f = k.neg(k.mul(it->second, piv_inv));
            for (const auto& [c, v] : r) --col_count[c];
            srow_axpy(k, r, f, m.row[pr]);
            for (const auto& [c, v] : r) {
                ++col_count[c];
                if (c != pc) col_rows[c].push_back(ri);
            }
            if (!r.empty()) q.emplace(r.size(), ri);
        }
    }
    return rank;
}

template <class K>
size_t smat_nnz(const SMat<K>& m) {
    size_t n = 0;
    for (const auto& r : m.row) n += r.size();
    return n;
}

}  // namespace superpot

#endif
