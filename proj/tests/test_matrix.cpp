// Copyright 2026 The superpot developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "doctest.h"
#include "superpot/matrix.hpp"

using namespace superpot;

namespace {

template <class K>
Mat<K> from_rows(const K& k, std::vector<std::vector<long>> rows) {
    Mat<K> m;
    m.rows = rows.size();
    m.cols = rows.empty() ? 0 : rows[0].size();
    for (auto& r : rows)
        for (long v : r) m.a.push_back(k.from_int(v));
    return m;
}

}  // namespace

TEST_CASE("rank nullspace solve inverse over Q") {
    Rationals k;
    auto m = from_rows(k, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(mat_rank(k, m) == 2);

    auto ns = mat_nullspace(k, m);
    REQUIRE(ns.cols == 1);
    auto v = std::vector<mpq_class>{ns.at(0, 0), ns.at(1, 0), ns.at(2, 0)};
    auto mv = mat_apply(k, m, v);
    for (const auto& x : mv) CHECK(k.is_zero(x));

    auto rhs = std::vector<mpq_class>{k.from_int(6), k.from_int(15), k.from_int(24)};
    auto sol = mat_solve(k, m, rhs);
    REQUIRE(sol.has_value());
    auto chk = mat_apply(k, m, *sol);
    for (size_t i = 0; i < 3; ++i) CHECK(k.eq(chk[i], rhs[i]));

    auto bad = std::vector<mpq_class>{k.one(), k.zero(), k.zero()};
    CHECK_FALSE(mat_solve(k, m, bad).has_value());

    CHECK_FALSE(mat_inverse(k, m).has_value());
    auto id = mat_identity(k, 3);
    auto g = from_rows(k, {{2, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    auto gi = mat_inverse(k, g);
    REQUIRE(gi.has_value());
    CHECK(mat_eq(k, mat_mul(k, g, *gi), id));
    CHECK(mat_eq(k, mat_pow(k, g, -2), mat_mul(k, *gi, *gi)));
}

TEST_CASE("determinants") {
    Rationals k;
    CHECK(k.eq(mat_det(k, from_rows(k, {{2, 1}, {1, 1}})), k.one()));
    CHECK(k.eq(mat_det(k, from_rows(k, {{1, 2}, {2, 4}})), k.zero()));
    PrimeField k7(7);
    CHECK(mat_det(k7, from_rows(k7, {{0, 1}, {1, 0}})) == k7.from_int(-1));
}

TEST_CASE("minimal polynomials") {
    Rationals k;
    /* companion matrix of x^3 - 1 */
    auto c = from_rows(k, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    auto mp = minimal_polynomial(k, c);
    CHECK(up_eq(k, mp, up_from_ints(k, {-1, 0, 0, 1})));

    auto d = from_rows(k, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    auto mpd = minimal_polynomial(k, d);
    CHECK(up_eq(k, mpd, up_from_ints(k, {2, -3, 1})));

    auto n = from_rows(k, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK(up_eq(k, minimal_polynomial(k, n), up_from_ints(k, {0, 0, 1})));

    CHECK(mat_is_zero(k, up_eval_mat(k, mp, c)));
    CHECK(mat_is_zero(k, up_eval_mat(k, mpd, d)));
}

TEST_CASE("sparse rank agrees with dense rank") {
    PrimeField k(5);
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 5; ++trial) {
        size_t rows = 30, cols = 40;
        auto dense = mat_zero(k, rows, cols);
        auto sparse = smat_zero(k, rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                if (rng() % 5 == 0) {
                    auto v = k.from_int(static_cast<long>(1 + rng() % 4));
                    dense.at(i, j) = v;
                    smat_set(k, sparse, i, j, v);
                }
        CHECK(smat_rank(k, sparse) == mat_rank(k, dense));
    }

    Rationals kq;
    auto dq = mat_zero(kq, 4, 4);
    auto sq = smat_zero(kq, 4, 4);
    std::vector<std::array<long, 3>> entries = {
        {0, 0, 1}, {0, 3, 2}, {1, 1, 3}, {2, 0, 2}, {2, 3, 4}, {3, 2, 5}};
    for (auto [i, j, v] : entries) {
        dq.at(i, j) = kq.from_int(v);
        smat_set(kq, sq, i, j, kq.from_int(v));
    }
    /* rows 0 and 2 are proportional */
    CHECK(mat_rank(kq, dq) == 3);
    CHECK(smat_rank(kq, sq) == 3);
}

TEST_CASE("sparse row operations") {
    PrimeField k(5);
    std::vector<std::pair<uint32_t, uint64_t>> a = {{0, 1}, {2, 3}};
    std::vector<std::pair<uint32_t, uint64_t>> b = {{0, 3}, {1, 1}, {2, 4}};
    srow_axpy(k, a, k.from_int(3), b);          /* a += 3*b */
    /* 1+9=10=0 drops, 0+3=3, 3+12=15=0 drops */
    REQUIRE(a.size() == 1);
    CHECK(a[0].first == 1);
    CHECK(a[0].second == 3);
}
