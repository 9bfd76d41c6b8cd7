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

#include "doctest.h"
#include "superpot/koszul.hpp"

using namespace superpot;

namespace {

Rationals kq;

template <class K>
LaurentPoly<K> cliffordn(const K& k, size_t n) {
    auto w = lp_zero(k, n);
    for (size_t i = 0; i < n; ++i) {
        Expo e(n, 0);
        e[i] = 1;
        w = lp_add(k, w, lp_term(k, n, e, k.one()));
    }
    return lp_add(k, w, lp_term(k, n, Expo(n, -1), k.one()));
}

template <class K>
LaurentPoly<K> bl4(const K& k) {
    auto f1 = lp_one(k, 2);
    f1 = lp_add(k, f1, lp_term(k, 2, {1, 0}, k.one()));
    f1 = lp_add(k, f1, lp_term(k, 2, {0, 1}, k.one()));
    auto f2 = lp_add(k, lp_one(k, 2), lp_term(k, 2, {-1, 0}, k.one()));
    auto f3 = lp_add(k, lp_one(k, 2), lp_term(k, 2, {0, -1}, k.one()));
    auto w = lp_mul(k, lp_mul(k, f1, f2), f3);
    return lp_sub(k, w, lp_const(k, 2, k.from_int(3)));
}

template <class K>
LaurentPoly<K> quadric3(const K& k) {
    auto w = lp_term(k, 3, {1, 0, 0}, k.one());
    w = lp_add(k, w, lp_term(k, 3, {0, 1, 0}, k.one()));
    w = lp_add(k, w, lp_term(k, 3, {0, 0, 1}, k.one()));
    w = lp_add(k, w, lp_term(k, 3, {-1, -1, 0}, k.one()));
    w = lp_add(k, w, lp_term(k, 3, {0, -1, -1}, k.one()));
    return w;
}

template <class K>
LaurentPoly<K> cubicsurf(const K& k) {
    auto f1 = lp_one(k, 2);
    f1 = lp_add(k, f1, lp_term(k, 2, {1, 0}, k.one()));
    f1 = lp_add(k, f1, lp_term(k, 2, {0, 1}, k.one()));
    auto w = lp_mul_term(k, lp_pow(k, f1, 3), {-1, -1}, k.one());
    return lp_sub(k, w, lp_const(k, 2, k.from_int(6)));
}

template <class K>
LaurentPoly<K> pendulum(const K& k) {
    // z + 1/z in one variable
    return lp_add(k, lp_term(k, 1, {1}, k.one()), lp_term(k, 1, {-1}, k.one()));
}

template <class K>
TorusPoint<K> tp(const K& k, const std::vector<long>& v) {
    std::vector<typename K::Elem> c;
    c.reserve(v.size());
    for (long x : v) c.push_back(k.from_int(x));
    return make_torus_point(k, std::move(c));
}

// the quotient model S/I with the log-derivative classes as elements
template <class K>
KoszulComplex<K> quotient_complex(const K& k, const JacobianData<K>& jac) {
    auto qd = from_quotient_data(k, jac.saturated);
    std::vector<Mat<K>> var_mult;
    for (const auto& vi : qd.var_image) var_mult.push_back(alg_mult_by(k, qd.algebra, vi));
    std::vector<AlgVec<K>> els;
    for (const auto& g : jac.gens)
        els.push_back(detail::laurent_class(k, g, var_mult, qd.algebra.unit));
    return koszul_build(k, qd.algebra, std::move(els));
}

long euler(const std::vector<size_t>& dims) {
    long e = 0;
    long sign = 1;
    for (size_t d : dims) {
        e += sign * static_cast<long>(d);
        sign = -sign;
    }
    return e;
}

template <class K>
void check_regular_iff_isolated(const K& k, const LaurentPoly<K>& w) {
    auto jac = jacobian(k, w);
    if (jac.saturated.is_unit() || jac.dim != 0) return;
    auto pts = find_critical_points(k, jac, Strategy::ZeroDimEigen);
    REQUIRE(!pts.empty());
    for (const auto& cp : pts) {
        if (cp.coords) {
            bool reg = is_regular_sequence(k, jac, *cp.coords);
            CHECK(reg == (is_isolated(k, jac, *cp.coords) == Isolation::Isolated));
        } else {
            bool reg = is_regular_sequence(k, jac, *cp.maximal_ideal);
            CHECK(reg == (is_isolated(k, jac, *cp.maximal_ideal) == Isolation::Isolated));
        }
    }
}

}  // namespace

TEST_CASE("koszul complex on a univariate truncation") {
    auto gb = buchberger(kq, make_ideal(kq, 1, {lp_term(kq, 1, {3}, kq.one())}),
                         MonomialOrder::grevlex());
    auto qd = from_quotient_data(kq, gb);
    REQUIRE(qd.algebra.dim == 3);

    auto kc = koszul_build(kq, qd.algebra, {qd.var_image[0]});
    CHECK(kc.terms == std::vector<size_t>{3, 3});
    REQUIRE(kc.differentials.size() == 1);
    CHECK(mat_rank(kq, kc.differentials[0]) == 2);
    CHECK(cohomology_dims(kq, kc) == std::vector<size_t>{1, 1});

    // multiplication by z^2 drops the rank to 1
    auto z2 = alg_mul(kq, qd.algebra, qd.var_image[0], qd.var_image[0]);
    auto kc2 = koszul_build(kq, qd.algebra, {z2});
    auto dims2 = cohomology_dims(kq, kc2);
    CHECK(dims2 == std::vector<size_t>{2, 2});
    CHECK(euler(dims2) == 0);

    CHECK_THROWS_AS(koszul_build(kq, qd.algebra, {AlgVec<Rationals>(2, kq.zero())}),
                    DimensionMismatch);
}

TEST_CASE("construction on catalog quotients") {
    auto jc = jacobian(kq, cliffordn(kq, 2));
    auto kc = quotient_complex(kq, jc);
    CHECK(kc.terms == std::vector<size_t>{3, 6, 3});
    // the derivatives vanish in their own quotient, so cohomology = terms
    auto dims = cohomology_dims(kq, kc);
    CHECK(dims == std::vector<size_t>{3, 6, 3});
    CHECK(euler(dims) == 0);

    auto jq = jacobian(kq, quadric3(kq));
    auto kcq = quotient_complex(kq, jq);
    CHECK(kcq.terms == std::vector<size_t>{3, 9, 9, 3});
    CHECK(euler(cohomology_dims(kq, kcq)) == 0);
}

TEST_CASE("regular sequence certificates") {
    auto j1 = jacobian(kq, pendulum(kq));
    CHECK(is_regular_sequence(kq, j1, tp(kq, {1})));

    PrimeField k3(3);
    CHECK(is_regular_sequence(k3, jacobian(k3, pendulum(k3)), tp(k3, {1})));

    auto jc = jacobian(kq, cliffordn(kq, 2));
    CHECK(is_regular_sequence(kq, jc, tp(kq, {1, 1})));
    CHECK_THROWS_AS(is_regular_sequence(kq, jc, tp(kq, {2, 2})), NotCritical);

    auto jq = jacobian(kq, quadric3(kq));
    auto pts = find_critical_points(kq, jq, Strategy::ZeroDimEigen);
    REQUIRE(pts.size() == 1);
    REQUIRE(pts[0].maximal_ideal.has_value());
    CHECK(is_regular_sequence(kq, jq, *pts[0].maximal_ideal));

    auto jcub = jacobian(kq, cubicsurf(kq));
    CHECK(is_regular_sequence(kq, jcub, tp(kq, {1, 1})));
    auto jcub3 = jacobian(k3, cubicsurf(k3));
    CHECK(!is_regular_sequence(k3, jcub3, tp(k3, {1, 1})));
}

TEST_CASE("regular exactly at the isolated points") {
    PrimeField k3(3), k5(5);
    check_regular_iff_isolated(kq, cliffordn(kq, 2));
    check_regular_iff_isolated(k3, cliffordn(k3, 2));
    check_regular_iff_isolated(k5, cliffordn(k5, 2));
    check_regular_iff_isolated(kq, bl4(kq));
    check_regular_iff_isolated(k5, bl4(k5));
    check_regular_iff_isolated(kq, quadric3(kq));
    check_regular_iff_isolated(k3, quadric3(k3));

    // positive-dimensional locus: the merged point is not regular
    auto jcub3 = jacobian(k3, cubicsurf(k3));
    CHECK(is_isolated(k3, jcub3, tp(k3, {1, 1})) == Isolation::NonIsolated);
    CHECK(!is_regular_sequence(k3, jcub3, tp(k3, {1, 1})));
}

TEST_CASE("exact local cohomology at isolated points") {
    auto jq = jacobian(kq, quadric3(kq));
    auto pts = find_critical_points(kq, jq, Strategy::ZeroDimEigen);
    REQUIRE(pts.size() == 1);
    auto lk = local_koszul(kq, jq, *pts[0].maximal_ideal);
    CHECK(lk.dims == std::vector<size_t>{3, 0, 0, 0});
    CHECK(lk.exact);
    CHECK(lk.stabilized);
    CHECK(lk.truncation == 0);

    auto jc = jacobian(kq, cliffordn(kq, 2));
    auto lkc = local_koszul(kq, jc, tp(kq, {1, 1}));
    CHECK(lkc.dims == std::vector<size_t>{1, 0, 0});
    CHECK(lkc.exact);
    for (const auto& cp : find_critical_points(kq, jc, Strategy::ZeroDimEigen)) {
        if (!cp.maximal_ideal) continue;
        auto closed = local_koszul(kq, jc, *cp.maximal_ideal);
        CHECK(closed.dims == std::vector<size_t>{2, 0, 0});
    }

    PrimeField k3(3), k5(5);
    auto jc3 = jacobian(k3, cliffordn(k3, 2));
    auto lk3 = local_koszul(k3, jc3, tp(k3, {1, 1}));
    CHECK(lk3.dims == std::vector<size_t>{3, 0, 0});
    CHECK(lk3.dims[0] == local_jacobian(k3, jc3, tp(k3, {1, 1})).dim);

    auto jb5 = jacobian(k5, bl4(k5));
    CHECK(local_koszul(k5, jb5, tp(k5, {3, 3})).dims == std::vector<size_t>{2, 0, 0});
    CHECK(local_koszul(k5, jb5, tp(k5, {4, 4})).dims == std::vector<size_t>{1, 0, 0});

    auto jcub = jacobian(kq, cubicsurf(kq));
    auto lcub = local_koszul(kq, jcub, tp(kq, {1, 1}));
    CHECK(lcub.exact);
    CHECK(lcub.dims[0] == local_jacobian(kq, jcub, tp(kq, {1, 1})).dim);
    CHECK(lcub.dims[1] == 0);
    CHECK(lcub.dims[2] == 0);
}

TEST_CASE("truncation sweep stabilizes to the exact answer") {
    // naive truncated cohomology keeps socle junk in top degree ...
    auto j1 = jacobian(kq, pendulum(kq));
    auto mx1 = detail::translated_max_ideal(kq, 1, tp(kq, {1}));
    auto tm = detail::truncated_model(kq, j1, mx1, 4, kDefaultDegreeCap);
    CHECK(cohomology_dims(kq, tm.kc) == std::vector<size_t>{1, 1});
    // ... while the stable image across two truncations removes it
    auto sw1 = local_koszul_sweep(kq, j1, mx1, 2, 8);
    CHECK(sw1.stabilized);
    CHECK(sw1.dims == std::vector<size_t>{1, 0});
    CHECK(sw1.dims == local_koszul(kq, j1, tp(kq, {1})).dims);

    PrimeField k3(3);
    auto jc3 = jacobian(k3, cliffordn(k3, 2));
    auto mx3 = detail::translated_max_ideal(k3, 2, tp(k3, {1, 1}));
    auto sw3 = local_koszul_sweep(k3, jc3, mx3, 2, 10);
    CHECK(sw3.stabilized);
    CHECK(sw3.dims == std::vector<size_t>{3, 0, 0});

    auto jq = jacobian(kq, quadric3(kq));
    auto pts = find_critical_points(kq, jq, Strategy::ZeroDimEigen);
    REQUIRE(pts.size() == 1);
    auto swq = local_koszul_sweep(kq, jq, ideal_from_gb(*pts[0].maximal_ideal), 2, 8);
    CHECK(swq.stabilized);
    CHECK(swq.dims == std::vector<size_t>{3, 0, 0, 0});
}

TEST_CASE("sweep reports honestly on a fat critical locus") {
    PrimeField k3(3);
    auto jcub3 = jacobian(k3, cubicsurf(k3));
    auto lk = local_koszul(k3, jcub3, tp(k3, {1, 1}), 8);
    CHECK(!lk.exact);
    CHECK(!lk.stabilized);
    CHECK(lk.truncation == 8);
    // the degree-zero stable dimension tracks the growing local quotient
    CHECK(lk.dims[0] > 3);
}
