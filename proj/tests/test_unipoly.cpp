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
#include "superpot/unipoly.hpp"

using namespace superpot;

TEST_CASE("division with remainder over Q") {
    Rationals k;
    auto a = up_from_ints(k, {-1, 0, 0, 1});        /* x^3 - 1 */
    auto b = up_from_ints(k, {-1, 1});              /* x - 1 */
    auto [q, r] = up_divmod(k, a, b);
    CHECK(up_eq(k, q, up_from_ints(k, {1, 1, 1})));
    CHECK(r.degree() == -1);
    CHECK(up_eq(k, up_add(k, up_mul(k, q, b), r), a));

    auto c = up_from_ints(k, {1, 2});               /* 2x + 1, non-monic divisor */
    auto [q2, r2] = up_divmod(k, a, c);
    CHECK(up_eq(k, up_add(k, up_mul(k, q2, c), r2), a));
    CHECK(r2.degree() < c.degree());
}

TEST_CASE("gcd and xgcd") {
    Rationals k;
    auto f = up_from_ints(k, {-1, 0, 1});           /* (x-1)(x+1) */
    auto g = up_from_ints(k, {-1, 1});
    CHECK(up_eq(k, up_gcd(k, f, g), g));

    PrimeField k5(5);
    auto a = up_from_ints(k5, {1, 1});
    auto b = up_from_ints(k5, {2, 1});
    auto [d, s, t] = up_xgcd(k5, a, b);
    CHECK(d.degree() == 0);
    CHECK(up_eq(k5, up_add(k5, up_mul(k5, s, a), up_mul(k5, t, b)), up_const(k5, k5.one())));

    auto l = up_lcm(k5, a, b);
    CHECK(up_eq(k5, l, up_mul(k5, a, b)));
}

TEST_CASE("derivative evaluation powmod inflate") {
    Rationals k;
    auto f = up_from_ints(k, {1, -2, 0, 5});        /* 5x^3 - 2x + 1 */
    auto df = up_derivative(k, f);
    CHECK(up_eq(k, df, up_from_ints(k, {-2, 0, 15})));
    CHECK(k.eq(up_eval(k, f, k.from_int(2)), k.from_int(37)));

    PrimeField k7(7);
    auto m = up_from_ints(k7, {1, 0, 1});           /* x^2 + 1 */
    auto x = up_monomial(k7, 1, k7.one());
    auto r = up_powmod(k7, x, mpz_class(49), m);    /* frobenius twice fixes F49 */
    CHECK(up_eq(k7, r, x));

    auto infl = up_inflate(k7, up_from_ints(k7, {1, 1}), 3);
    CHECK(up_eq(k7, infl, up_from_ints(k7, {1, 0, 0, 1})));
}

TEST_CASE("canonical ordering of polynomials") {
    Rationals k;
    auto a = up_from_ints(k, {1, 1});
    auto b = up_from_ints(k, {0, 0, 1});
    CHECK(up_cmp(k, a, b) < 0);
    CHECK(up_cmp(k, b, a) > 0);
    CHECK(up_cmp(k, a, a) == 0);

    auto c = up_from_ints(k, {2, 1});
    CHECK(up_cmp(k, a, c) != 0);
}

TEST_CASE("printing") {
    Rationals k;
    auto f = up_from_ints(k, {-1, 0, 1});
    auto s = up_to_string(k, f, "t");
    CHECK(s.find("t^2") != std::string::npos);
}
