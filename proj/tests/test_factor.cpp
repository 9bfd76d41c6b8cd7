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
#include "superpot/factor.hpp"

using namespace superpot;

namespace {

/* multiply a factorization back together, checking monicity of each part */
template <class K>
UniPoly<K> reassemble(const K& k, const std::vector<UFactor<K>>& facs,
                      const typename K::Elem& lead) {
    auto r = up_const(k, lead);
    for (const auto& f : facs) {
        CHECK(k.is_one(f.poly.c.back()));
        for (int i = 0; i < f.mult; ++i) r = up_mul(k, r, f.poly);
    }
    return r;
}

}  // namespace

TEST_CASE("cube roots of unity over Q") {
    Rationals k;
    auto f = up_from_ints(k, {-1, 0, 0, 1});
    auto facs = factor_univariate(k, f);
    REQUIRE(facs.size() == 2);
    CHECK(up_eq(k, facs[0].poly, up_from_ints(k, {-1, 1})));
    CHECK(facs[0].mult == 1);
    CHECK(up_eq(k, facs[1].poly, up_from_ints(k, {1, 1, 1})));
    CHECK(facs[1].mult == 1);
}

TEST_CASE("y^3 - 4 over F5") {
    PrimeField k(5);
    auto f = up_from_ints(k, {-4, 0, 0, 1});
    auto facs = factor_univariate(k, f);
    REQUIRE(facs.size() == 2);
    CHECK(up_eq(k, facs[0].poly, up_from_ints(k, {1, 1})));
    CHECK(up_eq(k, facs[1].poly, up_from_ints(k, {1, 4, 1})));
    CHECK(up_eq(k, reassemble(k, facs, f.c.back()), f));
}

TEST_CASE("golden ratio minimal polynomial ramifies at 5") {
    PrimeField k(5);
    auto f = up_from_ints(k, {-1, -1, 1});          /* x^2 - x - 1 = (x+2)^2 mod 5 */
    auto facs = factor_univariate(k, f);
    REQUIRE(facs.size() == 1);
    CHECK(up_eq(k, facs[0].poly, up_from_ints(k, {2, 1})));
    CHECK(facs[0].mult == 2);
}

TEST_CASE("irreducible quartics over Q") {
    Rationals k;
    /* minimal polynomial of sqrt(2)+sqrt(3): splits mod every prime, so the
     * recombination step has real work to do */
    auto f = up_from_ints(k, {1, 0, -10, 0, 1});
    auto facs = factor_univariate(k, f);
    REQUIRE(facs.size() == 1);
    CHECK(facs[0].mult == 1);
    CHECK(facs[0].poly.degree() == 4);

    auto g = up_from_ints(k, {1, 0, 0, 0, 1});      /* x^4 + 1 */
    auto gfacs = factor_univariate(k, g);
    REQUIRE(gfacs.size() == 1);
    CHECK(gfacs[0].poly.degree() == 4);
}

TEST_CASE("mixed multiplicities over Q") {
    Rationals k;
    auto p1 = up_from_ints(k, {1, 0, 1});
    auto p2 = up_from_ints(k, {1, 1, 1});
    auto p3 = up_from_ints(k, {-3, 1});
    auto f = up_mul(k, up_mul(k, p1, p2), up_mul(k, p3, p3));
    f = up_scale(k, f, k.parse("7/3"));
    auto facs = factor_univariate(k, f);
    REQUIRE(facs.size() == 3);
    int total = 0;
    for (const auto& fa : facs) total += fa.mult * fa.poly.degree();
    CHECK(total == f.degree());
    CHECK(up_eq(k, reassemble(k, facs, f.c.back()), f));
}

TEST_CASE("full splitting over F7") {
    PrimeField k(7);
    auto f = up_from_ints(k, {-1, 0, 0, 0, 0, 0, 1});   /* x^6 - 1 */
    auto facs = factor_univariate(k, f);
    REQUIRE(facs.size() == 6);
    for (const auto& fa : facs) {
        CHECK(fa.poly.degree() == 1);
        CHECK(fa.mult == 1);
    }
}

TEST_CASE("characteristic two") {
    PrimeField k(2);
    auto f = up_from_ints(k, {0, 1, 0, 0, 1});      /* x^4 + x = x(x+1)(x^2+x+1) */
    auto facs = factor_univariate(k, f);
    REQUIRE(facs.size() == 3);
    CHECK(up_eq(k, reassemble(k, facs, k.one()), f));

    /* pth power: x^4 + x^2 + 1 = (x^2+x+1)^2 over F2 */
    auto g = up_from_ints(k, {1, 0, 1, 0, 1});
    auto gfacs = factor_univariate(k, g);
    REQUIRE(gfacs.size() == 1);
    CHECK(gfacs[0].mult == 2);
    CHECK(up_eq(k, gfacs[0].poly, up_from_ints(k, {1, 1, 1})));
}

TEST_CASE("inputs without content") {
    Rationals k;
    CHECK_THROWS_AS(factor_univariate(k, up_zero(k)), ZeroPolynomial);
    CHECK(factor_univariate(k, up_const(k, k.from_int(5))).empty());
}

TEST_CASE("squarefree part") {
    Rationals k;
    auto a = up_from_ints(k, {-1, 1});
    auto b = up_from_ints(k, {2, 1});
    auto f = up_mul(k, up_mul(k, a, a), b);
    auto sf = squarefree_part(k, f);
    CHECK(up_eq(k, sf, up_mul(k, a, b)));
}

TEST_CASE("random products round trip over F31") {
    PrimeField k(31);
    std::mt19937_64 rng(superpot_seed() ^ 0xfeedf00dull);
    for (int trial = 0; trial < 6; ++trial) {
        auto f = up_const(k, k.one());
        int deg = 0;
        for (int i = 0; i < 4; ++i) {
            std::vector<long> cs;
            int d = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < d; ++j) cs.push_back(static_cast<long>(rng() % 31));
            cs.push_back(1);
            f = up_mul(k, f, up_from_ints(k, cs));
            deg += d;
        }
        auto facs = factor_univariate(k, f);
        CHECK(up_eq(k, reassemble(k, facs, k.one()), f));
        int total = 0;
        for (const auto& fa : facs) total += fa.mult * fa.poly.degree();
        CHECK(total == deg);
    }
}
