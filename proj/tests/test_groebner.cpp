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
#include "superpot/groebner.hpp"

using namespace superpot;

namespace {

Rationals kq;

LaurentPoly<Rationals> term(const Expo& e, long c) { return lp_term(kq, e.size(), e, kq.from_int(c)); }

LaurentPoly<Rationals> sum(std::vector<LaurentPoly<Rationals>> ts) {
    auto r = lp_zero(kq, ts.empty() ? 0 : ts[0].n_vars);
    for (auto& t : ts) r = lp_add(kq, r, t);
    return r;
}

}  // namespace

TEST_CASE("monomial orders") {
    auto grevlex = MonomialOrder::grevlex();
    /* x^2 y vs x y^2: same degree, grevlex compares the last exponent reversed */
    CHECK(grevlex.cmp({2, 1}, {1, 2}) > 0);
    CHECK(grevlex.cmp({1, 1}, {2, 0}) < 0);
    CHECK(grevlex.cmp({0, 3}, {2, 0}) > 0);

    auto lex = MonomialOrder::lex();
    CHECK(lex.cmp({1, 0}, {0, 5}) > 0);

    auto blk = MonomialOrder::block_elim(1);
    /* first variable dominates, remaining block ordered among themselves */
    CHECK(blk.cmp({1, 0, 0}, {0, 7, 7}) > 0);
    CHECK(blk.cmp({1, 0, 1}, {1, 1, 0}) < 0);
}

TEST_CASE("normal form and containment") {
    /* I = <x^2 - y, y^2 - x> */
    auto f1 = sum({term({2, 0}, 1), term({0, 1}, -1)});
    auto f2 = sum({term({0, 2}, 1), term({1, 0}, -1)});
    auto gb = buchberger(kq, make_ideal(kq, 2, {f1, f2}), MonomialOrder::grevlex());
    CHECK(gb_spoly_audit(kq, gb));

    /* x^4 - x is in the ideal: x^4 - x = (x^2+y)(x^2-y) + (y^2 - x) */
    auto probe = sum({term({4, 0}, 1), term({1, 0}, -1)});
    CHECK(gb_contains(kq, gb, probe));
    CHECK_FALSE(gb_contains(kq, gb, term({1, 0}, 1)));

    auto nf = normal_form(kq, probe, gb);
    CHECK(nf.is_zero());
}

TEST_CASE("unit ideals and dimensions") {
    auto one = lp_one(kq, 2);
    auto gb1 = buchberger(kq, make_ideal(kq, 2, {one}), MonomialOrder::grevlex());
    CHECK(gb1.is_unit());
    CHECK(ideal_dimension(kq, gb1) == -1);

    auto x = term({1, 0}, 1);
    auto gbx = buchberger(kq, make_ideal(kq, 2, {x}), MonomialOrder::grevlex());
    CHECK(ideal_dimension(kq, gbx) == 1);

    auto y = term({0, 1}, 1);
    auto gbxy = buchberger(kq, make_ideal(kq, 2, {x, y}), MonomialOrder::grevlex());
    CHECK(ideal_dimension(kq, gbxy) == 0);

    auto empty = buchberger(kq, make_ideal(kq, 2, {}), MonomialOrder::grevlex());
    CHECK(ideal_dimension(kq, empty) == 2);
}

TEST_CASE("quotient bases") {
    /* I = <x^2 - 1, y - x>: two points, basis {1, x} */
    auto f1 = sum({term({2, 0}, 1), term({0, 0}, -1)});
    auto f2 = sum({term({0, 1}, 1), term({1, 0}, -1)});
    auto gb = buchberger(kq, make_ideal(kq, 2, {f1, f2}), MonomialOrder::grevlex());
    /* x reduces to y, so the staircase under grevlex is {1, y} */
    auto basis = quotient_basis(kq, gb);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == Expo{0, 0});
    CHECK(basis[1] == Expo{0, 1});

    auto unit = buchberger(kq, make_ideal(kq, 2, {lp_one(kq, 2)}), MonomialOrder::grevlex());
    CHECK(quotient_basis(kq, unit).empty());

    auto line = buchberger(kq, make_ideal(kq, 2, {term({1, 0}, 1)}), MonomialOrder::grevlex());
    CHECK_THROWS_AS(quotient_basis(kq, line), NotZeroDimensional);
}

TEST_CASE("elimination and saturation") {
    /* saturate <x^2 (x-1)> at x: the origin component drops */
    auto f = sum({term({3}, 1), term({2}, -1)});
    auto sat = saturate(kq, make_ideal(kq, 1, {f}), term({1}, 1));
    auto want = buchberger(kq, make_ideal(kq, 1, {sum({term({1}, 1), term({0}, -1)})}),
                           MonomialOrder::grevlex());
    CHECK(ideal_equal(kq, sat, want));

    /* <x^2 y, x y^2> saturated at xy is everything */
    auto g1 = term({2, 1}, 1);
    auto g2 = term({1, 2}, 1);
    auto sat2 = saturate(kq, make_ideal(kq, 2, {g1, g2}), term({1, 1}, 1));
    CHECK(sat2.is_unit());
}

TEST_CASE("intersection and colon") {
    auto x = term({1, 0}, 1);
    auto y = term({0, 1}, 1);
    auto ix = make_ideal(kq, 2, {x});
    auto iy = make_ideal(kq, 2, {y});
    auto meet = buchberger(kq, PolyIdeal<Rationals>{2, intersect_ideals(kq, ix, iy)},
                           MonomialOrder::grevlex());
    auto want = buchberger(kq, make_ideal(kq, 2, {term({1, 1}, 1)}), MonomialOrder::grevlex());
    CHECK(ideal_equal(kq, meet, want));

    /* (xy : x) = y */
    auto ixy = make_ideal(kq, 2, {term({1, 1}, 1)});
    auto col = colon(kq, ixy, x);
    auto wy = buchberger(kq, iy, MonomialOrder::grevlex());
    CHECK(ideal_equal(kq, col, wy));
}

TEST_CASE("saturation at an ideal") {
    auto x = term({1, 0}, 1);
    auto y = term({0, 1}, 1);
    auto m = make_ideal(kq, 2, {x, y});

    /* embedded point on a line: <x^2, xy> = x * <x, y>, saturating at the
     * origin leaves the line <x> */
    auto i1 = make_ideal(kq, 2, {term({2, 0}, 1), term({1, 1}, 1)});
    auto s1 = saturate_at_ideal(kq, i1, m);
    auto wantx = buchberger(kq, make_ideal(kq, 2, {x}), MonomialOrder::grevlex());
    CHECK(ideal_equal(kq, s1, wantx));

    /* a line through the origin is untouched: iterating generator
     * saturations would wrongly erase it */
    auto i2 = make_ideal(kq, 2, {x});
    auto s2 = saturate_at_ideal(kq, i2, m);
    CHECK(ideal_equal(kq, s2, wantx));

    /* isolated origin only: saturation gives the unit ideal */
    auto i3 = make_ideal(kq, 2, {term({2, 0}, 1), term({0, 3}, 1)});
    auto s3 = saturate_at_ideal(kq, i3, m);
    CHECK(s3.is_unit());
}

TEST_CASE("ideal powers") {
    auto x = term({1, 0}, 1);
    auto y = term({0, 1}, 1);
    auto m = make_ideal(kq, 2, {x, y});
    auto m2 = ideal_power(kq, m, 2);
    auto want = buchberger(kq,
                           make_ideal(kq, 2, {term({2, 0}, 1), term({1, 1}, 1), term({0, 2}, 1)}),
                           MonomialOrder::grevlex());
    CHECK(ideal_equal(kq, buchberger(kq, m2, MonomialOrder::grevlex()), want));

    auto m0 = ideal_power(kq, m, 0);
    CHECK(buchberger(kq, m0, MonomialOrder::grevlex()).is_unit());
}

TEST_CASE("degree cap") {
    /* this pair produces a new degree two generator from its first
     * S-polynomial, which a cap of one must refuse */
    auto f1 = sum({term({3, 0}, 1), term({1, 1}, -2)});
    auto f2 = sum({term({2, 1}, 1), term({0, 2}, -2), term({1, 0}, 1)});
    CHECK_THROWS_AS(
        buchberger(kq, make_ideal(kq, 2, {f1, f2}), MonomialOrder::grevlex(), 1),
        DegreeExplosion);
    /* and with room to work the basis closes up fine */
    auto gb = buchberger(kq, make_ideal(kq, 2, {f1, f2}), MonomialOrder::grevlex());
    CHECK(gb_spoly_audit(kq, gb));
}

TEST_CASE("groebner over a prime field") {
    PrimeField k5(5);
    auto mk = [&](const Expo& e, long c) { return lp_term(k5, 2, e, k5.from_int(c)); };
    auto f1 = lp_add(k5, mk({2, 0}, 1), mk({0, 0}, -1));
    auto f2 = lp_add(k5, mk({0, 1}, 1), mk({1, 0}, -1));
    auto gb = buchberger(k5, make_ideal(k5, 2, {f1, f2}), MonomialOrder::grevlex());
    CHECK(gb_spoly_audit(k5, gb));
    auto basis = quotient_basis(k5, gb);
    CHECK(basis.size() == 2);
}

TEST_CASE("negative exponents are rejected in ideals") {
    CHECK_THROWS_AS(make_ideal(kq, 1, {term({-1}, 1)}), ParseError);
}
