/*
   Copyright 2026 the soag authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include "soag/quantum.hpp"

using namespace soag;

TEST_SUITE_BEGIN("quantum");

TEST_CASE("css parameters") {
    QuantumParams a = css_params(153, 3, 3, 81, InnerProductFlavor::euclidean);
    CHECK(a.N == 153);
    CHECK(a.k == 147);
    CHECK(a.d_lb == 3);
    CHECK(a.alphabet == 81);

    QuantumParams h = css_params(369, 3, 3, 9, InnerProductFlavor::hermitian);
    CHECK(h.k == 363);

    CHECK_THROWS_AS(css_params(4, 3, 1, 2, InnerProductFlavor::euclidean), Error);

    // generic purity needs the classical distance
    QuantumParams p = css_params(10, 2, 3, 4, InnerProductFlavor::euclidean, 5);
    CHECK(p.pure);  // d = 5 > k+1 = 3
}

TEST_CASE("one-point designed parameters") {
    QuantumParams b1 = one_point_qparams(6642, 81, 538, 6561);
    CHECK(b1.N == 6642);
    CHECK(b1.k == 5726);
    CHECK(b1.d_lb == 378);
    CHECK(b1.pure);

    QuantumParams b2 = one_point_qparams(15750, 250, 1955, 15625);
    CHECK(b2.k == 12338);
    CHECK(b2.d_lb == 1457);

    QuantumParams c2 = one_point_qparams(4941, 78, 313, 729);
    CHECK(c2.k == 4469);
    CHECK(c2.d_lb == 159);

    QuantumParams a2 = one_point_qparams(729, 36, 193, 81);
    CHECK(a2.k == 413);
    CHECK(a2.d_lb == 123);

    CHECK_THROWS_AS(one_point_qparams(100, 10, 18, 4), Error);   // m = 2g-2
    CHECK_THROWS_AS(one_point_qparams(100, 10, 100, 4), Error);  // m = N
}

TEST_CASE("purity") {
    CHECK(purity_check(4941, 78, 2508));
    CHECK_FALSE(purity_check(4941, 78, 2509));
    CHECK(purity_check(729, 36, 193));
    CHECK(purity_generic(5, 3));
    CHECK_FALSE(purity_generic(4, 3));
}

TEST_CASE("gv exceedance: small hand-checked case") {
    // LHS = C(4,1) * 3^0 = 4, RHS = (2^4 - 1)/3 = 5
    CHECK_FALSE(gv_check(2, 4, 2, 2));
    auto [lhs, rhs] = gv_sides_decimal(2, 4, 2, 2);
    CHECK(lhs == "4");
    CHECK(rhs == "5");
}

TEST_CASE("gv exceedance: paper-scale tuples") {
    CHECK(gv_check(81, 729, 413, 123));
    CHECK(gv_check(729, 6642, 5726, 378));
    CHECK(gv_check(729, 4941, 4469, 159) == false);
    // small hermitian examples asserted GV by the paper
    CHECK(gv_check(9, 153, 147, 3));
    CHECK(gv_check(9, 369, 363, 3));
}

TEST_CASE("gv preconditions and variants") {
    CHECK_THROWS_AS(gv_check(81, 10, 3, 4), Error);  // parity mismatch
    try {
        gv_check(81, 10, 0, 4);
        FAIL("expected Unsupported");
    } catch (const Error& e) {
        CHECK(e.code() == errc::unsupported);  // N even, k = 0
    }
    CHECK_THROWS_AS(gv_check(81, 10, 10, 4), Error);  // N > k violated
    CHECK_THROWS_AS(gv_check(1, 10, 2, 4), Error);
    // alternate form for N odd, k = 1:
    // q=2, N=5: RHS = 2^5+1 = 33; d=2 gives LHS = 5*(2+1) = 15 < 33,
    // d=3 adds C(5,2)*(2*3-3) = 30, so LHS = 45 >= 33
    CHECK_FALSE(gv_check(2, 5, 1, 2));
    CHECK(gv_check(2, 5, 1, 3));
}

TEST_CASE("gv left side strictly increases with d") {
    auto num_less = [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    };
    std::string prev = "0";
    for (long long d = 2; d <= 12; ++d) {
        auto [lhs, rhs] = gv_sides_decimal(9, 30, 10, d);
        CHECK(num_less(prev, lhs));
        prev = lhs;
    }
}

TEST_CASE("jin-xing bound") {
    JinXingBound jx = jin_xing_bound(161, 64);
    CHECK(jx.value == doctest::Approx(66.2785).epsilon(1e-4));
    CHECK(jx.floor_value == 66);
    CHECK_FALSE(jx.near_integer);

    CHECK_THROWS_AS(jin_xing_bound(100, 81), Error);  // odd q
    try {
        jin_xing_bound(100, 81);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_applicable);
    }

    CHECK(jin_xing_bound(2, 2).floor_value < 0);  // degenerate, negative value
}

TEST_SUITE_END();
