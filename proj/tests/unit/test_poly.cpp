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

#include <random>

#include "soag/poly.hpp"

using namespace soag;

TEST_SUITE_BEGIN("poly");

namespace {

Poly random_poly(const FieldPtr& f, int maxdeg, std::mt19937& rng) {
    std::uniform_int_distribution<int> ddist(0, maxdeg);
    std::uniform_int_distribution<felem> cdist(0, static_cast<felem>(f->order() - 1));
    std::vector<felem> c(static_cast<std::size_t>(ddist(rng)) + 1);
    for (auto& x : c) x = cdist(rng);
    return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("ring operations") {
    auto f3 = Field::make(3, 1);
    Poly a = Poly::from_ints(f3, {1, 1});            // z + 1
    Poly b = Poly::from_ints(f3, {2, 1});            // z + 2
    CHECK(a * b == Poly::from_ints(f3, {2, 0, 1}));  // z^2 + 2 (3z vanishes)
    auto f5 = Field::make(5, 1);
    Poly g = Poly::gcd(Poly::from_ints(f5, {-1, 0, 1}), Poly::from_ints(f5, {-1, 1}));
    CHECK(g == Poly::from_ints(f5, {-1, 1}));  // monic z - 1
    CHECK(g.is_monic());
    Poly h = Poly::from_ints(f3, {0, 1, 0, 1});  // z^3 + z
    CHECK(h.eval(0) == 0);
    CHECK_THROWS_AS(Poly::divmod(a, Poly::zero(f3)), Error);
}

TEST_CASE("characteristic-p derivative") {
    auto f3 = Field::make(3, 1);
    CHECK(Poly::from_ints(f3, {0, 1, 0, 1}).derivative() == Poly::one(f3));  // d(z^3+z) = 1
    // d/dz Tr_2(H_1) = 2z^3 + 1 = 2(z + 1/2)^3
    Poly tr21 = Poly::from_ints(f3, {0, 1, 0, 1, 2});
    Poly d = tr21.derivative();
    CHECK(d == Poly::from_ints(f3, {1, 0, 0, 2}));
    Poly lin = Poly::from_ints(f3, {2, 1});  // z + 2 = z + 1/2
    CHECK(d == (lin * lin * lin).scaled(2));
    // tightness example: d/dz (z^53 + z) over GF(3^6)
    auto f729 = Field::make(3, 6);
    std::vector<std::int64_t> c(54, 0);
    c[1] = 1;
    c[53] = 1;
    Poly dtight = Poly::from_ints(f729, c).derivative();
    std::vector<std::int64_t> ex(53, 0);
    ex[0] = 1;
    ex[52] = 2;
    CHECK(dtight == Poly::from_ints(f729, ex));  // 2z^52 + 1
}

TEST_CASE("root scan") {
    auto f5 = Field::make(5, 1);
    Poly zqz = Poly::from_ints(f5, {0, -1, 0, 0, 0, 1});  // z^5 - z
    RootScan rs = poly_roots(zqz);
    CHECK(rs.roots.size() == 5);
    CHECK(rs.splits_with_distinct_roots);
    auto f3 = Field::make(3, 1);
    RootScan none = poly_roots(Poly::from_ints(f3, {1, 0, 1}));  // z^2 + 1
    CHECK(none.roots.empty());
    CHECK_FALSE(none.splits_with_distinct_roots);
    CHECK_THROWS_AS(poly_roots(Poly::zero(f3)), Error);
}

TEST_CASE("powmod") {
    auto f3 = Field::make(3, 1);
    Poly z = Poly::monomial(f3, 1);
    Poly mod = Poly::from_ints(f3, {1, 0, 1});  // z^2 + 1
    CHECK(z.powmod(9, mod) == z);               // z^9 = z mod z^2+1
    CHECK(z.powmod(0, mod) == Poly::one(f3));
    // gcd(z^(3^6) - z, T) where T = z^54 + z^2 has degree 53: the distinct
    // roots of T in GF(3^6) (consistency with deg f_A = 53 for y^27-y = x^2)
    auto f729 = Field::make(3, 6);
    std::vector<std::int64_t> tc(55, 0);
    tc[2] = 1;
    tc[54] = 1;
    Poly T = Poly::from_ints(f729, tc);
    Poly frob = Poly::monomial(f729, 1).powmod(729, T) - Poly::monomial(f729, 1);
    CHECK(Poly::gcd(frob, T).degree() == 53);
}

TEST_CASE("vanishing polynomial") {
    auto f5 = Field::make(5, 1);
    CHECK(vanishing_poly(f5, {0}) == Poly::monomial(f5, 1));
    std::vector<felem> all{0, 1, 2, 3, 4};
    CHECK(vanishing_poly(f5, all) == Poly::from_ints(f5, {0, -1, 0, 0, 0, 1}));  // z^5 - z
    CHECK_THROWS_AS(vanishing_poly(f5, std::vector<felem>{1, 1}), Error);
    // evaluates to zero exactly on the set (exhaustive over GF(27))
    auto f27 = Field::make(3, 3);
    std::vector<felem> pts{0, 5, 9, 13, 26};
    Poly v = vanishing_poly(f27, pts);
    CHECK(v.is_monic());
    CHECK(v.degree() == 5);
    int zeros = 0;
    for (felem a = 0; a < 27; ++a) zeros += v.eval(a) == 0;
    CHECK(zeros == 5);
    for (felem a : pts) CHECK(v.eval(a) == 0);
}

TEST_CASE("trace polynomial") {
    auto f9 = Field::make(3, 2);
    CHECK(trace_poly(Poly::monomial(f9, 1), 3, 2) ==
          Poly::from_ints(f9, {0, 1, 0, 1}));  // z + z^3
    Poly h1 = Poly::from_ints(f9, {0, 1, 0, 0, 1});  // x^4 + x
    CHECK(trace_poly(h1, 3, 2) == Poly::from_ints(f9, {0, 1, 0, 1, 2}));  // 2z^4+z^3+z
    auto f81 = Field::make(3, 4);
    std::vector<std::int64_t> h2c(11, 0);
    h2c[1] = 1;
    h2c[10] = 1;  // H_2 = x^10 + x
    CHECK(trace_poly(Poly::from_ints(f81, h2c), 3, 4).degree() == 30);  // q^(n-1)+q^(k-1)
    // coefficients must lie in GF(q)
    Poly bad(f9, {3, 1});  // t is not in GF(3)
    CHECK_THROWS_AS(trace_poly(bad, 3, 2), Error);
}

TEST_CASE("trace polynomial agrees with the relative trace pointwise") {
    struct Case {
        std::uint64_t p;
        unsigned m;
        std::uint64_t q;
        unsigned n;
    };
    for (auto [p, m, q, n] : {Case{3, 2, 3, 2}, Case{3, 4, 3, 4}, Case{3, 4, 9, 2},
                              Case{2, 4, 4, 2}, Case{2, 6, 4, 3}}) {
        auto f = Field::make(p, m);
        std::mt19937 rng(1234 + m);
        // random G with coefficients in GF(q): span q's subfield via pow
        std::vector<felem> sub;
        for (felem a = 0; a < f->order(); ++a)
            if (f->in_subfield(a, q)) sub.push_back(a);
        std::uniform_int_distribution<std::size_t> pick(0, sub.size() - 1);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<felem> gc(8);
            for (auto& c : gc) c = sub[pick(rng)];
            Poly G(f, std::move(gc));
            if (G.is_zero()) continue;
            Poly tr = trace_poly(G, q, n);
            for (felem a = 0; a < f->order(); ++a)
                CHECK(tr.eval(a) == f->trace_rel(G.eval(a), q, n));
        }
    }
}

TEST_CASE("product rule on random samples") {
    auto f25 = Field::make(5, 2);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Poly a = random_poly(f25, 9, rng);
        Poly b = random_poly(f25, 9, rng);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("gcd with z^Q - z counts distinct roots") {
    auto f27 = Field::make(3, 3);
    std::mt19937 rng(7);
    Poly z = Poly::monomial(f27, 1);
    for (int trial = 0; trial < 10; ++trial) {
        Poly ff = random_poly(f27, 12, rng);
        if (ff.degree() < 1) continue;
        Poly frob = z.powmod(27, ff) - z;
        Poly g = Poly::gcd(frob, ff);
        CHECK(g.degree() == static_cast<long long>(poly_roots(ff).roots.size()));
    }
}

TEST_CASE("report-syntax parser round trips") {
    auto f729 = Field::make(3, 6);
    Poly p1 = poly_from_text(f729, "2z^52+1");
    CHECK(p1.degree() == 52);
    CHECK(p1.coeff(0) == 1);
    CHECK(p1.coeff(52) == 2);
    Poly p2 = poly_from_text(f729, "z^17 - z");
    CHECK(p2 == Poly::monomial(f729, 17) - Poly::monomial(f729, 1));
    CHECK(poly_from_text(f729, "0").is_zero());
    CHECK_THROWS_AS(poly_from_text(f729, "z^"), Error);
}

TEST_SUITE_END();
