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

#include "soag/linalg.hpp"

using namespace soag;

TEST_SUITE_BEGIN("linalg");

namespace {

FqMatrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937& rng) {
    FqMatrix m(f, r, c);
    std::uniform_int_distribution<felem> dist(0, static_cast<felem>(f->order() - 1));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    auto f5 = Field::make(5, 1);
    CHECK(mat_rank(FqMatrix(f5, 4, 7)) == 0);
    CHECK(mat_rank(FqMatrix::identity(f5, 6)) == 6);
}

TEST_CASE("nullspace") {
    auto f2 = Field::make(2, 1);
    FqMatrix m(f2, 1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    FqMatrix ns = mat_nullspace(m);
    REQUIRE(ns.rows() == 1);
    CHECK(ns.at(0, 0) == 1);
    CHECK(ns.at(0, 1) == 1);
    CHECK(mat_nullspace(FqMatrix::identity(f2, 3)).rows() == 0);
}

TEST_CASE("rank-nullity and kernel identity on random matrices") {
    auto f9 = Field::make(3, 2);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 12; ++trial) {
        FqMatrix m = random_matrix(f9, 5, 9, rng);
        const std::size_t r = mat_rank(m);
        CHECK(mat_rank(mat_transpose(m)) == r);
        FqMatrix ns = mat_nullspace(m);
        CHECK(ns.rows() == 9 - r);
        FqMatrix prod = mat_mul(m, mat_transpose(ns));
        CHECK(prod.is_zero());
    }
}

TEST_CASE("product shapes") {
    auto f3 = Field::make(3, 1);
    FqMatrix a(f3, 2, 3), b(f3, 4, 2);
    CHECK_THROWS_AS(mat_mul(a, b), Error);
    FqMatrix ok = mat_mul(a, FqMatrix(f3, 3, 5));
    CHECK(ok.rows() == 2);
    CHECK(ok.cols() == 5);
}

TEST_CASE("gram matrices") {
    auto f4 = Field::make(2, 2);
    CHECK(gram_euclidean(FqMatrix(f4, 3, 5)).is_zero());
    // row [t, t] over GF(4), q0 = 2: t*t^2 + t*t^2 = 0
    FqMatrix g(f4, 1, 2);
    g.at(0, 0) = 2;
    g.at(0, 1) = 2;
    CHECK(gram_hermitian(g, 2).is_zero());
    // a non-orthogonal row: [1, t] has 1 + t^3 = 1 + 1 = 0 hermitian but
    // 1 + t^2 = t nonzero euclidean
    FqMatrix h(f4, 1, 2);
    h.at(0, 0) = 1;
    h.at(0, 1) = 2;
    CHECK_FALSE(gram_euclidean(h).is_zero());
}

TEST_CASE("hermitian gram equals the entrywise-powered euclidean route") {
    auto f9 = Field::make(3, 2);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        FqMatrix g = random_matrix(f9, 4, 6, rng);
        FqMatrix powered(f9, 4, 6);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j) powered.at(i, j) = f9->pow(g.at(i, j), 3);
        FqMatrix lhs = gram_hermitian(g, 3);
        FqMatrix rhs = mat_mul(g, mat_transpose(powered));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(lhs.at(i, j) == rhs.at(i, j));
    }
    CHECK_THROWS_AS(gram_hermitian(random_matrix(f9, 2, 2, rng), 2), Error);
    auto f27 = Field::make(3, 3);
    CHECK_THROWS_AS(gram_hermitian(FqMatrix(f27, 1, 1), 3), Error);
}

TEST_CASE("incremental rank tracks batch rank over prefixes") {
    auto f7 = Field::make(7, 1);
    std::mt19937 rng(23);
    FqMatrix m = random_matrix(f7, 12, 8, rng);
    IncrementalRank inc(f7, 8);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        inc.push_row(m.row(r));
        FqMatrix prefix(f7, r + 1, 8);
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < 8; ++j) prefix.at(i, j) = m.at(i, j);
        CHECK(inc.rank() == mat_rank(prefix));
    }
}

TEST_CASE("matrix dump format") {
    auto f9 = Field::make(3, 2);
    FqMatrix m(f9, 1, 2);
    m.at(0, 0) = 5;  // 2 + t
    m.at(0, 1) = 1;
    CHECK(mat_dump(m) == "3 2 1 2\n2,1 1,0\n");
}

TEST_SUITE_END();
