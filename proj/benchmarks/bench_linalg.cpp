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

#include <benchmark/benchmark.h>

#include <random>

#include "soag/linalg.hpp"

namespace {

soag::FqMatrix random_matrix(const soag::FieldPtr& f, std::size_t r, std::size_t c) {
    std::mt19937 rng(42);
    std::uniform_int_distribution<soag::felem> dist(
        0, static_cast<soag::felem>(f->order() - 1));
    soag::FqMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    return m;
}

void BM_rref(benchmark::State& state) {
    auto f = soag::Field::make(3, 6);
    const auto n = static_cast<std::size_t>(state.range(0));
    soag::FqMatrix m = random_matrix(f, n, 2 * n);
    for (auto _ : state) benchmark::DoNotOptimize(soag::mat_rank(m));
}
BENCHMARK(BM_rref)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_gram_euclidean(benchmark::State& state) {
    auto f = soag::Field::make(2, 8);
    const auto n = static_cast<std::size_t>(state.range(0));
    soag::FqMatrix m = random_matrix(f, n, 8 * n);
    for (auto _ : state) benchmark::DoNotOptimize(soag::gram_euclidean(m).is_zero());
}
BENCHMARK(BM_gram_euclidean)->Arg(32)->Arg(128)->Arg(512);

}  // namespace
