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

#include "soag/field.hpp"

namespace {

void BM_field_mul(benchmark::State& state) {
    auto f = soag::Field::make(3, static_cast<unsigned>(state.range(0)));
    soag::felem a = 5 % static_cast<soag::felem>(f->order());
    soag::felem b = 7 % static_cast<soag::felem>(f->order());
    for (auto _ : state) {
        a = f->mul(a ? a : 2, b ? b : 3);
        benchmark::DoNotOptimize(a);
        b = f->add(b, 1);
    }
}
BENCHMARK(BM_field_mul)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_field_add(benchmark::State& state) {
    auto f = soag::Field::make(3, static_cast<unsigned>(state.range(0)));
    soag::felem a = 1, b = 2;
    for (auto _ : state) {
        a = f->add(a, b);
        benchmark::DoNotOptimize(a);
        b = f->add(b, 1);
    }
}
BENCHMARK(BM_field_add)->Arg(2)->Arg(6)->Arg(8);

void BM_field_registry_hit(benchmark::State& state) {
    // repeated make() hits the process-wide registry; construction itself
    // (modulus search + tables) happens once per (p, m)
    for (auto _ : state) {
        auto f = soag::Field::make(5, 6);
        benchmark::DoNotOptimize(f->order());
    }
}
BENCHMARK(BM_field_registry_hit);

}  // namespace
