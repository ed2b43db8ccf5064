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

#include "soag/agcode.hpp"
#include "soag/quantum.hpp"

namespace {

void BM_transversal_data(benchmark::State& state) {
    // the maximal-curve example: point enumeration plus a degree-405 f_A
    auto K = soag::Field::make(3, 6);
    std::vector<std::int64_t> h(11, 0);
    h[2] = 1;
    h[10] = -1;
    soag::CurveSpec spec = soag::curve_validate(
        K, soag::Poly::from_ints(K, {0, -1, 0, 1}), soag::Poly::from_ints(K, h));
    for (auto _ : state) {
        soag::TransversalData td = soag::transversal_data(spec);
        benchmark::DoNotOptimize(td.deg_m);
    }
}
BENCHMARK(BM_transversal_data);

void BM_so_check(benchmark::State& state) {
    soag::FamilyInstance inst =
        soag::family_make(soag::FamilyKind::A, soag::FamilyParams{.q = 9, .n = 2, .l = 8});
    soag::TransversalData td = soag::transversal_data(*inst.curve);
    const long long m = state.range(0);
    for (auto _ : state) {
        soag::AGCode code = soag::build_code(*inst.curve, td, m);
        benchmark::DoNotOptimize(soag::check_so_euclidean(code));
    }
}
BENCHMARK(BM_so_check)->Arg(9)->Arg(31);

void BM_gv_check(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(soag::gv_check(81, 729, 413, 123));
}
BENCHMARK(BM_gv_check);

}  // namespace
