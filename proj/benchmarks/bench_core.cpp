/*
   Copyright 2026 The cyclo Authors

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

#include <random>

#include <benchmark/benchmark.h>

#include "cyclo/verify.hpp"
#include "cyclo_cli/spec_file.hpp"
#include "cyclo_cli/sweep.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace cyclo;

void BM_FieldMul(benchmark::State& state) {
    const auto f = state.range(0) == 1 ? gf::Field::make(13) : gf::Field::make(5, {2, 0, 1});
    std::mt19937_64 rng(1);
    std::vector<gf::Code> xs(1024);
    for (auto& x : xs) x = rng() % f->order();
    gf::Code acc = 1;
    for (auto _ : state) {
        for (auto x : xs) acc = f->mul(acc, x == 0 ? 1 : x);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(2);

void BM_PolyMul(benchmark::State& state) {
    const auto f = gf::Field::make(13);
    std::mt19937_64 rng(2);
    const auto a = oracle::random_poly(f, rng, static_cast<int>(state.range(0)));
    const auto b = oracle::random_poly(f, rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(32)->Arg(128);

void BM_ResidueAtInfinity(benchmark::State& state) {
    const auto f = gf::Field::make(7);
    std::mt19937_64 rng(3);
    const RatFn h(oracle::random_poly(f, rng, 20), oracle::random_poly(f, rng, 18, true));
    for (auto _ : state) benchmark::DoNotOptimize(h.residue_at_infinity());
}
BENCHMARK(BM_ResidueAtInfinity);

void BM_Pairing(benchmark::State& state) {
    const auto c = fixture::as_f3();
    const auto w = omega_basis(c, RangePolicy::extended);
    const auto h = h1_basis(c, RangePolicy::extended);
    for (auto _ : state) benchmark::DoNotOptimize(pairing(h[0].h, w[0].omega));
}
BENCHMARK(BM_Pairing);

void BM_FullReport(benchmark::State& state) {
    const auto c = state.range(0) == 0 ? fixture::quartic() : fixture::as_f3();
    for (auto _ : state) benchmark::DoNotOptimize(full_report(c));
}
BENCHMARK(BM_FullReport)->Arg(0)->Arg(1);

void BM_Sweep(benchmark::State& state) {
    cli::SweepParams sp;
    sp.family = state.range(0) == 0 ? cli::Family::kummer : cli::Family::artin_schreier;
    sp.p_max = state.range(0) == 0 ? 13 : 7;
    sp.count_cap = 50;
    sp.jobs = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(cli::run_sweep(sp));
}
BENCHMARK(BM_Sweep)->Args({0, 1})->Args({0, 4})->Args({1, 1})->Args({1, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
