// Copyright 2026 The pqlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Throughput of the two linear-complexity routes and the sequence pipeline.

#include <cstdint>
#include <random>

#include <benchmark/benchmark.h>

#include "pqlc/analysis.hpp"
#include "pqlc/bitpoly.hpp"
#include "pqlc/cyclotomy.hpp"
#include "pqlc/linear_complexity.hpp"
#include "pqlc/numtheory.hpp"
#include "pqlc/sequence.hpp"

namespace {

using namespace pqlc;

void BM_BerlekampMassey(benchmark::State& state) {
  const auto seq = generate_f(QuotientSpec(static_cast<std::uint64_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(lc_berlekamp_massey(seq.bits()).result.lc);
}
BENCHMARK(BM_BerlekampMassey)->Arg(23)->Arg(43)->Arg(73)->Arg(109)->Arg(157)->Unit(benchmark::kMillisecond);

void BM_GcdMethod(benchmark::State& state) {
  const auto seq = generate_f(QuotientSpec(static_cast<std::uint64_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(lc_gcd_method(seq.bits()).result.lc);
}
BENCHMARK(BM_GcdMethod)->Arg(23)->Arg(43)->Arg(73)->Arg(109)->Arg(157)->Unit(benchmark::kMillisecond);

void BM_RootSpectrum(benchmark::State& state) {
  const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
  const auto seq = generate_f(QuotientSpec(p, 1));
  const auto poly = BitPoly::from_bits(seq.bits());
  const auto factors = cyclotomic_factors(p);
  for (auto _ : state) benchmark::DoNotOptimize(root_spectrum(poly, factors).total());
}
BENCHMARK(BM_RootSpectrum)->Arg(43)->Arg(109)->Unit(benchmark::kMillisecond);

void BM_PolyMul(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  BitVector a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.set(i, rng() & 1);
    b.set(i, rng() & 1);
  }
  const auto pa = BitPoly::from_bits(a), pb = BitPoly::from_bits(b);
  for (auto _ : state) benchmark::DoNotOptimize(poly_mul(pa, pb).degree());
}
BENCHMARK(BM_PolyMul)->Arg(1024)->Arg(12000);

void BM_GenerateF(benchmark::State& state) {
  const QuotientSpec spec(static_cast<std::uint64_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(generate_f(spec).weight());
}
BENCHMARK(BM_GenerateF)->Arg(43)->Arg(157)->Arg(1021);

void BM_BuildPartition(benchmark::State& state) {
  const QuotientSpec spec(static_cast<std::uint64_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_partition(spec).multiples().size());
}
BENCHMARK(BM_BuildPartition)->Arg(43)->Arg(157)->Arg(1021);

void BM_WieferichScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wieferich_scan(static_cast<std::uint64_t>(state.range(0))).size());
}
BENCHMARK(BM_WieferichScan)->Arg(1'000'000)->Arg(4'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
