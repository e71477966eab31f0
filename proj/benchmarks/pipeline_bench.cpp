// Copyright 2026 The fractal-sft Authors
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

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>

#include "fractal_sft/codings.hpp"
#include "fractal_sft/open_map.hpp"
#include "fractal_sft/oracle.hpp"

namespace fractal_sft {
namespace {

Ifs Fixture(const std::string& name) {
  std::ifstream in(std::string(FRACTAL_SFT_BENCH_DATA) + "/" + name);
  return LoadIfs(nlohmann::json::parse(in));
}

FieldElement Q(long p, long q) { return FieldElement(NumberField::Rationals(), MakeRational(p, q)); }

void BM_FieldMultiply(benchmark::State& state) {
  FieldPtr field = NumberField::Make(Polynomial::FromInts({-1, -1, -1, 1}), Rational(1), Rational(2));
  FieldElement x = FieldElement::FromCoeffs(field, {MakeRational(3, 7), MakeRational(-2, 5), MakeRational(1, 9)});
  FieldElement y = FieldElement::FromCoeffs(field, {MakeRational(-1, 3), MakeRational(5, 2), MakeRational(4, 11)});
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_FieldMultiply);

void BM_FieldCompare(benchmark::State& state) {
  FieldPtr field = NumberField::Make(Polynomial::FromInts({-1, -1, -1, 1}), Rational(1), Rational(2));
  FieldElement beta = FieldElement::Generator(field);
  FieldElement x = beta * beta - FieldElement(field, 3L);
  FieldElement y = FieldElement(field, MakeRational(1, 3)) * beta;
  for (auto _ : state) benchmark::DoNotOptimize(Cmp(x, y));
}
BENCHMARK(BM_FieldCompare);

void BM_PerronRoot(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(17);
  BinaryMatrix m(n, std::vector<int>(n));
  for (auto& row : m)
    for (auto& e : row) e = rng() % 3 == 0;
  for (int i = 0; i < n; ++i) m[i][(i + 1) % n] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(PerronRoot(m));
}
BENCHMARK(BM_PerronRoot)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_AnalyzeIfs(benchmark::State& state) {
  Ifs ifs = Fixture("inhomogeneous_three_maps.json");
  for (auto _ : state) benchmark::DoNotOptimize(AnalyzeIfs(ifs));
}
BENCHMARK(BM_AnalyzeIfs)->Unit(benchmark::kMillisecond);

void BM_FourMapFamily(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(AnalyzeFourMapFamily(Q(1, 10)));
}
BENCHMARK(BM_FourMapFamily)->Unit(benchmark::kMillisecond);

void BM_UnivoqueDimension(benchmark::State& state) {
  std::vector<long> poly(state.range(0) + 1, -1);
  poly.back() = 1;
  BetaSystem sys = MakeBetaSystem(Polynomial::FromInts(poly));
  for (auto _ : state) benchmark::DoNotOptimize(UnivoqueDimension(sys));
}
BENCHMARK(BM_UnivoqueDimension)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_SurvivorDimension(benchmark::State& state) {
  Hole hole = MakeHole(MakeRational(1, 31), MakeRational(2, 31));
  for (auto _ : state) benchmark::DoNotOptimize(SurvivorDimension(HolePartition(hole)));
}
BENCHMARK(BM_SurvivorDimension)->Unit(benchmark::kMillisecond);

void BM_CountCodings(benchmark::State& state) {
  Ifs ifs = FourMapFamily(Q(1, 10));
  FieldElement x = Q(29, 100);
  int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(CountCodings(ifs, x, depth));
}
BENCHMARK(BM_CountCodings)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_SurvivorCylinderCount(benchmark::State& state) {
  Hole hole = MakeHole(MakeRational(1, 31), MakeRational(2, 31));
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SurvivorCylinderCount(hole, n));
}
BENCHMARK(BM_SurvivorCylinderCount)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fractal_sft

BENCHMARK_MAIN();
