// Copyright 2026 The shiftcover Authors
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

#include "shiftcover/analysis.hpp"
#include "shiftcover/cover.hpp"
#include "shiftcover/verify.hpp"

namespace sc = shiftcover;

namespace {

sc::GeneratorSpec fibonacci() {
  return sc::SubstitutionSystem::from_strings({"01", "0"});
}

sc::GeneratorSpec thue_morse() {
  return sc::SubstitutionSystem::from_strings({"01", "10"});
}

sc::SturmianSpec golden(std::optional<sc::Intercept> rho = std::nullopt) {
  sc::SturmianSpec s;
  s.cf_digits = {1};
  s.cf_period = {1};
  s.intercept = rho;
  return s;
}

void BM_LanguageFibonacci(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sc::language_from_generator(fibonacci(), n));
}
BENCHMARK(BM_LanguageFibonacci)->Arg(64)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_LanguageThueMorse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sc::language_from_generator(thue_morse(), n));
}
BENCHMARK(BM_LanguageThueMorse)->Arg(64)->Arg(320)->Unit(benchmark::kMillisecond);

void BM_LanguageGoldenMean(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const sc::GeneratorSpec gm = sc::MatrixSFT{{{1, 1}, {1, 0}}};
  for (auto _ : state)
    benchmark::DoNotOptimize(sc::language_from_generator(gm, n));
}
BENCHMARK(BM_LanguageGoldenMean)->Arg(16)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_StandardWord(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sc::standard_sturmian_prefix(golden(), n));
}
BENCHMARK(BM_StandardWord)->Arg(1 << 12)->Arg(1 << 16);

void BM_MechanicalWord(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const sc::SturmianSpec s = golden(sc::Intercept{{1, 2}, {0, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(sc::mechanical_word(s, n));
}
BENCHMARK(BM_MechanicalWord)->Arg(1 << 10)->Arg(1 << 14);

void BM_QuotientLevel(benchmark::State& state) {
  static const sc::LanguageTable t =
      sc::language_from_generator(fibonacci(), 300);
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto H = static_cast<std::size_t>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(sc::quotient_level(t, {k, k + 4}, H));
}
BENCHMARK(BM_QuotientLevel)->Args({3, 40})->Args({5, 135})->Args({10, 135});

void BM_NaiveOracle(benchmark::State& state) {
  static const sc::LanguageTable t =
      sc::language_from_generator(thue_morse(), 22);
  for (auto _ : state)
    benchmark::DoNotOptimize(sc::naive_oracle_quotient(t, {4, 8}, 14));
}
BENCHMARK(BM_NaiveOracle);

void BM_PiFiber(benchmark::State& state) {
  static const sc::LanguageTable t =
      sc::language_from_generator(fibonacci(), 300);
  const sc::Ray omega(fibonacci());
  for (auto _ : state)
    benchmark::DoNotOptimize(sc::pi_fiber(omega, sc::ChainSpec{}, t));
}
BENCHMARK(BM_PiFiber)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
