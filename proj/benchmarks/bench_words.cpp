#include "growthlab/free_calculus.hpp"
#include "growthlab/grigorchuk.hpp"
#include "growthlab/word.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace growthlab;

Word random_word(std::mt19937_64& rng, int symbols, int length) {
  std::uniform_int_distribution<int> sym(0, symbols - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  Word w;
  for (int i = 0; i < length; ++i) {
    w.letters.push_back(
        Letter{sym(rng), static_cast<std::int8_t>(sgn(rng) ? 1 : -1)});
  }
  return w;
}

void bm_free_reduce(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Word w = random_word(rng, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_reduce(w));
  }
}
BENCHMARK(bm_free_reduce)->Arg(100)->Arg(1000);

void bm_collect_letter(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Word w = random_word(rng, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(freecalc::collect_letter(w, 0));
  }
}
BENCHMARK(bm_collect_letter)->Arg(16)->Arg(24);

void bm_weight_sets(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        freecalc::weight_sets(2, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(bm_weight_sets)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_grig_trivial(benchmark::State& state) {
  const groups::OmegaSequence omega("", "012");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> letter(0, 3);
  groups::GrigWord w;
  for (long i = 0; i < state.range(0); ++i) {
    w.push_back(static_cast<std::uint8_t>(letter(rng)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(groups::grig_trivial(w, omega));
  }
}
BENCHMARK(bm_grig_trivial)->Arg(64)->Arg(512);

}  // namespace
