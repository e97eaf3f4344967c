#include "growthlab/certificates.hpp"
#include "growthlab/group_spec.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/topology.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace growthlab;

groups::RealizationPtr make(const std::string& spec) {
  return groups::make_realization(cli::parse_spec(spec));
}

void bm_ball_free2(benchmark::State& state) {
  const auto r = make("free:2");
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(growth::enumerate_ball(r, radius));
  }
}
BENCHMARK(bm_ball_free2)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void bm_ball_lamplighter(benchmark::State& state) {
  const auto r = make("lamplighter:2");
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(growth::enumerate_ball(r, radius));
  }
}
BENCHMARK(bm_ball_lamplighter)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void bm_ball_grigorchuk(benchmark::State& state) {
  const auto r = make("grigorchuk:(012)*");
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(growth::enumerate_ball(r, radius));
  }
}
BENCHMARK(bm_ball_grigorchuk)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void bm_ball_parallel_free2(benchmark::State& state) {
  const auto r = make("free:2");
  const growth::BallOptions opts{8'000'000,
                                 static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(growth::enumerate_ball(r, 9, opts));
  }
}
BENCHMARK(bm_ball_parallel_free2)->Arg(1)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

void bm_marked_ball(benchmark::State& state) {
  const auto r = make("grigorchuk:(012)*");
  for (auto _ : state) {
    benchmark::DoNotOptimize(topo::extract_marked_ball(r, 8));
  }
}
BENCHMARK(bm_marked_ball)->Unit(benchmark::kMillisecond);

void bm_witness_verify(benchmark::State& state) {
  const auto r = make("lamplighter:2");
  const Word v = parse_word("t", r->generator_names);
  const Word w = parse_word("a", r->generator_names);
  const int p_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(certs::verify_witness(r, v, w, p_max));
  }
}
BENCHMARK(bm_witness_verify)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace
