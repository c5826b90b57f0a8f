#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "colorgates/code.hpp"
#include "colorgates/noise.hpp"
#include "colorgates/statevec.hpp"
#include "colorgates/tga.hpp"

namespace colorgates {
namespace {

BitVec random_mask(std::size_t n, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution bit(p);
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, bit(rng));
  return v;
}

const CssCode& torus(int L) {
  static std::map<int, CssCode> cache;
  auto it = cache.find(L);
  if (it == cache.end()) it = cache.emplace(L, CssCode(build_torus_colex(L))).first;
  return it->second;
}

void BM_Rank(benchmark::State& state) {
  const auto& code = torus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(code.sx()));
  state.SetLabel(std::to_string(code.sx().rows()) + "x" + std::to_string(code.n()));
}
BENCHMARK(BM_Rank)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_PreimageSolve(benchmark::State& state) {
  const auto& code = torus(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  const auto phi = code.flux_of(random_mask(code.n(), rng, 0.01));
  for (auto _ : state) benchmark::DoNotOptimize(code.has_preimage(phi));
}
BENCHMARK(BM_PreimageSolve)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_Syndrome(benchmark::State& state) {
  const auto& code = torus(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(2);
  const PauliOp p{random_mask(code.n(), rng, 0.01), random_mask(code.n(), rng, 0.01)};
  for (auto _ : state) benchmark::DoNotOptimize(code.syndrome(p));
}
BENCHMARK(BM_Syndrome)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_Decoder(benchmark::State& state) {
  const auto& code = torus(4);
  std::mt19937_64 rng(3);
  const auto phi = code.flux_of(random_mask(code.n(), rng, 0.005));
  for (auto _ : state) benchmark::DoNotOptimize(component_decoder(code, phi));
}
BENCHMARK(BM_Decoder)->Unit(benchmark::kMicrosecond);

void BM_Tolerable(benchmark::State& state) {
  const CssCode code(build_tetra15());
  const TgaContext tga(code, TPattern::from_bipartition(code.colex()));
  std::uint64_t m = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tga.is_tolerable(BitVec::from_u64(15, ++m & 0x7FFF)));
}
BENCHMARK(BM_Tolerable);

void BM_Theorem1(benchmark::State& state) {
  const CssCode code(build_tetra15());
  const TgaContext tga(code, TPattern::from_bipartition(code.colex()));
  const auto x = BitVec::from_indices(15, {2, 9});
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_check(tga, x));
}
BENCHMARK(BM_Theorem1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace colorgates

BENCHMARK_MAIN();
