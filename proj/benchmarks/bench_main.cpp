#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "braidwalk/braid.hpp"
#include "braidwalk/dehornoy.hpp"
#include "braidwalk/fdtc.hpp"
#include "braidwalk/garside.hpp"
#include "braidwalk/link_invariants.hpp"

namespace bw = braidwalk;

namespace {

bw::BraidWord random_word(int n, int len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> index(1, n - 1);
  std::vector<int> letters;
  while (static_cast<int>(letters.size()) < len) {
    const int x = (rng() & 1) ? index(rng) : -index(rng);
    if (!letters.empty() && letters.back() == -x) {
      continue;
    }
    letters.push_back(x);
  }
  return bw::BraidWord(n, letters);
}

void BM_HandleReduce(benchmark::State& state) {
  const auto w = random_word(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bw::dehornoy::handle_reduce(w));
  }
  state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_HandleReduce)->ArgsProduct({{3, 4}, {16, 64, 256}});

void BM_NormalForm(benchmark::State& state) {
  const auto w = random_word(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bw::garside::left_normal_form(w));
  }
  state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_NormalForm)->ArgsProduct({{3, 5}, {64, 256, 1024}});

void BM_DehornoyFloor(benchmark::State& state) {
  const auto w = random_word(3, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bw::dehornoy::dehornoy_floor(w));
  }
}
BENCHMARK(BM_DehornoyFloor)->Arg(32)->Arg(128)->Arg(512);

void BM_Signature(benchmark::State& state) {
  const auto w = random_word(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bw::signature(w));
  }
}
BENCHMARK(BM_Signature)->ArgsProduct({{3, 4}, {32, 128, 256}});

void BM_Alexander(benchmark::State& state) {
  const auto w = random_word(3, static_cast<int>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bw::alexander_polynomial(w));
  }
}
BENCHMARK(BM_Alexander)->Arg(32)->Arg(128);

void BM_FdtcExact(benchmark::State& state) {
  const auto w = random_word(3, static_cast<int>(state.range(0)), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bw::fdtc_exact(w, 10, 64));
  }
}
BENCHMARK(BM_FdtcExact)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
