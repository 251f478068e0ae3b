#include <benchmark/benchmark.h>

#include "mpc/config.hpp"
#include "mpc/simulate.hpp"
#include "mpc/worked_examples.hpp"

using namespace mpc;

namespace {

const MatrixProductCode& first_code() {
  static const MatrixProductCode c = build_code(parse_config(examples::kFirstExtensionConfig));
  return c;
}

const MatrixProductCode& second_code() {
  static const MatrixProductCode c = build_code(parse_config(examples::kSecondExtensionConfig));
  return c;
}

void decode_loop(benchmark::State& state, const MatrixProductCode& c, Algorithm alg) {
  const auto decoders = default_decoders(c);
  const std::size_t weight = static_cast<std::size_t>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    const Trial t = sample_trial(c, weight, 1, i++);
    benchmark::DoNotOptimize(decode(alg, c, decoders, t.sent + t.error, DecodeMode::Unique));
  }
}

void BM_Ext1Length26(benchmark::State& state) { decode_loop(state, first_code(), Algorithm::Ext1); }
void BM_Ext2Length26(benchmark::State& state) { decode_loop(state, second_code(), Algorithm::Ext2); }

void BM_ComponentDecoder(benchmark::State& state) {
  // C2 = [26,7,14] on a random word: both strategies are feasible.
  const LinearCode& code = first_code().code(1);
  const BoundedDecoder dec(code, std::nullopt, static_cast<DecodeStrategy>(state.range(0)));
  SplitMix64 rng(5);
  GfVector w(code.spec(), code.length());
  for (std::size_t j = 0; j < w.size(); ++j) w.set(j, static_cast<std::int64_t>(rng.below(3)));
  for (auto _ : state) benchmark::DoNotOptimize(dec.decode(w));
}

void BM_MinDistanceC2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_by_enumeration(first_code().code(1)));
}

}  // namespace

BENCHMARK(BM_Ext1Length26)->Arg(0)->Arg(5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Ext2Length26)->Arg(0)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComponentDecoder)
    ->Arg(static_cast<int>(DecodeStrategy::CodewordScan))
    ->Arg(static_cast<int>(DecodeStrategy::ErrorPatternScan))
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDistanceC2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
