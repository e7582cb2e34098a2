#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "graphprod/contact.hpp"
#include "graphprod/disk_diagram.hpp"
#include "graphprod/subgroup.hpp"
#include "graphprod/word_calculus.hpp"
#include "oracle.hpp"

using namespace graphprod;

namespace {

const DefiningGraph& c5() {
  static const DefiningGraph g = cycle_graph({"1", "2", "3", "4", "5"}, GroupSpec::infinite_cyclic());
  return g;
}

const DefiningGraph& p4() {
  static const DefiningGraph g = path_graph({"a", "b", "c", "d"}, GroupSpec::infinite_cyclic());
  return g;
}

std::vector<PrismWord> words(const DefiningGraph& g, std::size_t length, std::size_t count) {
  std::mt19937_64 rng(length);
  std::vector<PrismWord> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(oracle::random_word(g, rng, length));
  return out;
}

}  // namespace

static void BM_Reduce(benchmark::State& state) {
  const auto input = words(c5(), static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodesic_form(c5(), input[i++ % input.size()]));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Reduce)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_StarLength(benchmark::State& state) {
  const auto input = words(c5(), static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    // A fresh memo each time so the recurrence is measured, not the cache.
    benchmark::DoNotOptimize(star_length(c5(), input[i++ % input.size()]));
  }
}
BENCHMARK(BM_StarLength)->RangeMultiplier(2)->Range(4, 32);

static void BM_BuildDiagram(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<PrismWord> input;
  for (int i = 0; i < 64; ++i) {
    input.push_back(oracle::random_identity_word(p4(), rng, static_cast<std::size_t>(state.range(0))).s);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_diagram(p4(), input[i++ % input.size()]));
  }
}
BENCHMARK(BM_BuildDiagram)->RangeMultiplier(2)->Range(8, 64);

static void BM_LeftComb(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto id = oracle::random_identity_word(p4(), rng, static_cast<std::size_t>(state.range(0)));
  const DiskDiagram d = build_diagram(p4(), id.s);
  const BoundaryRange range = id.w.empty() ? BoundaryRange{0, 0} : BoundaryRange{id.g.size(), id.w.size()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(left_comb(p4(), d, range));
  }
}
BENCHMARK(BM_LeftComb)->RangeMultiplier(2)->Range(8, 64);

static void BM_JoinBusting(benchmark::State& state) {
  const auto h = SubgroupSpec::make(p4(), {parse_word(p4(), "a:1.d:1"), parse_word(p4(), "b:1.c:1")}, "H");
  for (auto _ : state) {
    benchmark::DoNotOptimize(join_busting_profile(p4(), h, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_JoinBusting)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_MeasureConstants(benchmark::State& state) {
  const auto h = SubgroupSpec::make(p4(), {parse_word(p4(), "a:1.d:1"), parse_word(p4(), "b:1.c:1")}, "H");
  SamplingOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure_constants(p4(), h, 6, options));
  }
}
BENCHMARK(BM_MeasureConstants)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
