#include <benchmark/benchmark.h>

#include <string>

#include "jonesrt/colored.h"
#include "jonesrt/constructions.h"
#include "jonesrt/diagram_io.h"
#include "jonesrt/diagram_ops.h"
#include "jonesrt/laurent.h"
#include "jonesrt/quantum.h"
#include "jonesrt/rt.h"
#include "jonesrt/skein.h"

namespace jonesrt {
namespace {

LinkDiagram Corpus(const std::string& name) {
  return ParseDiagram(
      ReadTextFile(std::string(JONESRT_BENCH_DATA_DIR) + "/corpus/" + name + ".json"));
}

void BM_LaurentMultiply(benchmark::State& state) {
  const LaurentPolynomial a = QuantumInteger(static_cast<int>(state.range(0)));
  const LaurentPolynomial b = a.Pow(3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMultiply)->Arg(8)->Arg(32)->Arg(128);

void BM_BracketNaive(benchmark::State& state) {
  const LinkDiagram d = Corpus("torus_3_4");
  for (auto _ : state) benchmark::DoNotOptimize(BracketNaive(d));
}
BENCHMARK(BM_BracketNaive)->Unit(benchmark::kMillisecond);

void BM_BracketFast(benchmark::State& state) {
  const LinkDiagram d = Corpus("torus_3_4");
  for (auto _ : state) benchmark::DoNotOptimize(BracketFast(d));
}
BENCHMARK(BM_BracketFast)->Unit(benchmark::kMillisecond);

void BM_CableBracketAtRoot(benchmark::State& state) {
  const int strands = static_cast<int>(state.range(0));
  const LinkDiagram c = Cable(BuildTwistedKnot(WhiteheadTemplate(), {5}), {strands});
  state.counters["width"] = ContractionWidth(c);
  for (auto _ : state) benchmark::DoNotOptimize(BracketAtRoot(c, 5));
}
BENCHMARK(BM_CableBracketAtRoot)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ColoredJonesAtRoot(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const LinkDiagram k = BuildTwistedKnot(WhiteheadTemplate(), {r});
  for (auto _ : state) {
    for (int n = 1; n < r; ++n) benchmark::DoNotOptimize(ColoredJonesAtRoot(k, n, r));
  }
}
BENCHMARK(BM_ColoredJonesAtRoot)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_RtInvariantHopf(benchmark::State& state) {
  LinkDiagram hopf = Corpus("hopf");
  hopf.framings = {2, -1};
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(RtInvariant({hopf, "hopf"}, r));
}
BENCHMARK(BM_RtInvariantHopf)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_ParallelSurgeryInvariant(benchmark::State& state) {
  const LinkDiagram k = BuildTwistedKnot(WhiteheadTemplate(), {5});
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ParallelSurgeryInvariant(k, q, 1, 5));
}
BENCHMARK(BM_ParallelSurgeryInvariant)->Arg(2)->Arg(25)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace jonesrt

BENCHMARK_MAIN();
