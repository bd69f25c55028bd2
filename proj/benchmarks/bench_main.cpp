#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "plumbcurve/errors.hpp"
#include "plumbcurve/geometry.hpp"
#include "plumbcurve/gradings.hpp"
#include "plumbcurve/harness.hpp"
#include "plumbcurve/loopcalc.hpp"
#include "plumbcurve/plumbing.hpp"
#include "plumbcurve/svg.hpp"
#include "plumbcurve/wu.hpp"

using namespace pc;

namespace {

std::vector<RootedTree> trees(long long n, long long count) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 7919 + 3);
  RandomTreeOptions o;
  o.min_vertices = n;
  o.max_vertices = n;
  std::vector<RootedTree> v;
  for (long long i = 0; i < count; ++i) v.push_back(random_tree(rng, o));
  return v;
}

Word long_word(std::size_t len) {
  std::mt19937_64 rng(len);
  Word w;
  std::uniform_int_distribution<int> d(0, 3);
  while (w.size() < len) w.push_back(static_cast<Letter>(d(rng)));
  return w;
}

void BM_Invariant(benchmark::State& s) {
  std::vector<RootedTree> ts;
  for (const auto& t : trees(s.range(0), 64)) {
    try {
      invariant(t);
      ts.push_back(t);
    } catch (const Error&) {
    }
  }
  std::size_t i = 0;
  for (auto _ : s) benchmark::DoNotOptimize(invariant(ts[i++ % ts.size()]));
}
BENCHMARK(BM_Invariant)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_WuSolver(benchmark::State& s) {
  const auto ts = trees(s.range(0), 64);
  std::size_t i = 0;
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_relative_wu(ts[i++ % ts.size()]));
}
BENCHMARK(BM_WuSolver)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_WuBruteForce(benchmark::State& s) {
  const auto ts = trees(s.range(0), 16);
  std::size_t i = 0;
  for (auto _ : s) benchmark::DoNotOptimize(brute_force_relative_wu(ts[i++ % ts.size()]));
}
BENCHMARK(BM_WuBruteForce)->Arg(8)->Arg(12)->Arg(16);

void BM_DetSignature(benchmark::State& s) {
  const auto ts = trees(s.range(0), 64);
  std::vector<IntForm> fs;
  for (const auto& t : ts) fs.push_back(intersection_form(t));
  std::size_t i = 0;
  for (auto _ : s) benchmark::DoNotOptimize(det_and_signature(fs[i++ % fs.size()]));
}
BENCHMARK(BM_DetSignature)->Arg(8)->Arg(32)->Arg(64);

void BM_Canonicalize(benchmark::State& s) {
  const Word w = long_word(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(canonicalize(w));
  s.SetComplexityN(s.range(0));
}
BENCHMARK(BM_Canonicalize)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_DeltaSymTA(benchmark::State& s) {
  const RootedTree t = fixtures::TA();
  for (auto _ : s) benchmark::DoNotOptimize(delta_sym_tree(t));
}
BENCHMARK(BM_DeltaSymTA);

void BM_DeltaD(benchmark::State& s) {
  const RootedTree t = fixtures::TA();
  for (auto _ : s) benchmark::DoNotOptimize(delta_d(t));
}
BENCHMARK(BM_DeltaD);

void BM_SvgTB(benchmark::State& s) {
  const RootedTree t = fixtures::TB();
  for (auto _ : s) benchmark::DoNotOptimize(render_svg(t));
}
BENCHMARK(BM_SvgTB);

void BM_VerifyBatch(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(run_verify_batch(1, s.range(0), 8));
}
BENCHMARK(BM_VerifyBatch)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
