#include <benchmark/benchmark.h>

#include "qtrop/knots.hpp"
#include "qtrop/qholo.hpp"

using namespace qtrop;

namespace {

const KnotEntry& entry(const std::string& name) {
  static std::map<std::string, KnotEntry> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load(name)).first;
  return it->second;
}

void BM_load(benchmark::State& state, const std::string& name) {
  for (auto _ : state) benchmark::DoNotOptimize(load(name));
}

void BM_curve(benchmark::State& state, const std::string& name) {
  const WeylElement& op = entry(name).nonhomogeneous_op;
  for (auto _ : state) {
    TropicalCurve c = curve(knot_tropical(op));
    benchmark::DoNotOptimize(c);
  }
}

void BM_subdivision(benchmark::State& state, const std::string& name) {
  const TropicalPolynomial tp =
      knot_tropical(entry(name).nonhomogeneous_op);
  const LiftedConfiguration cfg = lift_config(tp);
  for (auto _ : state) {
    RegularSubdivision s = lower_subdivision(cfg);
    benchmark::DoNotOptimize(s);
  }
}

void BM_goodness(benchmark::State& state, const std::string& name) {
  const WeylElement& op = entry(name).nonhomogeneous_op;
  for (auto _ : state) benchmark::DoNotOptimize(is_good(op));
}

void BM_evaluate(benchmark::State& state, const std::string& name) {
  const RecursionSystem rec = knot_recursion(entry(name));
  const long N = state.range(0);
  for (auto _ : state) {
    auto f = evaluate(rec, N);
    benchmark::DoNotOptimize(f);
  }
}

void BM_weyl_square(benchmark::State& state, const std::string& name) {
  const WeylElement& op = entry(name).nonhomogeneous_op;
  for (auto _ : state) benchmark::DoNotOptimize(weyl_mul(op, op));
}

}  // namespace

BENCHMARK_CAPTURE(BM_load, 4_1, std::string("4_1"));
BENCHMARK_CAPTURE(BM_curve, 4_1, std::string("4_1"));
BENCHMARK_CAPTURE(BM_curve, 5_2, std::string("5_2"));
BENCHMARK_CAPTURE(BM_curve, 6_1, std::string("6_1"));
BENCHMARK_CAPTURE(BM_subdivision, 6_1, std::string("6_1"));
BENCHMARK_CAPTURE(BM_goodness, 6_1, std::string("6_1"));
BENCHMARK_CAPTURE(BM_evaluate, 4_1, std::string("4_1"))->Arg(12)->Arg(20);
BENCHMARK_CAPTURE(BM_evaluate, 5_2, std::string("5_2"))->Arg(12);
BENCHMARK_CAPTURE(BM_weyl_square, 6_1, std::string("6_1"));

BENCHMARK_MAIN();
