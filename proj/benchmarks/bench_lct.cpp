#include "binlct/gamma_fan.hpp"
#include "binlct/parse.hpp"
#include "binlct/resolution.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace binlct;

const char* kCurve345 =
    "vars x1 x2 x3\n"
    "x2^2 - x1*x3\n"
    "x2*x3 - x1^3\n"
    "x3^2 - x1^2*x2\n";

const char* kCurve5689 =
    "vars x1 x2 x3 x4\n"
    "x2*x3 - x1*x4\n"
    "x1^2*x3 - x4^2\n"
    "x2^3 - x1^2*x3\n"
    "x1*x2^2 - x3*x4\n"
    "x1^2*x2 - x3^2\n"
    "x1^3 - x2*x4\n";

void BM_RayEnumeration(benchmark::State& state) {
  IdealTriple triple = triple_of(parse_ideal(kCurve5689));
  HyperplaneSet h = hyperplane_rows(triple);
  for (auto _ : state) {
    auto rays = enumerate_rays(h);
    benchmark::DoNotOptimize(rays);
  }
}
BENCHMARK(BM_RayEnumeration);

void BM_Evaluate(benchmark::State& state) {
  IdealTriple triple = triple_of(parse_ideal(kCurve345));
  IntVector v{Int(3), Int(4), Int(5)};
  for (auto _ : state) {
    auto b = evaluate(triple, v);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_Evaluate);

void BM_GlobalLct(benchmark::State& state) {
  GeneralBinomialIdeal ideal = parse_ideal(kCurve345);
  for (auto _ : state) {
    auto table = global_lct(ideal);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_GlobalLct);

void BM_PseudoResolve(benchmark::State& state) {
  IdealTriple triple = triple_of(parse_ideal(kCurve345));
  for (auto _ : state) {
    auto res = pseudo_resolve(triple);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_PseudoResolve);

}  // namespace

BENCHMARK_MAIN();
