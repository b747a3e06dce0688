#include <benchmark/benchmark.h>

#include "malfatti/malfatti.hpp"

namespace {

using namespace malfatti;

const Triangle& bench_triangle() {
  static const Triangle t = Triangle::from_sides(3.1, 4.2, 5.3);
  return t;
}

void BM_Derive(benchmark::State& state) {
  const Triangle& t = bench_triangle();
  for (auto _ : state) {
    benchmark::DoNotOptimize(auxiliary_angles(derive(t)));
  }
}
BENCHMARK(BM_Derive);

void BM_AllTriplets(benchmark::State& state) {
  const DerivedQuantities q = derive(bench_triangle());
  const AuxiliaryAngles ang = auxiliary_angles(q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_triplets(q, ang));
  }
}
BENCHMARK(BM_AllTriplets);

void BM_EnumerateAndFilter(benchmark::State& state) {
  const DerivedQuantities q = derive(bench_triangle());
  const SystemSpec spec = build_system(q, Family::ExA);
  for (auto _ : state) {
    benchmark::DoNotOptimize(filter_solutions(spec, enumerate_candidates(spec)));
  }
}
BENCHMARK(BM_EnumerateAndFilter);

void BM_ConstructAll32(benchmark::State& state) {
  const Triangle& t = bench_triangle();
  const Frame frame = canonical_frame(t);
  const DerivedQuantities q = derive(t);
  const AuxiliaryAngles ang = auxiliary_angles(q);
  const std::vector<RadiiTriplet> triplets = all_triplets(q, ang);
  for (auto _ : state) {
    for (const RadiiTriplet& triplet : triplets) {
      benchmark::DoNotOptimize(construct_configuration(frame, triplet));
    }
  }
}
BENCHMARK(BM_ConstructAll32);

void BM_OracleCase1(benchmark::State& state) {
  const Frame frame = canonical_frame(bench_triangle());
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_solve(frame, Family::Incircle, 1, case_regions(1)));
  }
}
BENCHMARK(BM_OracleCase1)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
  const Triangle& t = bench_triangle();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_all(t));
  }
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

void BM_RenderSvg(benchmark::State& state) {
  const Triangle& t = bench_triangle();
  const Frame frame = canonical_frame(t);
  const DerivedQuantities q = derive(t);
  const AuxiliaryAngles ang = auxiliary_angles(q);
  const Configuration cfg =
      construct_configuration(frame, radii_for_variant(q, ang, {Family::ExA, 5}));
  const std::string caption = formula_text({Family::ExA, 5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_svg(frame, cfg, caption));
  }
}
BENCHMARK(BM_RenderSvg);

}  // namespace

BENCHMARK_MAIN();
