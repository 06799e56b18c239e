// Micro-benchmarks for the hot paths: Capelli decisions via the product-chain
// engine, identity spaces, and the full pipeline on a small fixture.
#include <benchmark/benchmark.h>

#include "gralg/isomorphism.hpp"

using namespace gralg;

namespace {

FgAbelianGroup z2{0, {2}};

ElementarySpec ut11_spec() {
  GroupElement e = identity_of(z2);
  GroupElement a(z2, {1});
  return {z2, {1, 1}, {e, a}};
}

void bm_capelli_rank_ut11(benchmark::State& state) {
  GradedAlgebra a = build_ut_elementary(ut11_spec());
  for (auto _ : state) {
    CapelliRank r = capelli_rank(a);
    benchmark::DoNotOptimize(r.t);
  }
}
BENCHMARK(bm_capelli_rank_ut11);

void bm_capelli_rank_m3(benchmark::State& state) {
  GradedAlgebra m = matrix_algebra(3, z2);
  for (auto _ : state) {
    CapelliRank r = capelli_rank(m);
    benchmark::DoNotOptimize(r.t);
  }
}
BENCHMARK(bm_capelli_rank_m3);

void bm_identity_space_deg3(benchmark::State& state) {
  GradedAlgebra a = build_ut_elementary(ut11_spec());
  GroupElement e = identity_of(z2);
  GroupElement g(z2, {1});
  std::vector<GroupElement> sig{e, g, g};
  for (auto _ : state) {
    IdentitySpace s = identity_space(sig, a);
    benchmark::DoNotOptimize(s.rows);
  }
}
BENCHMARK(bm_identity_space_deg3);

void bm_pipeline_shift(benchmark::State& state) {
  ElementarySpec a = ut11_spec();
  ElementarySpec ap = a;
  GroupElement g(z2, {1});
  for (auto& t : ap.tuple) t = compose(t, g);
  GradedFactor triv{DivisionSpec{{1}},
                    GroupHom::trivial(DivisionSpec{{1}}.support_group(), z2)};
  PipelineOptions opt;
  opt.max_degree = 2;
  for (auto _ : state) {
    PipelineVerdict v = pipeline(a, triv, ap, triv, opt);
    benchmark::DoNotOptimize(v.final);
  }
}
BENCHMARK(bm_pipeline_shift);

}  // namespace

BENCHMARK_MAIN();
