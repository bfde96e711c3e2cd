#include <benchmark/benchmark.h>

#include "symtwist/curvature.hpp"
#include "symtwist/decomposition.hpp"
#include "symtwist/operators.hpp"
#include "symtwist/rng.hpp"
#include "symtwist/sector_basis.hpp"
#include "symtwist/sp_element.hpp"
#include "symtwist/spinor_form.hpp"
#include "symtwist/symplectic.hpp"

using namespace symtwist;

namespace {

SpinorForm sample_form(const SymplecticSpace& V, int cap, int terms) {
  Rng rng(7);
  SpinorForm out(V.l(), cap);
  for (int t = 0; t < terms; ++t) {
    FormIndex f;
    for (int k = 1; k <= V.dim(); ++k)
      if (rng.next_int(0, 2) == 0) f.push_back(k);
    Exponents e(V.l(), 0);
    int budget = static_cast<int>(rng.next_int(0, cap));
    for (int d = 0; d < budget; ++d) ++e[rng.next_int(0, V.l() - 1)];
    out.add_term(f, e, rng.small_nonzero());
  }
  return out;
}

void BM_SectorBasisBuild(benchmark::State& state) {
  SymplecticSpace V(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SectorBasis basis(V, 2, 3, sector_min_cap(V, 2, 3));
    benchmark::DoNotOptimize(basis.size());
  }
}

void BM_OperatorApply(benchmark::State& state) {
  SymplecticSpace V(static_cast<int>(state.range(0)));
  SpinorForm phi = sample_form(V, 4, 8);
  for (auto _ : state) {
    SpinorForm image = apply_x(V, apply_y(V, phi));
    benchmark::DoNotOptimize(image.is_zero());
  }
}

void BM_SectorDecompositionBuild(benchmark::State& state) {
  SymplecticSpace V(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SectorDecomposition dec(V, 2, 2, sector_min_cap(V, 2, 2));
    benchmark::DoNotOptimize(dec.total_dim());
  }
}

void BM_BlockProjection(benchmark::State& state) {
  SymplecticSpace V(static_cast<int>(state.range(0)));
  DecompositionEngine engine(V);
  Rng rng(3);
  Tensor sigma = random_symmetric(V, rng);
  SpinorForm phi = apply_sigma(V, sigma, engine.sector(2, 1).block_element(1, 0));
  for (auto _ : state) {
    SpinorForm top = engine.project(phi, 3, 1);
    benchmark::DoNotOptimize(top.is_zero());
  }
}

void BM_CurvatureAction(benchmark::State& state) {
  SymplecticSpace V(static_cast<int>(state.range(0)));
  Rng rng(5);
  Tensor ext = extended_ricci(V, random_symmetric(V, rng));
  SpinorForm phi = sample_form(V, 3, 6);
  for (auto _ : state) {
    SpinorForm image = apply_curvature_tensor(V, ext, phi);
    benchmark::DoNotOptimize(image.is_zero());
  }
}

}  // namespace

BENCHMARK(BM_SectorBasisBuild)->Arg(2)->Arg(3);
BENCHMARK(BM_OperatorApply)->Arg(2)->Arg(3);
BENCHMARK(BM_SectorDecompositionBuild)->Arg(2)->Arg(3);
BENCHMARK(BM_BlockProjection)->Arg(2)->Arg(3);
BENCHMARK(BM_CurvatureAction)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
