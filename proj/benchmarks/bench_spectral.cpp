// Spectral throughput: skeleton eigenvalues and full link certificates.

#include <benchmark/benchmark.h>

#include "hrg/cosetgeom.hpp"
#include "hrg/lattice.hpp"
#include "hrg/spectral.hpp"

namespace {

void BM_TransitionLambda2(benchmark::State& state) {
  const hrg::PartiteGraph g = hrg::stair_graph(3, static_cast<int>(state.range(0)));
  const hrg::WeightedSkeleton w = hrg::uniform_weights(g);
  for (auto _ : state) benchmark::DoNotOptimize(hrg::transition_lambda2(w));
  state.counters["vertices"] = static_cast<double>(g.num_vertices());
}
BENCHMARK(BM_TransitionLambda2)->Arg(2)->Arg(4)->Arg(8);

void BM_HdxCertificate(benchmark::State& state) {
  const hrg::PartiteGraph g = hrg::stair_graph(3, 3);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hrg::hdx_certificate(g, 0.51, 1e-9, jobs));
}
BENCHMARK(BM_HdxCertificate)->Arg(1)->Arg(2)->Arg(4);

void BM_HdxCertificateCosetComplex(benchmark::State& state) {
  const hrg::PartiteGraph g = hrg::el_quotient_complex(3, 2, 2).host;
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hrg::hdx_certificate(g, 0.7072, 1e-9, jobs));
}
BENCHMARK(BM_HdxCertificateCosetComplex)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
