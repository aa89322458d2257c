// Construction throughput: lattice tori, coset complexes, products, and
// symmetrizations.

#include <benchmark/benchmark.h>

#include "hrg/cosetgeom.hpp"
#include "hrg/lattice.hpp"
#include "hrg/multipartite.hpp"
#include "hrg/product.hpp"

namespace {

void BM_StairTorus(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::int64_t vertices = 0;
  for (auto _ : state) {
    hrg::PartiteGraph g = hrg::stair_graph(3, k);
    vertices = g.num_vertices();
    benchmark::DoNotOptimize(g);
  }
  state.counters["vertices"] = static_cast<double>(vertices);
}
BENCHMARK(BM_StairTorus)->Arg(2)->Arg(6)->Arg(12);

void BM_ThreeLevelTorus(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hrg::three_level_graph(r, 1));
}
BENCHMARK(BM_ThreeLevelTorus)->Arg(1)->Arg(2);

void BM_AffineCosetComplex(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hrg::affine_quotient_complex(3, k));
}
BENCHMARK(BM_AffineCosetComplex)->Arg(2)->Arg(4)->Arg(8);

void BM_ElCosetComplex(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(hrg::el_quotient_complex(3, 2, 2));
}
BENCHMARK(BM_ElCosetComplex);

void BM_KnightCycleComplex(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(hrg::knight_cycle_complex());
}
BENCHMARK(BM_KnightCycleComplex);

void BM_PartiteProduct(benchmark::State& state) {
  const hrg::PartiteGraph a = hrg::stair_graph(3, 2);
  const hrg::PartiteGraph b = hrg::stair_graph(3, static_cast<int>(state.range(0)));
  std::int64_t vertices = 0;
  for (auto _ : state) {
    hrg::PartiteGraph p = hrg::partite_product(a, b);
    vertices = p.num_vertices();
    benchmark::DoNotOptimize(p);
  }
  state.counters["vertices"] = static_cast<double>(vertices);
}
BENCHMARK(BM_PartiteProduct)->Arg(2)->Arg(4);

hrg::PartiteGraph complete_multipartite(const std::vector<std::int64_t>& sizes) {
  hrg::PartiteGraphBuilder builder(sizes);
  for (std::size_t p = 0; p + 1 < sizes.size(); ++p)
    for (std::size_t r = p + 1; r < sizes.size(); ++r)
      for (std::int64_t i = 0; i < sizes[p]; ++i)
        for (std::int64_t j = 0; j < sizes[r]; ++j)
          builder.add_edge(builder.first_vertex_of(static_cast<int>(p)) + i,
                           builder.first_vertex_of(static_cast<int>(r)) + j);
  return std::move(builder).build();
}

void BM_Symmetrize(benchmark::State& state) {
  const hrg::PartiteGraph base = complete_multipartite({1, 2, 1, 2, 2});
  const hrg::PermGroup dihedral(5, {{1, 2, 3, 4, 0}, {1, 0, 4, 3, 2}});
  std::int64_t vertices = 0;
  for (auto _ : state) {
    hrg::PartiteGraph x = hrg::symmetrize(base, dihedral);
    vertices = x.num_vertices();
    benchmark::DoNotOptimize(x);
  }
  state.counters["vertices"] = static_cast<double>(vertices);
}
BENCHMARK(BM_Symmetrize);

void BM_DegreeProfile(benchmark::State& state) {
  const hrg::PartiteGraph g = hrg::knight_cycle_complex().host;
  for (auto _ : state) benchmark::DoNotOptimize(hrg::degree_profile(g));
}
BENCHMARK(BM_DegreeProfile);

void BM_TypeRegularity(benchmark::State& state) {
  const hrg::PartiteGraph g = hrg::el_quotient_complex(3, 2, 2).host;
  for (auto _ : state) benchmark::DoNotOptimize(hrg::type_regularity(g));
}
BENCHMARK(BM_TypeRegularity);

}  // namespace
