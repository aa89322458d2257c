// Group-engine throughput: element closure, coset sweeps, and axiom checks.

#include <benchmark/benchmark.h>

#include "hrg/cosetgeom.hpp"
#include "hrg/groups.hpp"

namespace {

void BM_GroupClosureAffine(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const hrg::FiniteGroupHandle g = hrg::affine_group(3, k);
  std::size_t order = 0;
  for (auto _ : state) {
    std::vector<hrg::GroupElem> elems = hrg::group_elements(g);
    order = elems.size();
    benchmark::DoNotOptimize(elems);
  }
  state.counters["order"] = static_cast<double>(order);
}
BENCHMARK(BM_GroupClosureAffine)->Arg(2)->Arg(8)->Arg(16);

void BM_GroupClosureEl(benchmark::State& state) {
  const hrg::FiniteGroupHandle g = hrg::el_group(3, 2, 2);
  std::size_t order = 0;
  for (auto _ : state) {
    std::vector<hrg::GroupElem> elems = hrg::group_elements(g);
    order = elems.size();
    benchmark::DoNotOptimize(elems);
  }
  state.counters["order"] = static_cast<double>(order);
}
BENCHMARK(BM_GroupClosureEl);

void BM_CosetSweep(benchmark::State& state) {
  const hrg::FiniteGroupHandle g = hrg::affine_group(3, static_cast<int>(state.range(0)));
  const std::vector<hrg::GroupElem> k0 =
      hrg::subgroup_closure(g, hrg::standard_subgroups(g)[0]);
  for (auto _ : state) benchmark::DoNotOptimize(hrg::cosets(g, k0));
}
BENCHMARK(BM_CosetSweep)->Arg(4)->Arg(8);

void BM_SgsAxioms(benchmark::State& state) {
  const hrg::FiniteGroupHandle g = hrg::affine_group(3, 2);
  std::vector<std::vector<hrg::GroupElem>> subgroups;
  for (const auto& gens : hrg::standard_subgroups(g))
    subgroups.push_back(hrg::subgroup_closure(g, gens));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        hrg::check_sgs_axioms(g, subgroups, /*include_disjoint_pairs=*/true));
}
BENCHMARK(BM_SgsAxioms);

}  // namespace
