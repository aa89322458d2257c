// Deterministic random instance generators shared by property tests.  All
// draws go through a caller-owned std::mt19937 so fixed seeds reproduce.

#pragma once

#include <random>
#include <vector>

#include "hrg/multipartite.hpp"

namespace hrg::testsupport {

inline int uniform_int(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Union of `ncliques` random top cliques (one vertex per part), plus one
/// covering clique through every vertex left isolated.  For 3 parts the
/// result is pure by construction (every edge and triangle sits in a top
/// clique); for more parts callers should retry until is_pure() agrees.
inline PartiteGraph random_clique_union(std::mt19937& rng,
                                        const std::vector<std::int64_t>& sizes,
                                        int ncliques) {
  const int nparts = static_cast<int>(sizes.size());
  PartiteGraphBuilder b(sizes);
  std::vector<char> covered(static_cast<std::size_t>(b.total_vertices()), 0);

  const auto add_top_clique = [&](const std::vector<VertexId>& members) {
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        b.add_edge(members[i], members[j]);
    for (const VertexId v : members) covered[static_cast<std::size_t>(v)] = 1;
  };
  const auto random_member = [&](int p) {
    return static_cast<VertexId>(
        b.first_vertex_of(p) +
        uniform_int(rng, 0, static_cast<int>(sizes[static_cast<std::size_t>(p)]) - 1));
  };

  std::vector<VertexId> members(static_cast<std::size_t>(nparts));
  for (int c = 0; c < ncliques; ++c) {
    for (int p = 0; p < nparts; ++p)
      members[static_cast<std::size_t>(p)] = random_member(p);
    add_top_clique(members);
  }
  for (VertexId v = 0; v < b.total_vertices(); ++v) {
    if (covered[static_cast<std::size_t>(v)]) continue;
    for (int p = 0; p < nparts; ++p)
      members[static_cast<std::size_t>(p)] = random_member(p);
    int pv = 0;
    while (v >= b.first_vertex_of(pv + 1)) ++pv;
    members[static_cast<std::size_t>(pv)] = v;
    add_top_clique(members);
  }
  return b.build();
}

/// Random pure multipartite graph: retries random_clique_union until the
/// purity certifier passes (immediate for 3 parts).
inline PartiteGraph random_pure_partite(std::mt19937& rng,
                                        const std::vector<std::int64_t>& sizes,
                                        int ncliques) {
  for (;;) {
    PartiteGraph g = random_clique_union(rng, sizes, ncliques);
    if (is_pure(g).ok) return g;
  }
}

/// Connected d-regular bipartite graph on n+n vertices built from d random
/// perfect matchings, resampled until simple and connected.
inline PartiteGraph random_regular_bipartite(std::mt19937& rng, int n, int d) {
  for (;;) {
    PartiteGraphBuilder b({n, n});
    std::vector<VertexId> right(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      right[static_cast<std::size_t>(i)] = static_cast<VertexId>(n + i);
    for (int m = 0; m < d; ++m) {
      std::shuffle(right.begin(), right.end(), rng);
      for (int i = 0; i < n; ++i)
        b.add_edge(static_cast<VertexId>(i), right[static_cast<std::size_t>(i)]);
    }
    PartiteGraph g = b.build();
    if (g.duplicate_edges_removed() == 0 && is_connected(g)) return g;
  }
}

}  // namespace hrg::testsupport
