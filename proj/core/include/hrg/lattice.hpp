// Torus lattice graph families.
//
// Vertices are coordinate tuples on a discrete torus Z_M^dim, kept only when
// the coordinate sum mod M hits one of a few chosen residues ("levels"); the
// level is the vertex's part.  Two vertices are adjacent when the higher
// level's tuple minus the lower level's tuple is a 0/1 vector whose number of
// ones equals the level gap.  Under that rule every maximal clique picks one
// vertex per level, so the clique complex is a pure partite complex.

#pragma once

#include <cstdint>
#include <vector>

#include "hrg/multipartite.hpp"

namespace hrg {

// A lattice vertex, decoded: its coordinate tuple and its level (the
// coordinate sum mod the torus modulus, always one of the graph's levels).
struct TorusPoint {
  std::vector<int> coords;
  int level = 0;
};

// Staircase torus: tuples in Z_{nk}^n whose coordinate sum mod nk lies in
// {0, ..., n-1}, one part per sum.  Parts have (nk)^(n-1) vertices each and
// every vertex has degree 2^n - 2.  Requires n >= 3 and k >= 1; throws
// CapacityError when the vertex count exceeds `cap` (default capacity if
// cap < 0).  Vertex labels are the comma-joined coordinates.
PartiteGraph stair_graph(int n, int k, std::int64_t cap = -1);

// Three-level torus: tuples in Z_{3rk}^{3r} with coordinate sum mod 3rk in
// {0, r, 2r}.  The level gaps are r, r, and 2r, so vertices have degree
// 2*binomial(3r, r) and every edge lies in binomial(2r, r) triangles; the
// graph induced on a vertex's neighborhood is a bipartite double cover of a
// Kneser graph.  three_level_graph(1, k) equals stair_graph(3, k).
PartiteGraph three_level_graph(int r, int k, std::int64_t cap = -1);

// Decode a vertex id of the named graph back to its coordinates.  Throws
// InvalidParamsError when the id is out of range.
TorusPoint stair_point(int n, int k, VertexId v);
TorusPoint three_level_point(int r, int k, VertexId v);

// Encode a coordinate tuple to its vertex id in the named graph.  Throws
// InvalidParamsError when the tuple has the wrong length, an entry outside
// [0, modulus), or a coordinate sum that is not one of the graph's levels.
VertexId stair_vertex(int n, int k, const std::vector<int>& coords);
VertexId three_level_vertex(int r, int k, const std::vector<int>& coords);

}  // namespace hrg
