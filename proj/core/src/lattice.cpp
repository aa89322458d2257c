#include "hrg/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "hrg/errors.hpp"

namespace hrg {

namespace {

struct LevelTorus {
  std::int64_t modulus = 0;
  int dim = 0;
  std::vector<int> levels;  // ascending residues in [0, modulus)
};

LevelTorus stair_shape(int n, int k) {
  if (n < 3) throw InvalidParamsError("staircase torus needs dimension >= 3");
  if (k < 1) throw InvalidParamsError("staircase torus needs k >= 1");
  LevelTorus t;
  t.modulus = static_cast<std::int64_t>(n) * k;
  t.dim = n;
  t.levels.resize(static_cast<std::size_t>(n));
  std::iota(t.levels.begin(), t.levels.end(), 0);
  return t;
}

LevelTorus three_level_shape(int r, int k) {
  if (r < 1) throw InvalidParamsError("three-level torus needs r >= 1");
  if (k < 1) throw InvalidParamsError("three-level torus needs k >= 1");
  LevelTorus t;
  t.modulus = 3ll * r * k;
  t.dim = 3 * r;
  t.levels = {0, r, 2 * r};
  return t;
}

// Vertices of one part are indexed by their last dim-1 coordinates (the
// first coordinate is forced by the part's level), so each part holds
// modulus^(dim-1) vertices.
std::int64_t part_extent(const LevelTorus& t) {
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max();
  std::int64_t size = 1;
  for (int i = 1; i < t.dim; ++i) {
    if (size > kLimit / t.modulus)
      throw CapacityError("torus coordinate space overflows vertex indexing");
    size *= t.modulus;
  }
  return size;
}

std::int64_t index_of(const LevelTorus& t, const std::vector<int>& coords) {
  std::int64_t idx = 0;
  for (int i = t.dim - 1; i >= 1; --i)
    idx = idx * t.modulus + coords[static_cast<std::size_t>(i)];
  return idx;
}

void fill_coords(const LevelTorus& t, int part, std::int64_t idx,
                 std::vector<int>* coords) {
  coords->assign(static_cast<std::size_t>(t.dim), 0);
  std::int64_t rest = 0;
  for (int i = 1; i < t.dim; ++i) {
    const int c = static_cast<int>(idx % t.modulus);
    (*coords)[static_cast<std::size_t>(i)] = c;
    rest += c;
    idx /= t.modulus;
  }
  const std::int64_t lead =
      ((t.levels[static_cast<std::size_t>(part)] - rest) % t.modulus +
       t.modulus) %
      t.modulus;
  (*coords)[0] = static_cast<int>(lead);
}

std::string label_of(const std::vector<int>& coords) {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords[i]);
  }
  return s;
}

PartiteGraph build_level_torus(const LevelTorus& t, std::int64_t cap) {
  const std::int64_t resolved_cap = cap < 0 ? default_capacity() : cap;
  if (t.dim > 62)
    throw CapacityError("torus dimension exceeds the supported 62");
  const std::int64_t extent = part_extent(t);
  const int nlevels = static_cast<int>(t.levels.size());
  if (extent > resolved_cap / nlevels)
    throw CapacityError("torus vertex count exceeds the configured capacity");

  std::vector<std::vector<std::uint64_t>> masks_by_ones(
      static_cast<std::size_t>(t.dim) + 1);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << t.dim); ++s)
    masks_by_ones[static_cast<std::size_t>(std::popcount(s))].push_back(s);

  PartiteGraphBuilder b(
      std::vector<std::int64_t>(static_cast<std::size_t>(nlevels), extent),
      resolved_cap);
  std::vector<int> x;
  std::vector<int> y;
  for (int p = 0; p < nlevels; ++p) {
    const VertexId base = b.first_vertex_of(p);
    for (std::int64_t idx = 0; idx < extent; ++idx) {
      fill_coords(t, p, idx, &x);
      b.set_label(base + static_cast<VertexId>(idx), label_of(x));
      for (int q = p + 1; q < nlevels; ++q) {
        const int ones = t.levels[static_cast<std::size_t>(q)] -
                         t.levels[static_cast<std::size_t>(p)];
        if (ones > t.dim) continue;
        for (const std::uint64_t mask :
             masks_by_ones[static_cast<std::size_t>(ones)]) {
          y = x;
          for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
            const int i = std::countr_zero(bits);
            auto& c = y[static_cast<std::size_t>(i)];
            c = static_cast<int>((c + 1) % t.modulus);
          }
          b.add_edge(base + static_cast<VertexId>(idx),
                     b.first_vertex_of(q) +
                         static_cast<VertexId>(index_of(t, y)));
        }
      }
    }
  }
  return b.build();
}

TorusPoint point_of(const LevelTorus& t, VertexId v) {
  const std::int64_t extent = part_extent(t);
  const auto nlevels = static_cast<std::int64_t>(t.levels.size());
  if (v < 0 || v >= nlevels * extent)
    throw InvalidParamsError("vertex id is outside the torus graph");
  const int part = static_cast<int>(v / extent);
  TorusPoint pt;
  pt.level = t.levels[static_cast<std::size_t>(part)];
  fill_coords(t, part, v % extent, &pt.coords);
  return pt;
}

VertexId vertex_of(const LevelTorus& t, const std::vector<int>& coords) {
  if (static_cast<int>(coords.size()) != t.dim)
    throw InvalidParamsError("coordinate tuple has the wrong length");
  std::int64_t sum = 0;
  for (const int c : coords) {
    if (c < 0 || c >= t.modulus)
      throw InvalidParamsError("coordinate outside [0, modulus)");
    sum += c;
  }
  const int level = static_cast<int>(sum % t.modulus);
  const auto it = std::find(t.levels.begin(), t.levels.end(), level);
  if (it == t.levels.end())
    throw InvalidParamsError(
        "coordinate sum does not land on a level of the graph");
  const auto part = static_cast<std::int64_t>(it - t.levels.begin());
  return static_cast<VertexId>(part * part_extent(t) + index_of(t, coords));
}

}  // namespace

PartiteGraph stair_graph(int n, int k, std::int64_t cap) {
  return build_level_torus(stair_shape(n, k), cap);
}

PartiteGraph three_level_graph(int r, int k, std::int64_t cap) {
  return build_level_torus(three_level_shape(r, k), cap);
}

TorusPoint stair_point(int n, int k, VertexId v) {
  return point_of(stair_shape(n, k), v);
}

TorusPoint three_level_point(int r, int k, VertexId v) {
  return point_of(three_level_shape(r, k), v);
}

VertexId stair_vertex(int n, int k, const std::vector<int>& coords) {
  return vertex_of(stair_shape(n, k), coords);
}

VertexId three_level_vertex(int r, int k, const std::vector<int>& coords) {
  return vertex_of(three_level_shape(r, k), coords);
}

}  // namespace hrg
