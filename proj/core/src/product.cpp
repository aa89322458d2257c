#include "hrg/product.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace hrg {
namespace {

std::string tag_of(const PartiteGraph& g, VertexId v) {
  const std::string& l = g.label(v);
  return l.empty() ? std::to_string(v) : l;
}

bool is_permutation(const std::vector<int>& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);
  for (const int x : p) {
    if (x < 0 || x >= degree || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

std::int64_t small_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t apply_to_mask(const std::vector<int>& perm, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask) {
    const int b = std::countr_zero(mask);
    out |= std::uint64_t{1} << perm[static_cast<std::size_t>(b)];
    mask &= mask - 1;
  }
  return out;
}

/// Orbit of `start` under the generators acting on bitmask subsets.
std::unordered_set<std::uint64_t> subset_orbit(const PermGroup& h,
                                               std::uint64_t start) {
  std::unordered_set<std::uint64_t> orbit{start};
  std::vector<std::uint64_t> stack{start};
  const std::uint64_t cap =
      static_cast<std::uint64_t>(default_capacity());
  while (!stack.empty()) {
    const std::uint64_t m = stack.back();
    stack.pop_back();
    for (const auto& gen : h.generators()) {
      const std::uint64_t im = apply_to_mask(gen, m);
      if (orbit.insert(im).second) {
        if (orbit.size() > cap)
          throw CapacityError("subset orbit exceeds capacity");
        stack.push_back(im);
      }
    }
  }
  return orbit;
}

/// Per-part vertex lists plus a position index, shared by the product maps.
struct PartIndex {
  std::vector<std::vector<VertexId>> parts;
  std::unordered_map<VertexId, std::int64_t> position;

  explicit PartIndex(const PartiteGraph& g) {
    parts.reserve(static_cast<std::size_t>(g.nparts()));
    for (int p = 0; p < g.nparts(); ++p) {
      parts.push_back(g.part(p));
      const auto& vec = parts.back();
      for (std::size_t i = 0; i < vec.size(); ++i)
        position.emplace(vec[i], static_cast<std::int64_t>(i));
    }
  }
};

/// Edges of g grouped by type pair (p,q), p<q, endpoints oriented (p,q).
std::vector<std::vector<std::pair<VertexId, VertexId>>> edges_by_pair(
    const PartiteGraph& g) {
  const int n = g.nparts();
  std::vector<std::vector<std::pair<VertexId, VertexId>>> by_pair(
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const VertexId u : g.vertices()) {
    const int tu = g.type_of(u);
    for (const VertexId w : g.neighbors(u)) {
      if (w < u) continue;
      const int tw = g.type_of(w);
      const int p = std::min(tu, tw), q = std::max(tu, tw);
      by_pair[static_cast<std::size_t>(p) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(q)]
          .emplace_back(tu < tw ? u : w, tu < tw ? w : u);
    }
  }
  return by_pair;
}

}  // namespace

// --- PermGroup ----------------------------------------------------------------

PermGroup::PermGroup(int degree, std::vector<std::vector<int>> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree_ < 1) throw InvalidParamsError("permutation degree must be >= 1");
  for (const auto& g : gens_)
    if (!is_permutation(g, degree_))
      throw InvalidParamsError("generator is not a permutation of the domain");
}

const std::vector<std::vector<int>>& PermGroup::elements() const {
  if (closed_) return elements_;
  std::vector<int> identity(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) identity[static_cast<std::size_t>(i)] = i;

  std::set<std::vector<int>> seen{identity};
  elements_.clear();
  elements_.push_back(identity);
  std::vector<std::vector<int>> level{identity};
  const auto cap = static_cast<std::size_t>(default_capacity());
  while (!level.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& p : level) {
      for (const auto& g : gens_) {
        std::vector<int> q(static_cast<std::size_t>(degree_));
        for (int i = 0; i < degree_; ++i)
          q[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(
              g[static_cast<std::size_t>(i)])];
        if (!seen.count(q)) next.insert(std::move(q));
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& q : level) {
      seen.insert(q);
      elements_.push_back(q);
      if (elements_.size() > cap)
        throw CapacityError("group order exceeds capacity");
    }
  }
  closed_ = true;
  return elements_;
}

// --- products -------------------------------------------------------------------

PartiteGraph partite_product(const PartiteGraph& g1, const PartiteGraph& g2,
                             std::int64_t cap) {
  const int n = g1.nparts();
  if (n != g2.nparts())
    throw PartCountMismatchError(
        "factors have " + std::to_string(n) + " and " +
        std::to_string(g2.nparts()) + " parts");
  if (n == 0) return PartiteGraph{};

  const PartIndex idx1(g1), idx2(g2);
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p)
    sizes[static_cast<std::size_t>(p)] = g1.part_size(p) * g2.part_size(p);

  PartiteGraphBuilder b(sizes, cap);
  const auto product_id = [&](int p, VertexId v1, VertexId v2) {
    const std::int64_t pos = idx1.position.at(v1) * g2.part_size(p) +
                             idx2.position.at(v2);
    return static_cast<VertexId>(b.first_vertex_of(p) + pos);
  };

  const auto pairs2 = edges_by_pair(g2);
  for (const VertexId u : g1.vertices()) {
    const int tu = g1.type_of(u);
    for (const VertexId w : g1.neighbors(u)) {
      if (w < u) continue;
      const int tw = g1.type_of(w);
      const int p = std::min(tu, tw), q = std::max(tu, tw);
      const VertexId x1 = tu < tw ? u : w;
      const VertexId y1 = tu < tw ? w : u;
      for (const auto& [x2, y2] :
           pairs2[static_cast<std::size_t>(p) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(q)])
        b.add_edge(product_id(p, x1, x2), product_id(q, y1, y2));
    }
  }

  for (int p = 0; p < n; ++p)
    for (const VertexId v1 : idx1.parts[static_cast<std::size_t>(p)])
      for (const VertexId v2 : idx2.parts[static_cast<std::size_t>(p)])
        b.set_label(product_id(p, v1, v2),
                    tag_of(g1, v1) + "," + tag_of(g2, v2));
  return b.build();
}

std::pair<VertexId, VertexId> product_coordinates(const PartiteGraph& g1,
                                                  const PartiteGraph& g2,
                                                  VertexId v) {
  std::int64_t off = 0;
  for (int p = 0; p < g1.nparts(); ++p) {
    const std::int64_t s2 = g2.part_size(p);
    const std::int64_t block = g1.part_size(p) * s2;
    if (v < off + block) {
      const std::int64_t local = v - off;
      return {g1.part(p)[static_cast<std::size_t>(local / s2)],
              g2.part(p)[static_cast<std::size_t>(local % s2)]};
    }
    off += block;
  }
  throw InvalidParamsError("vertex id " + std::to_string(v) +
                           " outside the product");
}

PartiteGraph relabel(const PartiteGraph& g, const std::vector<int>& pi) {
  const int n = g.nparts();
  if (!is_permutation(pi, n))
    throw InvalidParamsError("not a permutation of the parts");

  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p)
    inv[static_cast<std::size_t>(pi[static_cast<std::size_t>(p)])] = p;

  std::vector<std::int64_t> sizes(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q)
    sizes[static_cast<std::size_t>(q)] =
        g.part_size(inv[static_cast<std::size_t>(q)]);

  PartiteGraphBuilder b(sizes);
  // New id of an old vertex: same position, in the part's new slot.
  std::unordered_map<VertexId, VertexId> to_new;
  for (int p = 0; p < n; ++p) {
    const auto old_part = g.part(p);
    const VertexId base =
        b.first_vertex_of(pi[static_cast<std::size_t>(p)]);
    for (std::size_t i = 0; i < old_part.size(); ++i)
      to_new.emplace(old_part[i], base + static_cast<VertexId>(i));
  }
  for (const VertexId u : g.vertices()) {
    for (const VertexId w : g.neighbors(u))
      if (u < w) b.add_edge(to_new.at(u), to_new.at(w));
    const std::string& l = g.label(u);
    if (!l.empty()) b.set_label(to_new.at(u), l);
  }
  return b.build();
}

PartiteGraph symmetrize(const PartiteGraph& g, const PermGroup& h,
                        std::int64_t cap) {
  const int n = g.nparts();
  if (h.degree() != n)
    throw PartCountMismatchError("group degree " + std::to_string(h.degree()) +
                                 " vs " + std::to_string(n) + " parts");
  if (cap < 0) cap = default_capacity();

  const auto& elems = h.elements();
  std::int64_t projected = 0;
  for (int q = 0; q < n; ++q) {
    std::int64_t part = 1;
    for (const auto& pi : elems) {
      // relabel(g, pi) puts old part p in slot pi[p]; slot q holds pi^{-1}(q).
      int pre = 0;
      while (pi[static_cast<std::size_t>(pre)] != q) ++pre;
      const std::int64_t s = g.part_size(pre);
      if (s == 0) {
        part = 0;
        break;
      }
      if (part > cap / s) {
        part = cap + 1;
        break;
      }
      part *= s;
    }
    projected += std::min(part, cap + 1);
    if (projected > cap)
      throw CapacityError("projected symmetrization size exceeds capacity " +
                          std::to_string(cap));
  }

  PartiteGraph acc = relabel(g, elems[0]);
  for (std::size_t i = 1; i < elems.size(); ++i)
    acc = partite_product(acc, relabel(g, elems[i]), cap);
  return acc;
}

// --- set transitivity -----------------------------------------------------------

SetTransitivityResult is_set_transitive(const PermGroup& h) {
  const int n = h.degree();
  if (n < 2) throw InvalidParamsError("set transitivity needs degree >= 2");
  if (n > 63)
    throw InvalidParamsError("set transitivity limited to degree <= 63");
  SetTransitivityResult res;
  res.ok = true;
  for (int i = 1; i <= n - 1; ++i) {
    const std::uint64_t start = (std::uint64_t{1} << i) - 1;
    const auto orbit = subset_orbit(h, start);
    const bool one =
        static_cast<std::int64_t>(orbit.size()) == small_binomial(n, i);
    res.per_size.push_back(one);
    res.ok = res.ok && one;
  }
  return res;
}

SetTransitivityResult orbit_set_transitive_on(const PermGroup& h,
                                              const std::vector<int>& points) {
  if (points.empty()) throw InvalidParamsError("empty point list");
  if (h.degree() > 63)
    throw InvalidParamsError("set transitivity limited to degree <= 63");
  std::vector<int> pts = points;
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw InvalidParamsError("repeated point");
  for (const int p : pts)
    if (p < 0 || p >= h.degree())
      throw PointsOutsideDomainError("point " + std::to_string(p) +
                                     " outside the domain of the action");

  const int s = static_cast<int>(pts.size());
  SetTransitivityResult res;
  res.ok = true;
  for (int i = 1; i <= s; ++i) {
    std::uint64_t start = 0;
    for (int j = 0; j < i; ++j)
      start |= std::uint64_t{1} << pts[static_cast<std::size_t>(j)];
    const auto orbit = subset_orbit(h, start);

    // Walk all i-subsets of pts and ask whether each lies in that orbit.
    bool one = true;
    std::vector<int> comb(static_cast<std::size_t>(i));
    for (int j = 0; j < i; ++j) comb[static_cast<std::size_t>(j)] = j;
    for (;;) {
      std::uint64_t mask = 0;
      for (const int c : comb)
        mask |= std::uint64_t{1} << pts[static_cast<std::size_t>(c)];
      if (!orbit.count(mask)) {
        one = false;
        break;
      }
      int j = i - 1;
      while (j >= 0 && comb[static_cast<std::size_t>(j)] == s - i + j) --j;
      if (j < 0) break;
      ++comb[static_cast<std::size_t>(j)];
      for (int l = j + 1; l < i; ++l)
        comb[static_cast<std::size_t>(l)] =
            comb[static_cast<std::size_t>(l - 1)] + 1;
    }
    res.per_size.push_back(one);
    res.ok = res.ok && one;
  }
  return res;
}

}  // namespace hrg
