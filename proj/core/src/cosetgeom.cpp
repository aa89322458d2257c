// Coset complexes: partite graphs on the left cosets of a subgroup system,
// axiom checks for such systems, links rebuilt from group data, and the
// family presets.

#include "hrg/cosetgeom.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <iterator>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "hrg/errors.hpp"

namespace hrg {
namespace {

std::int64_t resolved_cap(std::int64_t cap) {
  return cap < 0 ? default_capacity() : cap;
}

std::vector<GroupElem> sorted_unique(std::vector<GroupElem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<GroupElem> intersect_sorted(const std::vector<GroupElem>& a,
                                        const std::vector<GroupElem>& b) {
  std::vector<GroupElem> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// Validates the handle and subgroup sets and returns sorted copies.
std::vector<std::vector<GroupElem>> checked_subgroup_sets(
    const FiniteGroupHandle& g,
    const std::vector<std::vector<GroupElem>>& subgroup_elems) {
  if (!g.ops) throw InvalidParamsError("group handle has no operations");
  if (subgroup_elems.empty())
    throw InvalidParamsError("at least one subgroup is required");
  const GroupElem e = g.ops->identity();
  std::vector<std::vector<GroupElem>> subs;
  subs.reserve(subgroup_elems.size());
  for (const auto& raw : subgroup_elems) {
    if (raw.empty()) throw InvalidParamsError("subgroup element set is empty");
    for (const auto& x : raw)
      if (x.size() != g.ops->encoded_size())
        throw InvalidParamsError(
            "subgroup element with wrong encoding length for this group");
    std::vector<GroupElem> s = sorted_unique(raw);
    if (!std::binary_search(s.begin(), s.end(), e))
      throw InvalidParamsError("subgroup set does not contain the identity");
    subs.push_back(std::move(s));
  }
  return subs;
}

// Per-type coset tables of one group universe: canonical (minimum-encoding)
// representatives in discovery order plus an element -> coset ordinal map.
struct CosetTables {
  std::vector<std::vector<GroupElem>> reps;                      // per type
  std::vector<std::unordered_map<GroupElem, VertexId>> ordinal;  // per type
};

CosetTables sweep_cosets(const FiniteGroupHandle& g,
                         const std::vector<GroupElem>& universe_sorted,
                         const std::vector<std::vector<GroupElem>>& subs) {
  const int ntypes = static_cast<int>(subs.size());
  CosetTables t;
  t.reps.resize(static_cast<std::size_t>(ntypes));
  t.ordinal.resize(static_cast<std::size_t>(ntypes));
  for (int p = 0; p < ntypes; ++p) {
    auto& reps = t.reps[static_cast<std::size_t>(p)];
    auto& ord = t.ordinal[static_cast<std::size_t>(p)];
    ord.reserve(universe_sorted.size() * 2);
    for (const GroupElem& x : universe_sorted) {
      if (ord.find(x) != ord.end()) continue;
      const VertexId o = static_cast<VertexId>(reps.size());
      reps.push_back(x);
      for (const GroupElem& k : subs[static_cast<std::size_t>(p)]) {
        auto [it, fresh] = ord.emplace(g.ops->multiply(x, k), o);
        if (!fresh && it->second != o)
          throw InvalidParamsError(
              "subgroup set is not closed under multiplication");
      }
    }
    if (ord.size() != universe_sorted.size())
      throw InvalidParamsError(
          "subgroup set contains elements outside the group");
  }
  return t;
}

CosetComplex assemble_from_tables(const FiniteGroupHandle& g,
                                  std::vector<std::vector<GroupElem>> subs,
                                  const std::vector<GroupElem>& universe,
                                  CosetTables tables, std::int64_t cap) {
  const int ntypes = static_cast<int>(subs.size());
  std::vector<std::int64_t> sizes;
  sizes.reserve(static_cast<std::size_t>(ntypes));
  for (const auto& r : tables.reps)
    sizes.push_back(static_cast<std::int64_t>(r.size()));
  PartiteGraphBuilder b(sizes, cap);
  std::vector<VertexId> firsts(static_cast<std::size_t>(ntypes));
  for (int p = 0; p < ntypes; ++p)
    firsts[static_cast<std::size_t>(p)] = b.first_vertex_of(p);
  for (int p = 0; p < ntypes; ++p) {
    const auto& reps = tables.reps[static_cast<std::size_t>(p)];
    for (std::size_t o = 0; o < reps.size(); ++o)
      b.set_label(firsts[static_cast<std::size_t>(p)] + static_cast<VertexId>(o),
                  g.ops->describe(reps[o]));
  }
  for (const GroupElem& x : universe) {
    std::array<VertexId, 16> at{};
    for (int p = 0; p < ntypes; ++p)
      at[static_cast<std::size_t>(p)] =
          firsts[static_cast<std::size_t>(p)] +
          tables.ordinal[static_cast<std::size_t>(p)].at(x);
    for (int i = 0; i < ntypes; ++i)
      for (int j = i + 1; j < ntypes; ++j)
        b.add_edge(at[static_cast<std::size_t>(i)],
                   at[static_cast<std::size_t>(j)]);
  }

  CosetComplex out;
  out.host = b.build();
  out.group = g;
  out.subgroups = std::move(subs);
  out.coset_index.resize(static_cast<std::size_t>(ntypes));
  for (int p = 0; p < ntypes; ++p) {
    auto& idx = out.coset_index[static_cast<std::size_t>(p)];
    const auto& reps = tables.reps[static_cast<std::size_t>(p)];
    idx.reserve(reps.size() * 2);
    for (std::size_t o = 0; o < reps.size(); ++o)
      idx.emplace(reps[o],
                  firsts[static_cast<std::size_t>(p)] + static_cast<VertexId>(o));
  }
  return out;
}

CosetComplex generic_build(const FiniteGroupHandle& g,
                           std::vector<std::vector<GroupElem>> subs,
                           std::int64_t cap) {
  std::vector<GroupElem> universe = group_elements(g, cap);
  std::sort(universe.begin(), universe.end());
  CosetTables tables = sweep_cosets(g, universe, subs);
  return assemble_from_tables(g, std::move(subs), universe, std::move(tables),
                              cap);
}

// ---------------------------------------------------------------------------
// Direct products: when every subgroup splits as a product of factor
// subgroups, the complex is assembled from the two factor coset tables and
// their intersection patterns, so the product group is never materialised.

struct FactorSide {
  CosetTables tables;
  // meets[i][j] (i < j): flat row-major boolean matrix, entry (a, c) true
  // when the a-th type-i coset intersects the c-th type-j coset.
  std::map<std::pair<int, int>, std::vector<char>> meets;
};

FactorSide factor_side(const FiniteGroupHandle& f,
                       const std::vector<std::vector<GroupElem>>& subs,
                       std::int64_t cap) {
  std::vector<GroupElem> universe = group_elements(f, cap);
  std::sort(universe.begin(), universe.end());
  FactorSide side;
  side.tables = sweep_cosets(f, universe, subs);
  const int ntypes = static_cast<int>(subs.size());
  for (int i = 0; i < ntypes; ++i)
    for (int j = i + 1; j < ntypes; ++j) {
      const std::size_t nj = side.tables.reps[static_cast<std::size_t>(j)].size();
      std::vector<char> m(
          side.tables.reps[static_cast<std::size_t>(i)].size() * nj, 0);
      for (const GroupElem& x : universe) {
        const VertexId a = side.tables.ordinal[static_cast<std::size_t>(i)].at(x);
        const VertexId c = side.tables.ordinal[static_cast<std::size_t>(j)].at(x);
        m[static_cast<std::size_t>(a) * nj + static_cast<std::size_t>(c)] = 1;
      }
      side.meets.emplace(std::make_pair(i, j), std::move(m));
    }
  return side;
}

std::vector<std::pair<VertexId, VertexId>> true_pairs(
    const std::vector<char>& m, std::size_t ncols) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t idx = 0; idx < m.size(); ++idx)
    if (m[idx])
      out.emplace_back(static_cast<VertexId>(idx / ncols),
                       static_cast<VertexId>(idx % ncols));
  return out;
}

// Attempts the factorised product build; returns nothing when some subgroup
// does not split as a product of factor subgroups.
std::optional<CosetComplex> product_build(
    const FiniteGroupHandle& g, std::vector<std::vector<GroupElem>> subs,
    std::int64_t cap) {
  const FiniteGroupHandle& fa = *g.factors[0];
  const FiniteGroupHandle& fb = *g.factors[1];
  const std::size_t la = fa.ops->encoded_size();
  const int ntypes = static_cast<int>(subs.size());

  std::vector<std::vector<GroupElem>> asubs, bsubs;
  for (const auto& s : subs) {
    std::vector<GroupElem> av, bv;
    av.reserve(s.size());
    bv.reserve(s.size());
    for (const GroupElem& x : s) {
      av.push_back(x.substr(0, la));
      bv.push_back(x.substr(la));
    }
    av = sorted_unique(std::move(av));
    bv = sorted_unique(std::move(bv));
    if (av.size() * bv.size() != s.size()) return std::nullopt;
    asubs.push_back(std::move(av));
    bsubs.push_back(std::move(bv));
  }

  FactorSide sa = factor_side(fa, asubs, cap);
  FactorSide sb = factor_side(fb, bsubs, cap);

  std::vector<std::int64_t> sizes;
  std::vector<std::size_t> nb(static_cast<std::size_t>(ntypes));
  for (int p = 0; p < ntypes; ++p) {
    const std::size_t na = sa.tables.reps[static_cast<std::size_t>(p)].size();
    nb[static_cast<std::size_t>(p)] =
        sb.tables.reps[static_cast<std::size_t>(p)].size();
    sizes.push_back(static_cast<std::int64_t>(na * nb[static_cast<std::size_t>(p)]));
  }
  PartiteGraphBuilder b(sizes, cap);
  std::vector<VertexId> firsts(static_cast<std::size_t>(ntypes));
  for (int p = 0; p < ntypes; ++p)
    firsts[static_cast<std::size_t>(p)] = b.first_vertex_of(p);

  // Vertex (p, a, bb) is the coset with representative rep_a ++ rep_bb; that
  // concatenation is also the minimum encoding over the product coset, since
  // the two halves can be minimised independently.
  CosetComplex out;
  out.coset_index.resize(static_cast<std::size_t>(ntypes));
  for (int p = 0; p < ntypes; ++p) {
    const auto& ra = sa.tables.reps[static_cast<std::size_t>(p)];
    const auto& rb = sb.tables.reps[static_cast<std::size_t>(p)];
    auto& idx = out.coset_index[static_cast<std::size_t>(p)];
    idx.reserve(ra.size() * rb.size() * 2);
    for (std::size_t a = 0; a < ra.size(); ++a)
      for (std::size_t bb = 0; bb < rb.size(); ++bb) {
        const VertexId v = firsts[static_cast<std::size_t>(p)] +
                           static_cast<VertexId>(a * rb.size() + bb);
        GroupElem rep = ra[a] + rb[bb];
        b.set_label(v, g.ops->describe(rep));
        idx.emplace(std::move(rep), v);
      }
  }

  for (int i = 0; i < ntypes; ++i)
    for (int j = i + 1; j < ntypes; ++j) {
      const auto pa = true_pairs(sa.meets.at({i, j}),
                                 sa.tables.reps[static_cast<std::size_t>(j)].size());
      const auto pb = true_pairs(sb.meets.at({i, j}),
                                 sb.tables.reps[static_cast<std::size_t>(j)].size());
      const std::size_t nbi = nb[static_cast<std::size_t>(i)];
      const std::size_t nbj = nb[static_cast<std::size_t>(j)];
      for (const auto& [a, c] : pa)
        for (const auto& [bb, d] : pb)
          b.add_edge(firsts[static_cast<std::size_t>(i)] +
                         static_cast<VertexId>(
                             static_cast<std::size_t>(a) * nbi +
                             static_cast<std::size_t>(bb)),
                     firsts[static_cast<std::size_t>(j)] +
                         static_cast<VertexId>(
                             static_cast<std::size_t>(c) * nbj +
                             static_cast<std::size_t>(d)));
    }

  out.host = b.build();
  out.group = g;
  out.subgroups = std::move(subs);
  return out;
}

// ---------------------------------------------------------------------------
// 3x3 matrices over F_q[t]/t^2 with the standard subgroups: enumeration by
// breadth-first search on the coset space.  Right multiplication by the
// type-i subgroup acts on columns as
//     col_{i+2} += r * col_{i+1},   col_i += r1 * col_{i+1} + r2 * col_{i+2}
// (indices mod 3, coefficients ranging over the whole ring), so a coset has
// a unique representative obtained by minimising column i+2 and then column
// i; no subgroup enumeration is needed per coset.

struct ColumnReducer {
  int q = 0;

  // Bytes of (col_tgt + r1 * col_src1 + r2 * col_src2); coefficients are the
  // ring elements r1 = a0 + a1 t, r2 = b0 + b1 t.
  std::array<unsigned char, 6> shifted_column(const unsigned char* e, int tgt,
                                              int src1, int a0, int a1,
                                              int src2, int b0, int b1) const {
    std::array<unsigned char, 6> out{};
    for (int row = 0; row < 3; ++row) {
      const int t0 = (row * 3 + tgt) * 2;
      const int u0 = (row * 3 + src1) * 2;
      const int v0 = (row * 3 + src2) * 2;
      const int d0 = e[t0] + a0 * e[u0] + b0 * e[v0];
      const int d1 =
          e[t0 + 1] + a0 * e[u0 + 1] + a1 * e[u0] + b0 * e[v0 + 1] + b1 * e[v0];
      out[static_cast<std::size_t>(row * 2)] = static_cast<unsigned char>(d0 % q);
      out[static_cast<std::size_t>(row * 2 + 1)] =
          static_cast<unsigned char>(d1 % q);
    }
    return out;
  }

  void store_column(unsigned char* e, int col,
                    const std::array<unsigned char, 6>& bytes) const {
    for (int row = 0; row < 3; ++row) {
      e[(row * 3 + col) * 2] = bytes[static_cast<std::size_t>(row * 2)];
      e[(row * 3 + col) * 2 + 1] = bytes[static_cast<std::size_t>(row * 2 + 1)];
    }
  }

  GroupElem canonical(const GroupElem& x, int type) const {
    GroupElem e = x;
    auto* p = reinterpret_cast<unsigned char*>(e.data());
    const int ci = type, cm = (type + 1) % 3, ct = (type + 2) % 3;
    std::array<unsigned char, 6> best{};
    bool have = false;
    for (int a0 = 0; a0 < q; ++a0)
      for (int a1 = 0; a1 < q; ++a1) {
        const auto cand = shifted_column(p, ct, cm, a0, a1, cm, 0, 0);
        if (!have || cand < best) {
          best = cand;
          have = true;
        }
      }
    store_column(p, ct, best);
    have = false;
    for (int a0 = 0; a0 < q; ++a0)
      for (int a1 = 0; a1 < q; ++a1)
        for (int b0 = 0; b0 < q; ++b0)
          for (int b1 = 0; b1 < q; ++b1) {
            const auto cand = shifted_column(p, ci, cm, a0, a1, ct, b0, b1);
            if (!have || cand < best) {
              best = cand;
              have = true;
            }
          }
    store_column(p, ci, best);
    return e;
  }
};

CosetComplex elementary_enumeration_build(const FiniteGroupHandle& g,
                                          std::vector<std::vector<GroupElem>> subs,
                                          std::int64_t cap) {
  const std::int64_t q = g.params[1];
  const int ntypes = 3;
  // This strategy hinges on the subgroups acting by the column moves above:
  // require exactly the standard subgroups.
  const auto std_gens = standard_subgroups(g);
  for (int p = 0; p < ntypes; ++p) {
    const auto closure = sorted_unique(
        subgroup_closure(g, std_gens[static_cast<std::size_t>(p)], cap));
    if (closure != subs[static_cast<std::size_t>(p)])
      throw CapacityError(
          "group too large to materialise; coset-space enumeration supports "
          "only the standard subgroups");
  }

  const ColumnReducer reducer{static_cast<int>(q)};

  // Transversals of K_i ∩ K_j inside K_i: multiplying a coset representative
  // by them yields each neighbouring type-j coset exactly once.
  std::array<std::array<std::vector<GroupElem>, 3>, 3> transversal;
  for (int i = 0; i < ntypes; ++i)
    for (int j = 0; j < ntypes; ++j) {
      if (i == j) continue;
      const auto inter = intersect_sorted(subs[static_cast<std::size_t>(i)],
                                          subs[static_cast<std::size_t>(j)]);
      std::unordered_set<GroupElem> covered;
      covered.reserve(subs[static_cast<std::size_t>(i)].size() * 2);
      for (const GroupElem& k : subs[static_cast<std::size_t>(i)]) {
        if (covered.count(k)) continue;
        transversal[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
            .push_back(k);
        for (const GroupElem& h : inter) covered.insert(g.ops->multiply(k, h));
      }
    }

  std::array<std::vector<GroupElem>, 3> reps;
  std::array<std::unordered_map<GroupElem, VertexId>, 3> ordinal;
  std::deque<std::pair<int, VertexId>> frontier;
  std::int64_t total = 0;
  const std::int64_t rc = resolved_cap(cap);
  auto discover = [&](int type, GroupElem rep) -> VertexId {
    auto& ord = ordinal[static_cast<std::size_t>(type)];
    auto it = ord.find(rep);
    if (it != ord.end()) return it->second;
    if (++total > rc)
      throw CapacityError("coset-space enumeration exceeded capacity");
    const VertexId o =
        static_cast<VertexId>(reps[static_cast<std::size_t>(type)].size());
    reps[static_cast<std::size_t>(type)].push_back(rep);
    ord.emplace(std::move(rep), o);
    frontier.emplace_back(type, o);
    return o;
  };
  for (int p = 0; p < ntypes; ++p)
    discover(p, reducer.canonical(g.ops->identity(), p));

  // Edges are recorded once, from the endpoint of smaller type; every vertex
  // is expanded toward both other types, so both endpoints see each edge.
  std::map<std::pair<int, int>, std::vector<std::pair<VertexId, VertexId>>>
      edges;
  while (!frontier.empty()) {
    const auto [t, o] = frontier.front();
    frontier.pop_front();
    const GroupElem x = reps[static_cast<std::size_t>(t)][static_cast<std::size_t>(o)];
    for (int j = 0; j < ntypes; ++j) {
      if (j == t) continue;
      for (const GroupElem& tr :
           transversal[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)]) {
        const VertexId oj =
            discover(j, reducer.canonical(g.ops->multiply(x, tr), j));
        if (j > t) edges[{t, j}].emplace_back(o, oj);
      }
    }
  }

  std::vector<std::int64_t> sizes;
  for (int p = 0; p < ntypes; ++p)
    sizes.push_back(static_cast<std::int64_t>(reps[static_cast<std::size_t>(p)].size()));
  PartiteGraphBuilder b(sizes, cap);
  std::array<VertexId, 3> firsts{};
  for (int p = 0; p < ntypes; ++p)
    firsts[static_cast<std::size_t>(p)] = b.first_vertex_of(p);
  for (int p = 0; p < ntypes; ++p)
    for (std::size_t o = 0; o < reps[static_cast<std::size_t>(p)].size(); ++o)
      b.set_label(
          firsts[static_cast<std::size_t>(p)] + static_cast<VertexId>(o),
          g.ops->describe(reps[static_cast<std::size_t>(p)][o]));
  for (auto& [pair, list] : edges) {
    const VertexId fi = firsts[static_cast<std::size_t>(pair.first)];
    const VertexId fj = firsts[static_cast<std::size_t>(pair.second)];
    for (const auto& [o, oj] : list) b.add_edge(fi + o, fj + oj);
    list.clear();
    list.shrink_to_fit();
  }

  CosetComplex out;
  out.host = b.build();
  out.group = g;
  out.subgroups = std::move(subs);
  out.column_reduced_reps = true;
  out.coset_index.resize(static_cast<std::size_t>(ntypes));
  for (int p = 0; p < ntypes; ++p) {
    auto& idx = out.coset_index[static_cast<std::size_t>(p)];
    idx.reserve(reps[static_cast<std::size_t>(p)].size() * 2);
    for (std::size_t o = 0; o < reps[static_cast<std::size_t>(p)].size(); ++o)
      idx.emplace(reps[static_cast<std::size_t>(p)][o],
                  firsts[static_cast<std::size_t>(p)] + static_cast<VertexId>(o));
  }
  return out;
}

bool supports_column_reduction(const FiniteGroupHandle& g) {
  return g.family == GroupFamily::kTruncatedElementary && g.params.size() == 3 &&
         g.params[0] == 3 && g.params[2] == 2;
}

}  // namespace

GroupElem CosetComplex::canonical_rep(const GroupElem& x, int type) const {
  if (type < 0 || type >= static_cast<int>(subgroups.size()))
    throw InvalidParamsError("type index out of range");
  if (!group.ops || x.size() != group.ops->encoded_size())
    throw InvalidParamsError("element has the wrong encoding length");
  if (column_reduced_reps) {
    const ColumnReducer reducer{static_cast<int>(group.params[1])};
    return reducer.canonical(x, type);
  }
  const auto& sub = subgroups[static_cast<std::size_t>(type)];
  GroupElem best;
  for (const GroupElem& k : sub) {
    GroupElem cand = group.ops->multiply(x, k);
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

VertexId CosetComplex::coset_vertex(const GroupElem& x, int type) const {
  const GroupElem rep = canonical_rep(x, type);
  const auto& idx = coset_index[static_cast<std::size_t>(type)];
  const auto it = idx.find(rep);
  if (it == idx.end())
    throw InvalidParamsError("element does not label a coset of this complex");
  return it->second;
}

CosetComplex build_coset_complex(
    const FiniteGroupHandle& g,
    const std::vector<std::vector<GroupElem>>& subgroup_elems,
    std::int64_t cap) {
  std::vector<std::vector<GroupElem>> subs =
      checked_subgroup_sets(g, subgroup_elems);
  if (static_cast<int>(subs.size()) > 16)
    throw InvalidParamsError("at most 16 subgroups are supported");

  if (g.family == GroupFamily::kDirectProduct && g.factors.size() == 2) {
    auto built = product_build(g, subs, cap);
    if (built) return std::move(*built);
  }
  if (g.known_order && *g.known_order > resolved_cap(cap)) {
    if (supports_column_reduction(g))
      return elementary_enumeration_build(g, std::move(subs), cap);
    throw CapacityError(
        "group order exceeds capacity and no enumeration strategy applies");
  }
  return generic_build(g, std::move(subs), cap);
}

// ---------------------------------------------------------------------------
// Axioms.

namespace {

std::unordered_set<GroupElem> product_set(const FiniteGroupHandle& g,
                                          const std::vector<GroupElem>& a,
                                          const std::vector<GroupElem>& b) {
  if (static_cast<std::int64_t>(a.size()) *
          static_cast<std::int64_t>(b.size()) >
      50'000'000)
    throw CapacityError("subgroup product set too large");
  std::unordered_set<GroupElem> out;
  out.reserve(a.size() * b.size());
  for (const GroupElem& x : a)
    for (const GroupElem& y : b) out.insert(g.ops->multiply(x, y));
  return out;
}

std::vector<int> mask_bits(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

}  // namespace

SgsReport check_sgs_axioms(
    const FiniteGroupHandle& g,
    const std::vector<std::vector<GroupElem>>& subgroup_elems,
    bool include_disjoint_pairs, std::int64_t cap) {
  std::vector<std::vector<GroupElem>> subs =
      checked_subgroup_sets(g, subgroup_elems);
  const int n = static_cast<int>(subs.size());
  if (n < 2) throw InvalidParamsError("axioms concern at least two subgroups");
  if (n > 12) throw InvalidParamsError("at most 12 subgroups are supported");
  const unsigned full = (1u << n) - 1u;

  // Intersection subgroup for every nonempty subset of indices.
  std::vector<std::vector<GroupElem>> inter(static_cast<std::size_t>(full) + 1);
  for (int i = 0; i < n; ++i)
    inter[1u << static_cast<unsigned>(i)] = subs[static_cast<std::size_t>(i)];
  for (unsigned mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // single bit, already set
    const unsigned low = mask & (0u - mask);
    inter[mask] = intersect_sorted(inter[low], inter[mask ^ low]);
  }

  SgsReport report;

  // Generation: the intersection subgroup of tau ∩ tau' is generated by the
  // union of the two subgroups.  Pairs with disjoint index sets must
  // generate the whole group and are opt-in.
  report.generation = true;
  std::vector<GroupElem> whole;  // sorted universe, materialised on demand
  for (unsigned a = 1; a <= full && report.generation; ++a)
    for (unsigned b = a; b <= full; ++b) {
      const unsigned meet = a & b;
      if (a == b) continue;
      if (meet == 0 && !include_disjoint_pairs) continue;
      const std::vector<GroupElem>* target;
      if (meet == 0) {
        if (whole.empty()) {
          whole = group_elements(g, cap);
          std::sort(whole.begin(), whole.end());
        }
        target = &whole;
      } else {
        target = &inter[meet];
      }
      std::vector<GroupElem> gens = inter[a];
      gens.insert(gens.end(), inter[b].begin(), inter[b].end());
      std::vector<GroupElem> generated =
          sorted_unique(subgroup_closure(g, gens, cap));
      if (generated != *target) {
        report.generation = false;
        SgsWitness w;
        w.tau = mask_bits(a);
        w.tau_prime = mask_bits(b);
        for (const GroupElem& x : *target)
          if (!std::binary_search(generated.begin(), generated.end(), x)) {
            w.offender = x;
            break;
          }
        report.generation_witness = std::move(w);
        break;
      }
    }

  // Products: K_tau * K_i must equal the intersection over j in tau of the
  // pairwise products K_j * K_i.
  report.products = true;
  std::map<std::pair<int, int>, std::unordered_set<GroupElem>> pair_products;
  auto pair_product = [&](int j, int i) -> const std::unordered_set<GroupElem>& {
    auto it = pair_products.find({j, i});
    if (it == pair_products.end())
      it = pair_products
               .emplace(std::make_pair(j, i),
                        product_set(g, subs[static_cast<std::size_t>(j)],
                                    subs[static_cast<std::size_t>(i)]))
               .first;
    return it->second;
  };
  for (unsigned tau = 1; tau < full && report.products; ++tau) {
    for (int i = 0; i < n; ++i) {
      if (tau & (1u << static_cast<unsigned>(i))) continue;
      const std::unordered_set<GroupElem> lhs =
          product_set(g, inter[tau], subs[static_cast<std::size_t>(i)]);
      const std::vector<int> js = mask_bits(tau);
      std::vector<GroupElem> rhs;
      for (const GroupElem& x : pair_product(js[0], i)) rhs.push_back(x);
      for (std::size_t t = 1; t < js.size(); ++t) {
        const auto& filt = pair_product(js[t], i);
        std::vector<GroupElem> keep;
        keep.reserve(rhs.size());
        for (GroupElem& x : rhs)
          if (filt.count(x)) keep.push_back(std::move(x));
        rhs.swap(keep);
      }
      if (rhs.size() != lhs.size()) {
        report.products = false;
        SgsWitness w;
        w.tau = js;
        w.index = i;
        std::sort(rhs.begin(), rhs.end());
        for (const GroupElem& x : rhs)
          if (!lhs.count(x)) {
            w.offender = x;
            break;
          }
        report.products_witness = std::move(w);
        break;
      }
    }
  }

  // Strict chain: dropping an index from the full intersection must enlarge it.
  report.strict_chain = true;
  for (int i = 0; i < n; ++i) {
    const unsigned rest = full ^ (1u << static_cast<unsigned>(i));
    if (inter[rest].size() == inter[full].size()) {
      report.strict_chain = false;
      SgsWitness w;
      w.tau = mask_bits(rest);
      w.index = i;
      report.strict_chain_witness = std::move(w);
      break;
    }
  }

  return report;
}

// ---------------------------------------------------------------------------
// Links.

LinkSystem link_system(const CosetComplex& x, const std::vector<int>& tau,
                       const GroupElem& g) {
  const int n = static_cast<int>(x.subgroups.size());
  if (tau.empty()) throw InvalidParamsError("tau must be nonempty");
  std::vector<int> types = tau;
  std::sort(types.begin(), types.end());
  if (std::adjacent_find(types.begin(), types.end()) != types.end())
    throw InvalidParamsError("tau has repeated types");
  if (types.front() < 0 || types.back() >= n)
    throw InvalidParamsError("tau type out of range");
  if (static_cast<int>(types.size()) >= n)
    throw InvalidParamsError("tau must be a proper subset of the types");

  // The clique underlying g * K_tau.
  std::vector<VertexId> clique;
  for (const int t : types) clique.push_back(x.coset_vertex(g, t));
  const PartiteGraph host_link = link(x.host, clique);

  LinkSystem out;
  std::vector<GroupElem> ktau = x.subgroups[static_cast<std::size_t>(types[0])];
  for (std::size_t t = 1; t < types.size(); ++t)
    ktau = intersect_sorted(
        ktau, x.subgroups[static_cast<std::size_t>(types[t])]);
  out.group.ops = x.group.ops;
  out.group.generators = ktau;
  out.group.family = GroupFamily::kGeneric;
  out.group.known_order = static_cast<std::int64_t>(ktau.size());
  for (int i = 0; i < n; ++i) {
    if (std::binary_search(types.begin(), types.end(), i)) continue;
    out.link_types.push_back(i);
    out.subgroups.push_back(
        intersect_sorted(ktau, x.subgroups[static_cast<std::size_t>(i)]));
  }
  out.complex = build_coset_complex(out.group, out.subgroups);

  // Verify that h*K_{tau ∪ {i}} -> vertex of (g*h)*K_i is an edge-preserving
  // bijection onto the link of the clique.
  std::vector<VertexId> to_host(
      static_cast<std::size_t>(out.complex.host.num_vertices()), -1);
  std::unordered_set<VertexId> hit;
  for (std::size_t t = 0; t < out.link_types.size(); ++t) {
    const int host_type = out.link_types[t];
    for (const auto& [rep, v] : out.complex.coset_index[t]) {
      VertexId w = -1;
      try {
        w = x.coset_vertex(x.group.ops->multiply(g, rep), host_type);
      } catch (const InvalidParamsError&) {
        throw BijectionFailureError(
            "translated coset missing from the host complex");
      }
      if (!host_link.has_vertex(w) ||
          host_link.type_of(w) != static_cast<int>(t) || !hit.insert(w).second)
        throw BijectionFailureError(
            "coset translation is not a bijection onto the link");
      to_host[static_cast<std::size_t>(v)] = w;
    }
  }
  if (static_cast<std::int64_t>(hit.size()) != host_link.num_vertices())
    throw BijectionFailureError(
        "coset translation misses vertices of the link");
  if (out.complex.host.num_edges() != host_link.num_edges())
    throw BijectionFailureError("link edge counts disagree");
  for (const VertexId v : out.complex.host.vertices())
    for (const VertexId u : out.complex.host.neighbors(v))
      if (u > v && !host_link.has_edge(to_host[static_cast<std::size_t>(v)],
                                       to_host[static_cast<std::size_t>(u)]))
        throw BijectionFailureError(
            "coset translation does not preserve an edge");

  out.vertex_map.reserve(to_host.size());
  for (std::size_t v = 0; v < to_host.size(); ++v)
    out.vertex_map.emplace_back(static_cast<VertexId>(v), to_host[v]);
  return out;
}

// ---------------------------------------------------------------------------
// Presets.

CosetComplex affine_quotient_complex(int m, int k, std::int64_t cap) {
  const FiniteGroupHandle g = affine_group(m, k);
  std::vector<std::vector<GroupElem>> subs;
  for (const auto& gens : standard_subgroups(g))
    subs.push_back(subgroup_closure(g, gens, cap));
  return build_coset_complex(g, subs, cap);
}

CosetComplex el_quotient_complex(int m, std::int64_t q, int s,
                                 std::int64_t cap) {
  const FiniteGroupHandle g = el_group(m, q, s);
  std::vector<std::vector<GroupElem>> subs;
  for (const auto& gens : standard_subgroups(g))
    subs.push_back(subgroup_closure(g, gens, cap));
  return build_coset_complex(g, subs, cap);
}

CosetComplex knight_cycle_complex(int k, std::int64_t cap) {
  const FiniteGroupHandle base = affine_group(5, k);
  const FiniteGroupHandle prod = direct_product(base, base);
  std::vector<std::pair<int, int>> pairing;
  for (int i = 0; i < 5; ++i) pairing.emplace_back(i, (2 * i) % 5);
  std::vector<std::vector<GroupElem>> subs;
  for (const auto& gens : paired_subgroups(prod, pairing))
    subs.push_back(subgroup_closure(prod, gens, cap));
  return build_coset_complex(prod, subs, cap);
}

}  // namespace hrg
