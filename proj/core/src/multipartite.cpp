#include "hrg/multipartite.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>
#include <set>
#include <string>
#include <utility>

namespace hrg {
namespace {

constexpr std::int64_t kBitsetMemoryCapBytes = std::int64_t{160} << 20;

std::uint64_t edge_key(VertexId u, VertexId v) {
  const auto a = static_cast<std::uint32_t>(std::min(u, v));
  const auto b = static_cast<std::uint32_t>(std::max(u, v));
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

Face face_of(const PartiteGraph& g, const std::vector<VertexId>& members) {
  Face f;
  f.vertices = members;
  f.types.reserve(members.size());
  for (VertexId v : members) f.types.push_back(g.type_of(v));
  return f;
}

// --- adjacency models -------------------------------------------------------
//
// All clique-walking certifiers below are written once against a small model
// interface: a "Set" of vertices (a joint neighborhood) supporting seeding
// from one vertex, intersection with a neighbor list, counting (globally and
// per part), ordered iteration, and induced-subgraph connectivity.  Two
// implementations exist: a packed bitset (dense-id graphs small enough to
// afford V^2/8 bytes) and plain sorted id vectors (everything else).

class BitsetModel {
 public:
  using Set = std::vector<std::uint64_t>;

  static bool eligible(const PartiteGraph& g) {
    if (!g.dense_ids()) return false;
    const std::int64_t v = g.num_vertices();
    if (v == 0) return false;
    const std::int64_t words = (v + 63) / 64;
    return v * words * 8 <= kBitsetMemoryCapBytes;
  }

  explicit BitsetModel(const PartiteGraph& g) : g_(g) {
    const std::int64_t v = g.num_vertices();
    nverts_ = v;
    words_ = static_cast<std::size_t>((v + 63) / 64);
    rows_.assign(static_cast<std::size_t>(v) * words_, 0);
    for (VertexId u = 0; u < v; ++u) {
      std::uint64_t* r = rows_.data() + static_cast<std::size_t>(u) * words_;
      for (VertexId w : g.neighbors(u)) r[w >> 6] |= std::uint64_t{1} << (w & 63);
    }
    part_offsets_.assign(1, 0);
    for (int p = 0; p < g.nparts(); ++p)
      part_offsets_.push_back(part_offsets_.back() +
                              static_cast<VertexId>(g.part_size(p)));
  }

  void seed(VertexId v, Set& out) const {
    const std::uint64_t* r = row(v);
    out.assign(r, r + words_);
  }

  void intersect(const Set& s, VertexId v, Set& out) const {
    out.resize(words_);
    const std::uint64_t* r = row(v);
    for (std::size_t i = 0; i < words_; ++i) out[i] = s[i] & r[i];
  }

  std::int64_t count(const Set& s) const {
    std::int64_t c = 0;
    for (std::uint64_t w : s) c += std::popcount(w);
    return c;
  }

  std::int64_t count_part(const Set& s, int p) const {
    return count_range(s, part_offsets_[p], part_offsets_[p + 1]);
  }

  bool any_in_part(const Set& s, int p) const {
    const VertexId lo = part_offsets_[p], hi = part_offsets_[p + 1];
    if (lo >= hi) return false;
    const std::size_t w0 = static_cast<std::size_t>(lo) >> 6;
    const std::size_t w1 = static_cast<std::size_t>(hi - 1) >> 6;
    const std::uint64_t m0 = ~std::uint64_t{0} << (lo & 63);
    const std::uint64_t m1 = ~std::uint64_t{0} >> (63 - ((hi - 1) & 63));
    if (w0 == w1) return (s[w0] & m0 & m1) != 0;
    if (s[w0] & m0) return true;
    for (std::size_t w = w0 + 1; w < w1; ++w)
      if (s[w]) return true;
    return (s[w1] & m1) != 0;
  }

  /// Calls f(v) for every member greater than `from` (pass -1 for all),
  /// stopping early when f returns false.  Returns false on early stop.
  template <class F>
  bool for_each_from(const Set& s, VertexId from, F&& f) const {
    const std::int64_t start = static_cast<std::int64_t>(from) + 1;
    if (start >= nverts_) return true;
    std::size_t w = static_cast<std::size_t>(start) >> 6;
    std::uint64_t cur = s[w] & (~std::uint64_t{0} << (start & 63));
    for (;;) {
      while (cur) {
        const int b = std::countr_zero(cur);
        if (!f(static_cast<VertexId>((w << 6) + static_cast<std::size_t>(b))))
          return false;
        cur &= cur - 1;
      }
      if (++w >= words_) return true;
      cur = s[w];
    }
  }

  template <class F>
  bool for_each_in_part(const Set& s, int p, F&& f) const {
    const VertexId lo = part_offsets_[p], hi = part_offsets_[p + 1];
    return for_each_from(s, static_cast<VertexId>(lo - 1), [&](VertexId v) {
      return v >= hi ? false : f(v);
    });
  }

  bool link_connected(const Set& s) const {
    const std::int64_t total = count(s);
    if (total <= 1) return true;
    bfs_remaining_ = s;
    bfs_stack_.clear();
    VertexId v0 = -1;
    for (std::size_t w = 0; w < words_; ++w)
      if (bfs_remaining_[w]) {
        v0 = static_cast<VertexId>((w << 6) +
                                   std::countr_zero(bfs_remaining_[w]));
        break;
      }
    bfs_remaining_[static_cast<std::size_t>(v0) >> 6] &=
        ~(std::uint64_t{1} << (v0 & 63));
    bfs_stack_.push_back(v0);
    std::int64_t seen = 1;
    while (!bfs_stack_.empty()) {
      const VertexId u = bfs_stack_.back();
      bfs_stack_.pop_back();
      const std::uint64_t* r = row(u);
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t hit = bfs_remaining_[w] & r[w];
        if (!hit) continue;
        bfs_remaining_[w] &= ~hit;
        seen += std::popcount(hit);
        while (hit) {
          bfs_stack_.push_back(static_cast<VertexId>(
              (w << 6) + static_cast<std::size_t>(std::countr_zero(hit))));
          hit &= hit - 1;
        }
      }
    }
    return seen == total;
  }

 private:
  const std::uint64_t* row(VertexId v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }

  std::int64_t count_range(const Set& s, VertexId lo, VertexId hi) const {
    if (lo >= hi) return 0;
    const std::size_t w0 = static_cast<std::size_t>(lo) >> 6;
    const std::size_t w1 = static_cast<std::size_t>(hi - 1) >> 6;
    const std::uint64_t m0 = ~std::uint64_t{0} << (lo & 63);
    const std::uint64_t m1 = ~std::uint64_t{0} >> (63 - ((hi - 1) & 63));
    if (w0 == w1) return std::popcount(s[w0] & m0 & m1);
    std::int64_t c = std::popcount(s[w0] & m0);
    for (std::size_t w = w0 + 1; w < w1; ++w) c += std::popcount(s[w]);
    return c + std::popcount(s[w1] & m1);
  }

  const PartiteGraph& g_;
  std::int64_t nverts_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<VertexId> part_offsets_;
  mutable Set bfs_remaining_;
  mutable std::vector<VertexId> bfs_stack_;
};

class SortedModel {
 public:
  using Set = std::vector<VertexId>;

  explicit SortedModel(const PartiteGraph& g) : g_(g) {
    if (g.dense_ids()) {
      part_offsets_.assign(1, 0);
      for (int p = 0; p < g.nparts(); ++p)
        part_offsets_.push_back(part_offsets_.back() +
                                static_cast<VertexId>(g.part_size(p)));
    }
  }

  void seed(VertexId v, Set& out) const {
    const auto nb = g_.neighbors(v);
    out.assign(nb.begin(), nb.end());
  }

  void intersect(const Set& s, VertexId v, Set& out) const {
    out.clear();
    const auto nb = g_.neighbors(v);
    auto a = s.begin();
    auto b = nb.begin();
    while (a != s.end() && b != nb.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        out.push_back(*a);
        ++a;
        ++b;
      }
    }
  }

  std::int64_t count(const Set& s) const {
    return static_cast<std::int64_t>(s.size());
  }

  std::int64_t count_part(const Set& s, int p) const {
    if (!part_offsets_.empty()) {
      const auto lo = std::lower_bound(s.begin(), s.end(), part_offsets_[p]);
      const auto hi = std::lower_bound(lo, s.end(), part_offsets_[p + 1]);
      return hi - lo;
    }
    std::int64_t c = 0;
    for (VertexId v : s) c += g_.type_of(v) == p;
    return c;
  }

  bool any_in_part(const Set& s, int p) const { return count_part(s, p) > 0; }

  template <class F>
  bool for_each_from(const Set& s, VertexId from, F&& f) const {
    for (auto it = std::upper_bound(s.begin(), s.end(), from); it != s.end();
         ++it)
      if (!f(*it)) return false;
    return true;
  }

  template <class F>
  bool for_each_in_part(const Set& s, int p, F&& f) const {
    if (!part_offsets_.empty()) {
      auto it = std::lower_bound(s.begin(), s.end(), part_offsets_[p]);
      const auto end = std::lower_bound(it, s.end(), part_offsets_[p + 1]);
      for (; it != end; ++it)
        if (!f(*it)) return false;
      return true;
    }
    for (VertexId v : s)
      if (g_.type_of(v) == p && !f(v)) return false;
    return true;
  }

  bool link_connected(const Set& s) const {
    const std::size_t n = s.size();
    if (n <= 1) return true;
    std::vector<char> visited(n, 0);
    std::vector<std::size_t> stack;
    visited[0] = 1;
    stack.push_back(0);
    std::size_t seen = 1;
    while (!stack.empty()) {
      const VertexId u = s[stack.back()];
      stack.pop_back();
      const auto nb = g_.neighbors(u);
      std::size_t j = 0;
      for (auto b = nb.begin(); b != nb.end() && j < n;) {
        if (*b < s[j]) {
          ++b;
        } else if (s[j] < *b) {
          ++j;
        } else {
          if (!visited[j]) {
            visited[j] = 1;
            stack.push_back(j);
            ++seen;
          }
          ++b;
          ++j;
        }
      }
    }
    return seen == n;
  }

 private:
  const PartiteGraph& g_;
  std::vector<VertexId> part_offsets_;  // dense graphs only
};

template <class Fn>
auto with_model(const PartiteGraph& g, Fn&& fn) {
  if (BitsetModel::eligible(g)) {
    BitsetModel model(g);
    return fn(model);
  }
  SortedModel model(g);
  return fn(model);
}

/// Visits every clique of size 1..max_size in lexicographic vertex order.
/// The callback receives the member list (ascending) and the joint
/// neighborhood of all members; returning false aborts the traversal.
/// Returns false iff the traversal was aborted.
template <class Model, class F>
bool visit_cliques(const PartiteGraph& g, const Model& model, int max_size,
                   F&& f) {
  if (max_size <= 0) return true;
  std::vector<typename Model::Set> sets(static_cast<std::size_t>(max_size));
  std::vector<VertexId> members;
  members.reserve(static_cast<std::size_t>(max_size));

  auto rec = [&](auto&& self, int depth) -> bool {
    bool keep = true;
    model.for_each_from(sets[depth - 1], members.back(), [&](VertexId w) {
      members.push_back(w);
      model.intersect(sets[depth - 1], w, sets[depth]);
      keep = f(members, sets[depth]);
      if (keep && static_cast<int>(members.size()) < max_size)
        keep = self(self, depth + 1);
      members.pop_back();
      return keep;
    });
    return keep;
  };

  for (VertexId v : g.vertices()) {
    members.assign(1, v);
    model.seed(v, sets[0]);
    if (!f(members, sets[0])) return false;
    if (max_size > 1 && !rec(rec, 1)) return false;
  }
  return true;
}

template <class Model>
DegreeProfileResult degree_profile_impl(const PartiteGraph& g,
                                        const Model& model) {
  DegreeProfileResult res;
  const int max_size = g.nparts() - 1;
  if (max_size == 0) {
    res.profile = DegreeProfile{};
    return res;
  }
  std::vector<std::optional<std::int64_t>> expected(
      static_cast<std::size_t>(max_size));
  std::vector<Face> first(static_cast<std::size_t>(max_size));
  std::optional<ProfileWitness> bad;

  visit_cliques(
      g, model, max_size,
      [&](const std::vector<VertexId>& members, const auto& common) {
        const std::size_t level = members.size() - 1;
        const std::int64_t cnt = model.count(common);
        if (cnt == 0) {
          bad = ProfileWitness{ProfileFailure::kEmptyLink, face_of(g, members),
                               0, std::nullopt, std::nullopt};
          return false;
        }
        auto& exp = expected[level];
        if (!exp) {
          exp = cnt;
          first[level] = face_of(g, members);
          return true;
        }
        if (*exp != cnt) {
          bad = ProfileWitness{ProfileFailure::kMismatchedLinkSizes,
                               first[level], *exp, face_of(g, members), cnt};
          return false;
        }
        return true;
      });
  if (bad) {
    res.witness = std::move(bad);
    return res;
  }
  // A clique with a nonempty joint neighborhood always extends, so with a
  // nonempty vertex set every level up to max_size is realized.
  assert(std::all_of(expected.begin(), expected.end(),
                     [](const auto& e) { return e.has_value(); }));
  for (std::size_t level = 1; level < expected.size(); ++level) {
    if (*expected[level] >= *expected[level - 1]) {
      res.witness = ProfileWitness{ProfileFailure::kNonDecreasing,
                                   first[level - 1], *expected[level - 1],
                                   first[level], *expected[level]};
      return res;
    }
  }
  DegreeProfile prof;
  for (const auto& e : expected) prof.dims.push_back(*e);
  res.profile = std::move(prof);
  return res;
}

template <class Model>
TypeRegularityResult type_regularity_impl(const PartiteGraph& g,
                                          const Model& model) {
  TypeRegularityResult res;
  auto& empty_row = res.table[{}];
  for (int p = 0; p < g.nparts(); ++p) empty_row[p] = g.part_size(p);

  std::map<std::vector<int>, Face> first;
  std::vector<int> type_set;
  const int max_size = g.nparts() - 1;
  const bool clean = visit_cliques(
      g, model, max_size,
      [&](const std::vector<VertexId>& members, const auto& common) {
        type_set.clear();
        for (VertexId v : members) type_set.push_back(g.type_of(v));
        auto it = res.table.find(type_set);
        if (it == res.table.end()) {
          std::map<int, std::int64_t> row;
          for (int p = 0; p < g.nparts(); ++p) {
            if (!std::binary_search(type_set.begin(), type_set.end(), p))
              row[p] = model.count_part(common, p);
          }
          res.table.emplace(type_set, std::move(row));
          first.emplace(type_set, face_of(g, members));
          return true;
        }
        for (const auto& [p, cnt] : it->second) {
          if (model.count_part(common, p) != cnt) {
            res.witness_a = first.at(type_set);
            res.witness_b = face_of(g, members);
            res.witness_part = p;
            return false;
          }
        }
        return true;
      });
  res.ok = clean;
  return res;
}

/// DFS: can the clique behind `common` pick one joint neighbor in every part
/// of `missing[idx..]`, shrinking `common` as it goes?
template <class Model>
bool extends_to_top(const Model& model, const typename Model::Set& common,
                    const std::vector<int>& missing, std::size_t idx,
                    std::vector<typename Model::Set>& scratch) {
  if (idx == missing.size()) return true;
  const int p = missing[idx];
  if (idx + 1 == missing.size()) return model.any_in_part(common, p);
  bool found = false;
  model.for_each_in_part(common, p, [&](VertexId w) {
    model.intersect(common, w, scratch[idx]);
    if (extends_to_top(model, scratch[idx], missing, idx + 1, scratch))
      found = true;
    return !found;
  });
  return found;
}

template <class Model>
PurityResult is_pure_impl(const PartiteGraph& g, const Model& model) {
  PurityResult res;
  const int nparts = g.nparts();
  std::vector<typename Model::Set> scratch(
      static_cast<std::size_t>(nparts));
  std::vector<int> missing;
  const bool clean = visit_cliques(
      g, model, nparts - 1,
      [&](const std::vector<VertexId>& members, const auto& common) {
        missing.clear();
        std::size_t i = 0;
        for (int p = 0; p < nparts; ++p) {
          if (i < members.size() && g.type_of(members[i]) == p) {
            ++i;
          } else {
            missing.push_back(p);
          }
        }
        if (extends_to_top(model, common, missing, 0, scratch)) return true;
        res.witness = face_of(g, members);
        return false;
      });
  res.ok = clean;
  return res;
}

template <class Model>
GalleryConnectivityResult gallery_impl(const PartiteGraph& g,
                                       const Model& model) {
  GalleryConnectivityResult res;
  if (!is_connected(g)) {
    res.witness = Face{};
    return res;
  }
  const int max_size = g.nparts() - 2;
  const bool clean = visit_cliques(
      g, model, max_size,
      [&](const std::vector<VertexId>& members, const auto& common) {
        if (model.count(common) <= 1 || model.link_connected(common))
          return true;
        res.witness = face_of(g, members);
        return false;
      });
  res.ok = clean;
  return res;
}

}  // namespace

// --- PartiteGraph ------------------------------------------------------------

std::int64_t PartiteGraph::num_vertices() const {
  if (dense_) return part_offsets_.back();
  return static_cast<std::int64_t>(stype_.size());
}

std::vector<VertexId> PartiteGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(num_vertices()));
  if (dense_) {
    for (VertexId v = 0; v < part_offsets_.back(); ++v) out.push_back(v);
  } else {
    for (const auto& part : sparts_)
      out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<VertexId> PartiteGraph::part(int p) const {
  if (p < 0 || p >= nparts_)
    throw InvalidParamsError("part index " + std::to_string(p) +
                             " out of range");
  if (!dense_) return sparts_[static_cast<std::size_t>(p)];
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(part_offsets_[p + 1] -
                                       part_offsets_[p]));
  for (VertexId v = part_offsets_[p]; v < part_offsets_[p + 1]; ++v)
    out.push_back(v);
  return out;
}

std::int64_t PartiteGraph::part_size(int p) const {
  if (p < 0 || p >= nparts_)
    throw InvalidParamsError("part index " + std::to_string(p) +
                             " out of range");
  if (dense_) return part_offsets_[p + 1] - part_offsets_[p];
  return static_cast<std::int64_t>(sparts_[static_cast<std::size_t>(p)].size());
}

int PartiteGraph::type_of(VertexId v) const {
  if (dense_) {
    if (v < 0 || v >= part_offsets_.back())
      throw InvalidParamsError("unknown vertex id " + std::to_string(v));
    const auto it =
        std::upper_bound(part_offsets_.begin(), part_offsets_.end(), v);
    return static_cast<int>(it - part_offsets_.begin()) - 1;
  }
  const auto it = stype_.find(v);
  if (it == stype_.end())
    throw InvalidParamsError("unknown vertex id " + std::to_string(v));
  return it->second;
}

std::span<const VertexId> PartiteGraph::neighbors(VertexId v) const {
  if (dense_) {
    if (v < 0 || v >= part_offsets_.back())
      throw InvalidParamsError("unknown vertex id " + std::to_string(v));
    const auto begin = adj_offsets_[static_cast<std::size_t>(v)];
    const auto end = adj_offsets_[static_cast<std::size_t>(v) + 1];
    return {adj_flat_.data() + begin, static_cast<std::size_t>(end - begin)};
  }
  const auto it = sadj_.find(v);
  if (it == sadj_.end())
    throw InvalidParamsError("unknown vertex id " + std::to_string(v));
  return {it->second.data(), it->second.size()};
}

bool PartiteGraph::has_vertex(VertexId v) const {
  if (dense_) return v >= 0 && v < part_offsets_.back();
  return stype_.count(v) != 0;
}

bool PartiteGraph::has_edge(VertexId u, VertexId v) const {
  if (u == v) return false;
  return std::binary_search(edge_keys_.begin(), edge_keys_.end(),
                            edge_key(u, v));
}

const std::string& PartiteGraph::label(VertexId v) const {
  static const std::string kEmpty;
  if (!has_labels_) return kEmpty;
  if (dense_) {
    const auto i = static_cast<std::size_t>(v);
    return i < dlabels_.size() ? dlabels_[i] : kEmpty;
  }
  const auto it = slabels_.find(v);
  return it == slabels_.end() ? kEmpty : it->second;
}

bool PartiteGraph::operator==(const PartiteGraph& other) const {
  if (nparts_ != other.nparts_ || edge_keys_ != other.edge_keys_) return false;
  for (int p = 0; p < nparts_; ++p)
    if (part(p) != other.part(p)) return false;
  for (VertexId v : vertices())
    if (label(v) != other.label(v)) return false;
  return true;
}

bool PartiteGraph::equal_by_labels(const PartiteGraph& other) const {
  if (nparts_ != other.nparts_) return false;
  const auto tag = [](const PartiteGraph& g, VertexId v) {
    const std::string& l = g.label(v);
    return l.empty() ? std::to_string(v) : l;
  };
  for (int p = 0; p < nparts_; ++p) {
    std::set<std::string> mine, theirs;
    for (VertexId v : part(p)) mine.insert(tag(*this, v));
    for (VertexId v : other.part(p)) theirs.insert(tag(other, v));
    if (mine != theirs) return false;
  }
  const auto edge_set = [&](const PartiteGraph& g) {
    std::set<std::string> out;
    for (VertexId v : g.vertices()) {
      for (VertexId w : g.neighbors(v)) {
        if (w < v) continue;
        const int tv = g.type_of(v), tw = g.type_of(w);
        std::string a = std::to_string(tv) + '\x1f' + tag(g, v);
        std::string b = std::to_string(tw) + '\x1f' + tag(g, w);
        if (std::make_pair(tv, tag(g, v)) > std::make_pair(tw, tag(g, w)))
          std::swap(a, b);
        out.insert(a + '\x1e' + b);
      }
    }
    return out;
  };
  return edge_set(*this) == edge_set(other);
}

// --- PartiteGraphBuilder ------------------------------------------------------

PartiteGraphBuilder::PartiteGraphBuilder(std::vector<std::int64_t> part_sizes,
                                         std::int64_t cap) {
  if (part_sizes.empty())
    throw InvalidParamsError("a partite graph needs at least one part");
  std::int64_t total = 0;
  for (const std::int64_t s : part_sizes) {
    if (s < 0) throw InvalidParamsError("negative part size");
    total += s;
  }
  if (cap < 0) cap = default_capacity();
  if (total > cap)
    throw CapacityError("vertex count " + std::to_string(total) +
                        " exceeds capacity " + std::to_string(cap));
  if (total > std::numeric_limits<VertexId>::max())
    throw CapacityError("vertex count " + std::to_string(total) +
                        " exceeds the id range");
  offsets_.assign(1, 0);
  for (const std::int64_t s : part_sizes)
    offsets_.push_back(offsets_.back() + static_cast<VertexId>(s));
}

void PartiteGraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= offsets_.back() || v >= offsets_.back())
    throw InvalidParamsError("edge endpoint out of range");
  if (u == v) throw InvalidParamsError("self-loops are not allowed");
  const auto type = [&](VertexId w) {
    return std::upper_bound(offsets_.begin(), offsets_.end(), w) -
           offsets_.begin() - 1;
  };
  if (type(u) == type(v))
    throw InvalidParamsError("edge {" + std::to_string(u) + "," +
                             std::to_string(v) + "} joins one part");
  edges_.push_back(edge_key(u, v));
}

void PartiteGraphBuilder::set_label(VertexId v, std::string label) {
  if (v < 0 || v >= offsets_.back())
    throw InvalidParamsError("label target out of range");
  if (labels_.empty())
    labels_.resize(static_cast<std::size_t>(offsets_.back()));
  labels_[static_cast<std::size_t>(v)] = std::move(label);
  any_label_ = true;
}

PartiteGraph PartiteGraphBuilder::build() {
  if (built_) throw InvalidParamsError("builder already consumed");
  built_ = true;

  PartiteGraph g;
  g.nparts_ = static_cast<int>(offsets_.size()) - 1;
  g.dense_ = true;

  std::sort(edges_.begin(), edges_.end());
  const auto unique_end = std::unique(edges_.begin(), edges_.end());
  g.dup_removed_ =
      static_cast<std::int64_t>(edges_.end() - unique_end);
  edges_.erase(unique_end, edges_.end());

  const auto nverts = static_cast<std::size_t>(offsets_.back());
  g.adj_offsets_.assign(nverts + 1, 0);
  for (const std::uint64_t key : edges_) {
    ++g.adj_offsets_[(key >> 32) + 1];
    ++g.adj_offsets_[(key & 0xffffffffu) + 1];
  }
  for (std::size_t i = 1; i <= nverts; ++i)
    g.adj_offsets_[i] += g.adj_offsets_[i - 1];
  g.adj_flat_.resize(static_cast<std::size_t>(2) * edges_.size());
  std::vector<std::int64_t> cursor(g.adj_offsets_.begin(),
                                   g.adj_offsets_.end() - 1);
  // Keys ascend, so every adjacency row comes out sorted: a row first
  // receives its smaller neighbors (from keys where it is the larger
  // endpoint) and then its larger neighbors in order.
  for (const std::uint64_t key : edges_) {
    const auto u = static_cast<VertexId>(key >> 32);
    const auto v = static_cast<VertexId>(key & 0xffffffffu);
    g.adj_flat_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
    g.adj_flat_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
  }
  g.part_offsets_ = std::move(offsets_);
  g.edge_keys_ = std::move(edges_);

  if (any_label_) {
    labels_.resize(nverts);
    for (int p = 0; p < g.nparts_; ++p) {
      std::set<std::string> seen;
      for (VertexId v = g.part_offsets_[p]; v < g.part_offsets_[p + 1]; ++v) {
        const std::string& l = labels_[static_cast<std::size_t>(v)];
        if (!l.empty() && !seen.insert(l).second)
          throw InvalidParamsError("duplicate label '" + l + "' in part " +
                                   std::to_string(p));
      }
    }
    g.has_labels_ = true;
    g.dlabels_ = std::move(labels_);
  }
  return g;
}

// --- free functions -----------------------------------------------------------

Face make_face(const PartiteGraph& g, std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw NonCliqueError("repeated vertex");
  for (const VertexId v : vertices)
    if (!g.has_vertex(v))
      throw NonCliqueError("unknown vertex " + std::to_string(v));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.has_edge(vertices[i], vertices[j]))
        throw NonCliqueError("missing edge {" + std::to_string(vertices[i]) +
                             "," + std::to_string(vertices[j]) + "}");
  Face f;
  f.vertices = std::move(vertices);
  f.types.reserve(f.vertices.size());
  for (const VertexId v : f.vertices) f.types.push_back(g.type_of(v));
  return f;
}

PartiteGraph link(const PartiteGraph& g, const std::vector<VertexId>& c) {
  const Face f = make_face(g, c);
  if (f.vertices.empty()) return g;

  std::vector<VertexId> common(g.neighbors(f.vertices[0]).begin(),
                               g.neighbors(f.vertices[0]).end());
  std::vector<VertexId> tmp;
  for (std::size_t i = 1; i < f.vertices.size(); ++i) {
    tmp.clear();
    const auto nb = g.neighbors(f.vertices[i]);
    std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                          std::back_inserter(tmp));
    common.swap(tmp);
  }

  std::vector<int> part_map(static_cast<std::size_t>(g.nparts()), -1);
  int next = 0;
  for (int p = 0; p < g.nparts(); ++p)
    if (!std::binary_search(f.types.begin(), f.types.end(), p))
      part_map[static_cast<std::size_t>(p)] = next++;

  PartiteGraph out;
  out.nparts_ = next;
  out.dense_ = false;
  out.sparts_.resize(static_cast<std::size_t>(next));
  for (const VertexId u : common) {
    const int t = part_map[static_cast<std::size_t>(g.type_of(u))];
    out.sparts_[static_cast<std::size_t>(t)].push_back(u);
    out.stype_.emplace(u, t);
    out.sadj_.emplace(u, std::vector<VertexId>{});
  }
  for (const VertexId u : common) {
    auto& row = out.sadj_[u];
    const auto nb = g.neighbors(u);
    std::set_intersection(nb.begin(), nb.end(), common.begin(), common.end(),
                          std::back_inserter(row));
    for (const VertexId w : row)
      if (w > u) out.edge_keys_.push_back(edge_key(u, w));
  }
  if (g.has_labels()) {
    for (const VertexId u : common) {
      const std::string& l = g.label(u);
      if (!l.empty()) {
        out.slabels_.emplace(u, l);
        out.has_labels_ = true;
      }
    }
  }
  return out;
}

PartiteGraph link(const PartiteGraph& g, const Face& c) {
  return link(g, c.vertices);
}

std::vector<Face> enumerate_cliques(const PartiteGraph& g, int m) {
  if (m < 1 || m > g.nparts())
    throw InvalidParamsError("clique size " + std::to_string(m) +
                             " outside 1.." + std::to_string(g.nparts()));
  std::vector<Face> out;
  with_model(g, [&](const auto& model) {
    visit_cliques(g, model, m,
                  [&](const std::vector<VertexId>& members, const auto&) {
                    if (static_cast<int>(members.size()) == m)
                      out.push_back(face_of(g, members));
                    return true;
                  });
  });
  return out;
}

bool is_connected(const PartiteGraph& g) {
  const std::int64_t total = g.num_vertices();
  if (total == 0) return true;
  const std::vector<VertexId> verts = g.vertices();
  if (g.dense_ids()) {
    std::vector<char> visited(static_cast<std::size_t>(total), 0);
    std::vector<VertexId> stack{verts[0]};
    visited[static_cast<std::size_t>(verts[0])] = 1;
    std::int64_t seen = 1;
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (const VertexId w : g.neighbors(u)) {
        if (!visited[static_cast<std::size_t>(w)]) {
          visited[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
          ++seen;
        }
      }
    }
    return seen == total;
  }
  std::unordered_map<VertexId, char> visited;
  visited.reserve(static_cast<std::size_t>(total));
  std::vector<VertexId> stack{verts[0]};
  visited.emplace(verts[0], 1);
  std::int64_t seen = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (const VertexId w : g.neighbors(u)) {
      if (visited.emplace(w, 1).second) {
        stack.push_back(w);
        ++seen;
      }
    }
  }
  return seen == total;
}

PurityResult is_pure(const PartiteGraph& g) {
  return with_model(g, [&](const auto& model) {
    return is_pure_impl(g, model);
  });
}

GalleryConnectivityResult is_strongly_gallery_connected(
    const PartiteGraph& g) {
  return with_model(g, [&](const auto& model) {
    return gallery_impl(g, model);
  });
}

DegreeProfileResult degree_profile(const PartiteGraph& g) {
  if (g.num_vertices() == 0)
    throw InvalidParamsError("degree profile of an empty graph");
  return with_model(g, [&](const auto& model) {
    return degree_profile_impl(g, model);
  });
}

TypeRegularityResult type_regularity(const PartiteGraph& g) {
  return with_model(g, [&](const auto& model) {
    return type_regularity_impl(g, model);
  });
}

}  // namespace hrg
