#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hrg/errors.hpp"

namespace hrg {

using VertexId = std::int32_t;

/// A clique of a PartiteGraph: ascending vertex ids plus their part indices.
/// Vertex ids ascend together with part indices, so both vectors are sorted.
struct Face {
  std::vector<VertexId> vertices;
  std::vector<int> types;

  bool operator==(const Face&) const = default;
};

/// Measured degree tuple (d0,...,d_{n-1}) of an (n+1)-partite clique complex:
/// d_{i-1} is the common neighborhood size of every i-clique.  Valid profiles
/// are strictly decreasing and positive.
struct DegreeProfile {
  std::vector<std::int64_t> dims;

  bool operator==(const DegreeProfile&) const = default;
};

/// Why a degree-profile measurement failed.
enum class ProfileFailure {
  kMismatchedLinkSizes,  ///< two same-size cliques with different link sizes
  kEmptyLink,            ///< a clique below top dimension with empty link
  kNonDecreasing,        ///< equal link sizes per level, but not strictly decreasing
};

/// Counterexample attached to a failed degree-profile measurement.
struct ProfileWitness {
  ProfileFailure reason;
  Face first;
  std::int64_t first_link_size = 0;
  std::optional<Face> second;
  std::optional<std::int64_t> second_link_size;
};

/// Result of degree_profile: either the profile or a witness.
struct DegreeProfileResult {
  std::optional<DegreeProfile> profile;
  std::optional<ProfileWitness> witness;

  bool ok() const { return profile.has_value(); }
};

/// Result of is_pure: on failure carries a clique with no top extension.
struct PurityResult {
  bool ok = false;
  std::optional<Face> witness;
};

/// Result of is_strongly_gallery_connected: on failure carries the clique
/// whose link (or, for the empty face, the graph itself) is disconnected.
struct GalleryConnectivityResult {
  bool ok = false;
  std::optional<Face> witness;  ///< empty-face witness = Face with no vertices
};

/// Result of type_regularity.  `table` maps each realized type set J (as an
/// ascending part-index vector, including the empty set) to the per-part
/// common-neighborhood counts d_J(i) for i outside J.  On failure, two
/// same-type cliques disagreeing on the count for `witness_part` are attached.
struct TypeRegularityResult {
  bool ok = false;
  std::map<std::vector<int>, std::map<int, std::int64_t>> table;
  std::optional<Face> witness_a;
  std::optional<Face> witness_b;
  std::optional<int> witness_part;
};

/// Immutable ordered multipartite graph, viewed throughout the library as the
/// 1-skeleton of its clique complex.  Vertices belong to numbered parts
/// ("types") and every edge joins distinct parts.  Freshly built graphs have
/// dense ids 0..V-1 assigned part-by-part; graphs produced by link() keep the
/// ids of their host graph and are stored sparsely.  Vertex id order always
/// refines part order.
///
/// Immutable after construction; all member queries are const and safe to use
/// concurrently.
class PartiteGraph {
 public:
  PartiteGraph() = default;

  int nparts() const { return nparts_; }
  std::int64_t num_vertices() const;
  std::int64_t num_edges() const { return static_cast<std::int64_t>(edge_keys_.size()); }

  /// All vertex ids in ascending order.
  std::vector<VertexId> vertices() const;

  /// Vertex ids of one part, ascending.
  std::vector<VertexId> part(int p) const;
  std::int64_t part_size(int p) const;

  /// Part index of a vertex.
  int type_of(VertexId v) const;

  /// Neighbors of a vertex, ascending.  The span stays valid as long as the
  /// graph is alive.
  std::span<const VertexId> neighbors(VertexId v) const;

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  /// Label attached to a vertex; empty string when none was set.
  const std::string& label(VertexId v) const;
  bool has_labels() const { return has_labels_; }

  /// Number of duplicate edges removed when the graph was frozen (nonzero for
  /// wrap-around-degenerate lattice instances).
  std::int64_t duplicate_edges_removed() const { return dup_removed_; }

  /// True when vertex ids are exactly 0..V-1 in part order.
  bool dense_ids() const { return dense_; }

  /// Structural equality: same part layout (with ids), same edges, same labels.
  bool operator==(const PartiteGraph& other) const;

  /// Equality up to vertex ids: compares part count, per-part label sets and
  /// the edge set written in labels.  Vertices without labels use their
  /// decimal id.  Intended for comparing graphs built through different
  /// constructions.
  bool equal_by_labels(const PartiteGraph& other) const;

 private:
  friend class PartiteGraphBuilder;
  friend PartiteGraph link(const PartiteGraph&, const std::vector<VertexId>&);

  int nparts_ = 0;
  bool dense_ = false;
  bool has_labels_ = false;
  std::int64_t dup_removed_ = 0;

  // Dense storage (constructed graphs).
  std::vector<VertexId> part_offsets_;       // size nparts_+1
  std::vector<std::int64_t> adj_offsets_;    // CSR, size V+1
  std::vector<VertexId> adj_flat_;           // CSR payload, sorted per vertex
  std::vector<std::string> dlabels_;         // size V when has_labels_

  // Sparse storage (links of constructed graphs).
  std::vector<std::vector<VertexId>> sparts_;                  // per part, sorted
  std::unordered_map<VertexId, int> stype_;
  std::unordered_map<VertexId, std::vector<VertexId>> sadj_;   // sorted
  std::unordered_map<VertexId, std::string> slabels_;

  // Sorted edge keys ((min<<32)|max), shared by both storages.
  std::vector<std::uint64_t> edge_keys_;
};

/// Single-owner builder for dense PartiteGraphs.  Vertex ids are assigned
/// part-by-part from the part sizes given at construction.  Duplicate edges
/// are silently merged at build time (their count is recorded on the graph);
/// same-part edges and self-loops are rejected immediately.
class PartiteGraphBuilder {
 public:
  /// Throws InvalidParamsError for empty part lists or negative sizes;
  /// CapacityError when the total vertex count exceeds `cap` (default:
  /// default_capacity()).
  explicit PartiteGraphBuilder(std::vector<std::int64_t> part_sizes,
                               std::int64_t cap = -1);

  VertexId first_vertex_of(int p) const { return offsets_[p]; }
  std::int64_t total_vertices() const { return offsets_.back(); }

  void add_edge(VertexId u, VertexId v);
  void set_label(VertexId v, std::string label);

  /// Freezes into an immutable graph.  Verifies label injectivity per part
  /// (InvalidParamsError on violation).  The builder is left empty.
  PartiteGraph build();

 private:
  std::vector<VertexId> offsets_;
  std::vector<std::uint64_t> edges_;
  std::vector<std::string> labels_;
  bool any_label_ = false;
  bool built_ = false;
};

/// Validates that `vertices` forms a clique of `g` and returns it as a Face
/// (sorted, with types filled in).  Throws NonCliqueError otherwise.
Face make_face(const PartiteGraph& g, std::vector<VertexId> vertices);

/// Induced subgraph on the joint neighborhood of clique `c`, typed by the
/// remaining parts (reindexed 0.. in the original order).  Vertex ids and
/// labels are preserved from `g`.  Throws NonCliqueError if `c` is not a
/// clique.
PartiteGraph link(const PartiteGraph& g, const std::vector<VertexId>& c);
PartiteGraph link(const PartiteGraph& g, const Face& c);

/// All m-cliques of g in lexicographic vertex-id order, with type sets.
/// 1 <= m <= nparts (InvalidParamsError otherwise).
std::vector<Face> enumerate_cliques(const PartiteGraph& g, int m);

/// True iff g has exactly one connected component (isolated vertices count
/// as components; the empty graph counts as connected).
bool is_connected(const PartiteGraph& g);

/// Checks that every clique extends to a clique with one vertex in every
/// part.  On failure returns the first (lexicographically) non-extending
/// clique as witness.
PurityResult is_pure(const PartiteGraph& g);

/// Checks that g is connected and that the link of every clique c with
/// |c| <= nparts-2 is connected (links with at most one vertex pass
/// trivially).  The empty face stands for g itself.
GalleryConnectivityResult is_strongly_gallery_connected(const PartiteGraph& g);

/// Measures the degree tuple: for every clique size i in 1..nparts-1, all
/// i-cliques must share one joint-neighborhood size d_{i-1}, the sizes must
/// strictly decrease, and the last must be positive.  Otherwise returns a
/// witness (two same-size cliques with different link sizes, or an
/// empty-link clique).  Throws InvalidParamsError on an empty graph.
DegreeProfileResult degree_profile(const PartiteGraph& g);

/// Measures per-part link counts: for every realized type set J and part i
/// outside J, all type-J cliques must have the same number of joint
/// neighbors inside part i.  Returns the full table or a witness pair.
TypeRegularityResult type_regularity(const PartiteGraph& g);

}  // namespace hrg
