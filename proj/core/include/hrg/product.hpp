#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hrg/multipartite.hpp"

namespace hrg {

/// Finite permutation group acting on {0,...,degree-1}, given by generators.
/// The element list is closed lazily on first use, in a canonical order:
/// breadth-first products over the generators starting from the identity,
/// each level sorted lexicographically.  That order is what makes
/// symmetrize() reproducible across runs.
class PermGroup {
 public:
  /// Throws InvalidParamsError unless every generator is a permutation of
  /// {0,...,degree-1}.  No generators means the trivial group.
  PermGroup(int degree, std::vector<std::vector<int>> generators);

  int degree() const { return degree_; }
  const std::vector<std::vector<int>>& generators() const { return gens_; }

  /// All elements in canonical order (identity first).  Computed on first
  /// call (not thread-safe to race); throws CapacityError if the group has
  /// more than default_capacity() elements.
  const std::vector<std::vector<int>>& elements() const;

  std::int64_t order() const {
    return static_cast<std::int64_t>(elements().size());
  }

 private:
  int degree_ = 0;
  std::vector<std::vector<int>> gens_;
  mutable std::vector<std::vector<int>> elements_;
  mutable bool closed_ = false;
};

/// Verdict of a set-transitivity test: per_size[k] says whether the action
/// on subsets of size k+1 is transitive; ok is their conjunction.
struct SetTransitivityResult {
  bool ok = false;
  std::vector<bool> per_size;
};

/// Partwise graph product: part i is the cartesian product of the factors'
/// parts i, and {(v1,v2),(u1,u2)} is an edge iff {v1,u1} and {v2,u2} are
/// edges of the factors (necessarily across the same pair of parts).
/// Vertex labels are the comma-joined factor labels (decimal ids when a
/// factor vertex is unlabeled), so iterated products carry flat tuples.
/// Throws PartCountMismatchError unless the factors have the same number of
/// parts, CapacityError if the result would exceed `cap` vertices (default:
/// default_capacity()).
PartiteGraph partite_product(const PartiteGraph& g1, const PartiteGraph& g2,
                             std::int64_t cap = -1);

/// Factor coordinates of a product vertex, as original ids of g1 and g2.
std::pair<VertexId, VertexId> product_coordinates(const PartiteGraph& g1,
                                                  const PartiteGraph& g2,
                                                  VertexId v);

/// Reorders parts: a vertex of part p lands in part pi[p]; vertices, edges
/// and labels are untouched.  relabel(relabel(g,pi),pi_inverse) == g.
PartiteGraph relabel(const PartiteGraph& g, const std::vector<int>& pi);

/// Iterated partite product of relabel(g, pi) over all pi in h, in the
/// canonical element order of h.  Vertex labels become |h|-tuples of base
/// labels.  Isolated vertices are kept (only export paths prune them).
/// Throws PartCountMismatchError if h.degree() != g.nparts() and
/// CapacityError when the projected vertex count exceeds `cap`.
PartiteGraph symmetrize(const PartiteGraph& g, const PermGroup& h,
                        std::int64_t cap = -1);

/// Whether h acts transitively on the i-subsets of {0..degree-1} for every
/// 1 <= i <= degree-1.  Throws InvalidParamsError for degree < 2 and
/// CapacityError when a subset orbit would exceed default_capacity().
SetTransitivityResult is_set_transitive(const PermGroup& h);

/// Whether, for every 1 <= i <= |points|, all i-subsets of `points` lie in
/// one orbit of the induced action of h on i-subsets of its domain.  The
/// group need not stabilize `points` setwise; orbits may pass through
/// subsets outside it.  Throws PointsOutsideDomainError if some point is
/// not in {0..degree-1}, InvalidParamsError on duplicates or an empty list.
SetTransitivityResult orbit_set_transitive_on(const PermGroup& h,
                                              const std::vector<int>& points);

}  // namespace hrg
