#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hrg/groups.hpp"
#include "hrg/multipartite.hpp"

namespace hrg {

// Partite graph whose type-i vertices are the left cosets of the i-th
// subgroup, with an edge between two cosets exactly when they intersect.
// Vertex labels render the canonical coset representatives; `coset_index`
// maps each canonical representative (as an encoded element) back to its
// vertex id, one map per type.
struct CosetComplex {
  PartiteGraph host;
  FiniteGroupHandle group;
  // Closed element sets, one per type, each sorted by encoding.
  std::vector<std::vector<GroupElem>> subgroups;
  std::vector<std::unordered_map<GroupElem, VertexId>> coset_index;
  // When set, representatives were chosen by column reduction (the
  // enumeration strategy for matrix groups too large to materialise)
  // instead of taking the minimum encoding over the coset.
  bool column_reduced_reps = false;

  // Canonical representative of x * K_type, matching the coset_index keys.
  GroupElem canonical_rep(const GroupElem& x, int type) const;
  // Vertex id of the coset x * K_type; throws InvalidParamsError if the
  // canonical representative is unknown to this complex.
  VertexId coset_vertex(const GroupElem& x, int type) const;
};

// Builds the coset complex of `g` with respect to the given closed subgroup
// element sets (one per type, each containing the identity).  Three
// strategies, chosen automatically:
//  * direct products whose subgroups all split as products of factor
//    subgroups are assembled from the two factor complexes without ever
//    materialising the product group;
//  * groups whose order fits under `cap` are materialised and swept;
//  * 3x3 truncated-polynomial matrix groups over F_q[t]/t^2 with the
//    standard subgroups are enumerated by breadth-first search on the coset
//    space with column-reduced representatives.
// Throws CapacityError when none of the strategies fits under `cap`.
CosetComplex build_coset_complex(const FiniteGroupHandle& g,
                                 const std::vector<std::vector<GroupElem>>& subgroup_elems,
                                 std::int64_t cap = -1);

// Witness for a failed subgroup-system axiom: the subsets involved, the
// extra index where applicable, and one offending element when the failure
// is a strict containment.
struct SgsWitness {
  std::vector<int> tau;
  std::vector<int> tau_prime;
  int index = -1;
  std::optional<GroupElem> offender;
};

// Axioms for a system (G, K_0..K_{n-1}), each checked by explicit set
// computation:
//  * generation: for subsets tau, tau', the intersection subgroup
//    K_{tau ∩ tau'} is generated by K_tau and K_tau' together.  Pairs with
//    disjoint tau, tau' require generating all of G and are only checked
//    when `include_disjoint_pairs` is set.
//  * products: for every nonempty proper subset tau and every i outside it,
//    the set product K_tau * K_i equals the intersection of the pairwise
//    products K_j * K_i over j in tau.
//  * strict_chain: dropping any single index from the full intersection
//    K_{0..n-1} strictly enlarges it.
struct SgsReport {
  bool generation = false;
  bool products = false;
  bool strict_chain = false;
  std::optional<SgsWitness> generation_witness;
  std::optional<SgsWitness> products_witness;
  std::optional<SgsWitness> strict_chain_witness;
  bool ok() const { return generation && products && strict_chain; }
};

SgsReport check_sgs_axioms(const FiniteGroupHandle& g,
                           const std::vector<std::vector<GroupElem>>& subgroup_elems,
                           bool include_disjoint_pairs = false,
                           std::int64_t cap = -1);

// The link of the clique underlying the coset g * K_tau, rebuilt from group
// data alone: the group is the intersection subgroup K_tau and its
// subgroups are K_{tau ∪ {i}} for each type i outside tau.  `vertex_map`
// carries the verified bijection from the rebuilt complex onto the link of
// the clique inside `x.host` (small-complex vertex -> host vertex); it maps
// the coset h * K_{tau ∪ {i}} to the host vertex of (g*h) * K_i and is
// checked to be an edge-preserving bijection.  BijectionFailureError if the
// check fails.
struct LinkSystem {
  FiniteGroupHandle group;
  std::vector<int> link_types;
  std::vector<std::vector<GroupElem>> subgroups;
  CosetComplex complex;
  std::vector<std::pair<VertexId, VertexId>> vertex_map;
};

LinkSystem link_system(const CosetComplex& x, const std::vector<int>& tau,
                       const GroupElem& g);

// Coset complex of the window-permutation group on m letters with window
// scale k, over its standard point-stabiliser subgroups.
CosetComplex affine_quotient_complex(int m, int k, std::int64_t cap = -1);

// Coset complex of the m x m elementary matrix group over F_q[t]/t^s, over
// its standard subgroups.
CosetComplex el_quotient_complex(int m, std::int64_t q, int s,
                                 std::int64_t cap = -1);

// Preset: the square of the window-permutation group on 5 letters, with
// type i pairing subgroup i of the first factor with subgroup 2i mod 5 of
// the second.  Built from the factor complexes, so the product group is
// never materialised.
CosetComplex knight_cycle_complex(int k = 2, std::int64_t cap = -1);

}  // namespace hrg
