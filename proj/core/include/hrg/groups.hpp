// Finite group engine.
//
// Elements are canonical byte encodings (equal bytes <=> equal elements), so
// hashing, equality, and "minimum representative" are plain string
// operations.  Concrete families: windowed affine permutations, matrices
// over a truncated polynomial ring, and direct products; everything else
// (closure, cosets, quotient checks) works through the type-erased GroupOps
// interface.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hrg {

// Canonical fixed-length byte encoding of one group element.  The byte
// order gives the total order used for canonical coset representatives.
using GroupElem = std::string;

class GroupOps {
 public:
  virtual ~GroupOps();
  virtual std::size_t encoded_size() const = 0;
  virtual GroupElem identity() const = 0;
  virtual GroupElem multiply(const GroupElem& a, const GroupElem& b) const = 0;
  virtual GroupElem inverse(const GroupElem& a) const = 0;
  virtual std::string describe(const GroupElem& a) const = 0;
};

enum class GroupFamily {
  kGeneric,
  kAffineWindows,
  kTruncatedElementary,
  kDirectProduct,
};

// A group given by its operations and a generating set.  The element
// universe is materialized on demand via subgroup_closure.
struct FiniteGroupHandle {
  std::shared_ptr<const GroupOps> ops;
  std::vector<GroupElem> generators;
  GroupFamily family = GroupFamily::kGeneric;
  // kAffineWindows: {m, k}; kTruncatedElementary: {m, q, s}.
  std::vector<std::int64_t> params;
  // kDirectProduct: the two factor handles.
  std::vector<std::shared_ptr<const FiniteGroupHandle>> factors;
  std::optional<std::int64_t> known_order;
};

// A windowed affine permutation: the images of 1..m reduced mod m*k.  The
// window extends to a permutation of Z_{mk} by u(x + m) = u(x) + m.
struct AffinePerm {
  std::vector<int> window;
  int modulus = 0;
};

// The group of windowed affine permutations on m strands with windows
// reduced mod m*k; order k^(m-1) * m!.  Generators are the m adjacent
// transpositions (index 0 wraps across the window boundary).
FiniteGroupHandle affine_group(int m, int k);

// The group generated by all elementary matrices I + r*E_{ij} (i != j) of
// size m over the ring of polynomials mod q with powers >= s truncated.
// q must be prime.
FiniteGroupHandle el_group(int m, std::int64_t q, int s);

// The i-th standard generator: affine_gen(g, i) is the adjacent
// transposition s_i of an affine handle.
GroupElem affine_gen(const FiniteGroupHandle& g, int i);

// The elementary matrix I + r*E_{ij} of an elementary-matrix handle, where
// r is a coefficient vector (constant term first, length <= s).
GroupElem elementary_gen(const FiniteGroupHandle& g, int i, int j,
                         const std::vector<int>& r);

// Window <-> element conversions for affine handles; encode validates the
// window invariants (entries distinct mod m, sum constant mod m*k).
AffinePerm decode_affine(const FiniteGroupHandle& g, const GroupElem& e);
GroupElem encode_affine(const FiniteGroupHandle& g, const AffinePerm& p);

// A matrix over the truncated polynomial ring: entries[i][j] lists the s
// coefficients of the (i, j) entry, constant term first.
struct RingMatrix {
  std::vector<std::vector<std::vector<int>>> entries;
  std::int64_t q = 0;
  int s = 0;
};

RingMatrix decode_matrix(const FiniteGroupHandle& g, const GroupElem& e);
GroupElem encode_matrix(const FiniteGroupHandle& g, const RingMatrix& mat);

// Per-type subgroup generator lists (K_i generated by all standard
// generators except the i-th; for matrix handles, by the cyclically
// consecutive elementary positions avoiding index i, with linear-polynomial
// coefficients).  Throws UnsupportedFamilyError for generic and product
// handles; for products use paired_subgroups.
std::vector<std::vector<GroupElem>> standard_subgroups(
    const FiniteGroupHandle& g);

// Breadth-first closure of gens inside g: all products of generators, in
// level order with each level sorted.  Throws CapacityError past cap
// (default capacity if cap < 0).
std::vector<GroupElem> subgroup_closure(const FiniteGroupHandle& g,
                                        const std::vector<GroupElem>& gens,
                                        std::int64_t cap = -1);

// All elements of g (closure of its generating set).
std::vector<GroupElem> group_elements(const FiniteGroupHandle& g,
                                      std::int64_t cap = -1);

// Left cosets x*K of the subgroup K (given as its element set), one
// canonical representative each: the minimum encoding in the coset.
// Representatives come back ascending.
std::vector<GroupElem> cosets(const FiniteGroupHandle& g,
                              const std::vector<GroupElem>& subgroup_elems,
                              std::int64_t cap = -1);

// Componentwise product group; elements are concatenated factor encodings.
FiniteGroupHandle direct_product(const FiniteGroupHandle& a,
                                 const FiniteGroupHandle& b);

// Generator lists for subgroups K1_{p.first} x K2_{p.second} of a product
// handle, one per pairing entry, built from the factors' standard
// subgroups.
std::vector<std::vector<GroupElem>> paired_subgroups(
    const FiniteGroupHandle& product,
    const std::vector<std::pair<int, int>>& pairing);

// Verifies that normal_elems is closed under conjugation by the group's
// generators (else throws NotNormalError), then reports whether the set
// meets every listed subgroup only in the identity.
bool quotient_check(const FiniteGroupHandle& g,
                    const std::vector<GroupElem>& normal_elems,
                    const std::vector<std::vector<GroupElem>>& subgroup_gens,
                    std::int64_t cap = -1);

}  // namespace hrg
