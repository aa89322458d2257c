#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "hrg/multipartite.hpp"
#include "hrg/product.hpp"

namespace hrg {

/// Exact degree tuple (d_0, d_1, ..., d_{n-1}) in arbitrary precision.  The
/// symmetrized families reach values like q^{2*(n+1)!} that overflow every
/// fixed-width integer, so closed forms are evaluated over big integers.
struct BigDegreeProfile {
  std::vector<mpz_class> dims;

  bool operator==(const BigDegreeProfile&) const = default;
};

/// Lift a measured machine-integer profile into big integers, for exact
/// comparison against a closed-form profile.
BigDegreeProfile widen(const DegreeProfile& p);

/// Coset-complex families with closed-form degree profiles.  The el-*
/// families live on elementary-matrix groups over coefficient rings of
/// bounded-degree polynomials; the affine-* families on affine permutation
/// groups.  "Base" means all standard single-column (or single-strand)
/// subgroups, "adhoc" the five-column knight-move pairing, "symmetrized"
/// the iterated product over all orderings of the standard system.
enum class DegreeFamily {
  kElBase,
  kElSymmetrized,
  kElAdhoc,
  kAffineBase,
  kAffine3r,
  kAffineAdhoc,
  kAffineSymmetrized,
};

/// Parameters for the closed-form profiles.  Each family reads only the
/// fields listed below; unread fields are ignored.
///
///   kElBase:            n (= 2), q    -- three columns
///   kElSymmetrized:     n (>= 2), q
///   kElAdhoc:           n (= 4), q    -- five columns, knight pairing
///   kAffineBase:        m (= 3)       -- three strands
///   kAffine3r:          r (>= 1)      -- 3r strands, subgroups at 0, r, 2r
///   kAffineAdhoc:       r (>= 1)      -- 5r strands, knight pairing
///   kAffineSymmetrized: m (>= 3)
///
/// Conventions: an el complex on n+1 columns is (n+1)-partite; `q` is the
/// residue field size.  Affine families are keyed by the strand count m
/// (matching affine_group(m, k)), so an affine complex on m strands is
/// m-partite and its formulas below use n = m - 1 parts-minus-one.
struct DegreeFormulaInput {
  DegreeFamily family = DegreeFamily::kElBase;
  int n = 0;  ///< el families: column count minus one
  int m = 0;  ///< affine families: strand count
  int q = 0;  ///< el families: residue field size
  int r = 0;  ///< affine families: strand-spacing scale
};

/// Exponent contributed to a standard subgroup's order by an arc of m free
/// columns: log_q of the number of unitriangular matrices supported on the
/// arc window when every bounded-degree entry is free.  Equals both the
/// direct sum over entry positions, sum_{i=0}^{m-1} (i+2)(m-i), and the
/// closed cubic (m^3 + 6m^2 + 5m)/6.  Throws InvalidParamsError for m < 0.
mpz_class arc_exponent(long m);

/// Closed-form degree profile of an el-* family.  Assumes the coefficient
/// ring is long enough to host every bounded-degree entry of the standard
/// subgroups; rings truncated shorter than that collapse some entries and
/// the materialized complex measures strictly below this prediction (the
/// three-column build over degree-< 2 coefficients is the known case).
/// Throws UnsupportedFamilyError for an affine family, InvalidParamsError
/// for parameters outside the family's domain, CapacityError when the
/// result would need gigabit integers (n > 8 symmetrized).
BigDegreeProfile el_profile(const DegreeFormulaInput& input);

/// Closed-form degree profile of an affine-* family.  Throws
/// UnsupportedFamilyError for an el family, InvalidParamsError for
/// parameters outside the family's domain (kAffineBase is only
/// hyper-regular on exactly three strands), CapacityError for m > 9
/// symmetrized.
BigDegreeProfile affine_profile(const DegreeFormulaInput& input);

/// Per-type common-neighborhood counts, as produced by type_regularity():
/// table[J][i] is the number of joint neighbors in part i of a type-J
/// clique.
using TypeRegularityTable = std::map<std::vector<int>, std::map<int, std::int64_t>>;

/// Predicted degree profile of the symmetrization over h of a type-regular
/// complex with the given count table: for a type set J of size k+1,
/// d_k = sum over parts i outside J of the product over all pi in h of
/// table[pi(J)][pi(i)].  The prediction is computed for every type set of
/// each size; when h is set-transitive all choices agree by construction,
/// and the function also succeeds for any h whose predictions happen to
/// agree (the trivial group on a hyper-regular table, for instance).
/// Throws NotSetTransitiveError when two type sets of the same size predict
/// different values (the symmetrization is then not hyper-regular, or at
/// least not certified by this formula), InvalidParamsError when the table
/// lacks an entry the formula needs or h.degree() < 2.
BigDegreeProfile symmetrized_profile_from_type_regular(
    const TypeRegularityTable& table, const PermGroup& h);

}  // namespace hrg
