#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hrg/multipartite.hpp"

namespace hrg {

/// A 1-skeleton together with strictly positive integer edge weights, in
/// ascending edge order.  Weights are used only up to normalization, so
/// counting measures (top faces through an edge) are stored exactly.
struct WeightedSkeleton {
  PartiteGraph graph;
  std::vector<std::pair<VertexId, VertexId>> edges;  // (u,v) with u<v
  std::vector<std::int64_t> weights;                 // parallel to edges

  /// Weight lookup; throws InvalidParamsError for a non-edge.
  std::int64_t weight_of(VertexId u, VertexId v) const;
};

/// All weights 1 (the uniform random-walk skeleton of g).
WeightedSkeleton uniform_weights(const PartiteGraph& g);

/// Skeleton of the link of `tau`, each edge weighted by the number of
/// top-dimensional faces of that link containing it (the constant factorial
/// prefactor is dropped; operators normalize).  For links of top or
/// next-to-top faces there are no edges to weight, so the link must keep at
/// least two parts.  Throws NotPureError if x is not pure and
/// InvalidParamsError for a too-deep tau.
WeightedSkeleton link_weights(const PartiteGraph& x, const Face& tau);

/// Second eigenvalue of the row-normalized weighted transition operator.
struct TransitionSpectrumResult {
  double lambda2 = 0;
  bool connected = false;  // lambda2 is forced to 1 when this is false
};

/// lambda2 (descending order, with multiplicity) of the transition operator
/// of w, computed on the symmetric degree-scaled conjugate.  Vertices with
/// no edges are dropped first; a skeleton left empty throws
/// InvalidParamsError.  Disconnected skeletons report lambda2 = 1 with the
/// flag cleared.  Dense full eigensolve up to `dense_limit` vertices, then a
/// deflated power iteration (residual 1e-10, verified Rayleigh quotients).
TransitionSpectrumResult transition_lambda2(const WeightedSkeleton& w,
                                            std::int64_t dense_limit = 20000);

/// Full transition spectrum, descending.  Dense solver only; throws
/// CapacityError past `dense_limit` vertices.
std::vector<double> transition_spectrum(const WeightedSkeleton& w,
                                        std::int64_t dense_limit = 20000);

/// For bipartite biregular g with side degrees d and k: checks that the
/// transition spectrum equals the adjacency spectrum scaled by 1/sqrt(d*k),
/// entrywise in descending order, within `tolerance`.  Throws
/// NotBiregularError when g is not bipartite with constant positive side
/// degrees.
bool biregular_spectrum_relation_check(const PartiteGraph& g,
                                       double tolerance = 1e-9);

/// mu = lambda / (1 - (d-1)*lambda), the expansion a lambda-bound on
/// next-to-top links propagates down d levels.  Throws BoundUndefinedError
/// when (d-1)*lambda >= 1.
double trickling_bound(double lambda, int d);

/// Local-spectral certificate: second transition eigenvalue of the global
/// weighted skeleton and of the link of every face whose link still has an
/// edge set (at least two parts).
struct SpectralCertificate {
  double global_lambda2 = 0;
  std::map<std::vector<VertexId>, double> link_lambda2;  // by face vertices
  double max_link_lambda2 = -1;        // -1 when there are no proper links
  std::optional<double> trickle_mu;    // from the worst 1-dimensional link
  bool pass = false;
  double lambda_target = 0;
  double tolerance = 0;
};

/// Certifies that the global skeleton and every link of dimension >= 1 have
/// transition lambda2 <= lambda_target + tolerance.  Disconnected links
/// count as lambda2 = 1.  Throws NotPureError / DisconnectedError on inputs
/// that are not pure connected complexes.  `jobs` > 1 computes link
/// eigenvalues on that many threads; results are identical for any job
/// count (every link is solved independently and collected in face order).
SpectralCertificate hdx_certificate(const PartiteGraph& x,
                                    double lambda_target,
                                    double tolerance = 1e-9,
                                    int jobs = 1);

}  // namespace hrg
