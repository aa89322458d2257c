#include "hrg/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>

namespace hrg {
namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
  const auto a = static_cast<std::uint32_t>(std::min(u, v));
  const auto b = static_cast<std::uint32_t>(std::max(u, v));
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

/// Skeleton with zero-degree vertices dropped and ids compacted to 0..n-1.
struct CompactSkeleton {
  std::int64_t n = 0;
  std::vector<std::int64_t> offsets;  // CSR over kept vertices
  std::vector<std::int32_t> adj;
  std::vector<double> wts;            // parallel to adj
  std::vector<double> degree;         // weighted degree, strictly positive
  bool connected = false;
};

CompactSkeleton compact_skeleton(const WeightedSkeleton& w) {
  CompactSkeleton c;
  std::vector<VertexId> touched;
  touched.reserve(w.edges.size() * 2);
  for (const auto& [u, v] : w.edges) {
    touched.push_back(u);
    touched.push_back(v);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  c.n = static_cast<std::int64_t>(touched.size());
  if (c.n == 0) return c;

  const auto index_of = [&](VertexId v) {
    return static_cast<std::int32_t>(
        std::lower_bound(touched.begin(), touched.end(), v) -
        touched.begin());
  };

  c.offsets.assign(static_cast<std::size_t>(c.n) + 1, 0);
  for (const auto& [u, v] : w.edges) {
    ++c.offsets[static_cast<std::size_t>(index_of(u)) + 1];
    ++c.offsets[static_cast<std::size_t>(index_of(v)) + 1];
  }
  for (std::size_t i = 1; i < c.offsets.size(); ++i)
    c.offsets[i] += c.offsets[i - 1];
  c.adj.resize(static_cast<std::size_t>(c.offsets.back()));
  c.wts.resize(c.adj.size());
  std::vector<std::int64_t> cursor(c.offsets.begin(), c.offsets.end() - 1);
  for (std::size_t e = 0; e < w.edges.size(); ++e) {
    const auto [u, v] = w.edges[e];
    const auto wt = static_cast<double>(w.weights[e]);
    const std::int32_t iu = index_of(u), iv = index_of(v);
    c.adj[static_cast<std::size_t>(cursor[static_cast<std::size_t>(iu)])] = iv;
    c.wts[static_cast<std::size_t>(cursor[static_cast<std::size_t>(iu)]++)] = wt;
    c.adj[static_cast<std::size_t>(cursor[static_cast<std::size_t>(iv)])] = iu;
    c.wts[static_cast<std::size_t>(cursor[static_cast<std::size_t>(iv)]++)] = wt;
  }
  c.degree.assign(static_cast<std::size_t>(c.n), 0.0);
  for (std::int64_t i = 0; i < c.n; ++i)
    for (std::int64_t k = c.offsets[static_cast<std::size_t>(i)];
         k < c.offsets[static_cast<std::size_t>(i) + 1]; ++k)
      c.degree[static_cast<std::size_t>(i)] +=
          c.wts[static_cast<std::size_t>(k)];

  std::vector<char> seen(static_cast<std::size_t>(c.n), 0);
  std::vector<std::int32_t> stack{0};
  seen[0] = 1;
  std::int64_t reached = 1;
  while (!stack.empty()) {
    const std::int32_t i = stack.back();
    stack.pop_back();
    for (std::int64_t k = c.offsets[static_cast<std::size_t>(i)];
         k < c.offsets[static_cast<std::size_t>(i) + 1]; ++k) {
      const std::int32_t j = c.adj[static_cast<std::size_t>(k)];
      if (!seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = 1;
        stack.push_back(j);
        ++reached;
      }
    }
  }
  c.connected = reached == c.n;
  return c;
}

/// Descending eigenvalues of the symmetric conjugate D^{-1/2} W D^{-1/2}.
std::vector<double> dense_spectrum(const CompactSkeleton& c) {
  const auto n = static_cast<Eigen::Index>(c.n);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> invsqrt(static_cast<std::size_t>(c.n));
  for (std::int64_t i = 0; i < c.n; ++i)
    invsqrt[static_cast<std::size_t>(i)] =
        1.0 / std::sqrt(c.degree[static_cast<std::size_t>(i)]);
  for (std::int64_t i = 0; i < c.n; ++i)
    for (std::int64_t k = c.offsets[static_cast<std::size_t>(i)];
         k < c.offsets[static_cast<std::size_t>(i) + 1]; ++k) {
      const std::int32_t j = c.adj[static_cast<std::size_t>(k)];
      s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          c.wts[static_cast<std::size_t>(k)] *
          invsqrt[static_cast<std::size_t>(i)] *
          invsqrt[static_cast<std::size_t>(j)];
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s,
                                                    Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + n);
  std::reverse(out.begin(), out.end());
  return out;
}

/// Deflated power iteration on (S+I)/2 for the second eigenvalue of S.
/// The top eigenvector of S is known exactly: D^{1/2} * ones.
double iterative_lambda2(const CompactSkeleton& c) {
  const auto n = static_cast<std::size_t>(c.n);
  std::vector<double> invsqrt(n), top(n);
  double top_norm = 0;
  for (std::size_t i = 0; i < n; ++i) {
    invsqrt[i] = 1.0 / std::sqrt(c.degree[i]);
    top[i] = std::sqrt(c.degree[i]);
    top_norm += top[i] * top[i];
  }
  top_norm = std::sqrt(top_norm);
  for (double& t : top) t /= top_norm;

  const auto apply_m = [&](const std::vector<double>& in,
                           std::vector<double>& out) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0;
      for (std::int64_t k = c.offsets[i]; k < c.offsets[i + 1]; ++k) {
        const auto j = static_cast<std::size_t>(
            c.adj[static_cast<std::size_t>(k)]);
        acc += c.wts[static_cast<std::size_t>(k)] * invsqrt[j] * in[j];
      }
      out[i] = 0.5 * (acc * invsqrt[i] + in[i]);
    }
  };
  const auto deflate = [&](std::vector<double>& v) {
    double dot = 0;
    for (std::size_t i = 0; i < n; ++i) dot += v[i] * top[i];
    for (std::size_t i = 0; i < n; ++i) v[i] -= dot * top[i];
  };

  std::mt19937 rng(0x5eed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> v(n), mv(n);
  for (double& x : v) x = unit(rng);
  deflate(v);
  double norm = 0;
  for (const double x : v) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;

  constexpr double kResidualTol = 1e-10;
  constexpr int kMaxIters = 400000;
  for (int iter = 0; iter < kMaxIters; ++iter) {
    apply_m(v, mv);
    deflate(mv);
    double theta = 0;
    for (std::size_t i = 0; i < n; ++i) theta += v[i] * mv[i];
    double resid = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = mv[i] - theta * v[i];
      resid += r * r;
    }
    if (std::sqrt(resid) <= kResidualTol) {
      // Verify both leading Rayleigh quotients before trusting the result:
      // the known top vector must sit at eigenvalue 1 of S.
      apply_m(top, mv);
      double top_q = 0;
      for (std::size_t i = 0; i < n; ++i) top_q += top[i] * mv[i];
      if (std::abs(2.0 * top_q - 1.0 - 1.0) > 1e-8)
        throw Error("transition operator lost its stationary vector");
      return 2.0 * theta - 1.0;
    }
    double mnorm = 0;
    for (const double x : mv) mnorm += x * x;
    mnorm = std::sqrt(mnorm);
    for (std::size_t i = 0; i < n; ++i) v[i] = mv[i] / mnorm;
  }
  throw Error("power iteration did not converge to residual 1e-10");
}

/// link_weights without the purity re-check (used by the certifier, which
/// validates purity once up front).
WeightedSkeleton link_weights_unchecked(const PartiteGraph& x,
                                        const Face& tau) {
  WeightedSkeleton out;
  out.graph = link(x, tau.vertices);
  if (out.graph.nparts() < 2)
    throw InvalidParamsError(
        "link has fewer than two parts; nothing to weight");

  const int top = out.graph.nparts();
  std::unordered_map<std::uint64_t, std::int64_t> counts;
  for (const Face& t : enumerate_cliques(out.graph, top))
    for (std::size_t i = 0; i < t.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < t.vertices.size(); ++j)
        ++counts[edge_key(t.vertices[i], t.vertices[j])];

  for (const VertexId u : out.graph.vertices()) {
    for (const VertexId w : out.graph.neighbors(u)) {
      if (w < u) continue;
      const auto it = counts.find(edge_key(u, w));
      const std::int64_t weight = it == counts.end() ? 0 : it->second;
      if (weight <= 0)
        throw NotPureError("link edge {" + std::to_string(u) + "," +
                           std::to_string(w) +
                           "} lies in no top face of the link");
      out.edges.emplace_back(u, w);
      out.weights.push_back(weight);
    }
  }
  return out;
}

}  // namespace

std::int64_t WeightedSkeleton::weight_of(VertexId u, VertexId v) const {
  const auto key = std::make_pair(std::min(u, v), std::max(u, v));
  const auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key)
    throw InvalidParamsError("no such edge in the weighted skeleton");
  return weights[static_cast<std::size_t>(it - edges.begin())];
}

WeightedSkeleton uniform_weights(const PartiteGraph& g) {
  WeightedSkeleton out;
  out.graph = g;
  for (const VertexId u : g.vertices())
    for (const VertexId w : g.neighbors(u))
      if (u < w) {
        out.edges.emplace_back(u, w);
        out.weights.push_back(1);
      }
  return out;
}

WeightedSkeleton link_weights(const PartiteGraph& x, const Face& tau) {
  const auto purity = is_pure(x);
  if (!purity.ok)
    throw NotPureError("complex is not pure; weights are undefined");
  return link_weights_unchecked(x, tau);
}

TransitionSpectrumResult transition_lambda2(const WeightedSkeleton& w,
                                            std::int64_t dense_limit) {
  const CompactSkeleton c = compact_skeleton(w);
  if (c.n == 0)
    throw InvalidParamsError("weighted skeleton has no edges");
  TransitionSpectrumResult res;
  res.connected = c.connected;
  if (!c.connected) {
    res.lambda2 = 1.0;
    return res;
  }
  if (c.n <= dense_limit) {
    res.lambda2 = dense_spectrum(c)[1];
  } else {
    res.lambda2 = iterative_lambda2(c);
  }
  return res;
}

std::vector<double> transition_spectrum(const WeightedSkeleton& w,
                                        std::int64_t dense_limit) {
  const CompactSkeleton c = compact_skeleton(w);
  if (c.n == 0)
    throw InvalidParamsError("weighted skeleton has no edges");
  if (c.n > dense_limit)
    throw CapacityError("dense spectrum limited to " +
                        std::to_string(dense_limit) + " vertices");
  return dense_spectrum(c);
}

bool biregular_spectrum_relation_check(const PartiteGraph& g,
                                       double tolerance) {
  if (g.nparts() != 2)
    throw NotBiregularError("graph is not bipartite");
  std::array<std::int64_t, 2> deg{-1, -1};
  for (const VertexId v : g.vertices()) {
    const auto d = static_cast<std::int64_t>(g.neighbors(v).size());
    auto& slot = deg[static_cast<std::size_t>(g.type_of(v))];
    if (slot < 0) slot = d;
    if (slot != d)
      throw NotBiregularError("side degrees are not constant");
  }
  if (deg[0] <= 0 || deg[1] <= 0)
    throw NotBiregularError("a side has no edges");

  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  const std::vector<VertexId> verts = g.vertices();
  std::unordered_map<VertexId, Eigen::Index> pos;
  for (Eigen::Index i = 0; i < n; ++i)
    pos.emplace(verts[static_cast<std::size_t>(i)], i);
  for (const VertexId u : verts)
    for (const VertexId w : g.neighbors(u))
      a(pos.at(u), pos.at(w)) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a,
                                                    Eigen::EigenvaluesOnly);

  const std::vector<double> trans = transition_spectrum(uniform_weights(g));
  const double scale = 1.0 / std::sqrt(static_cast<double>(deg[0]) *
                                       static_cast<double>(deg[1]));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double adj_scaled = es.eigenvalues()(n - 1 - i) * scale;
    if (std::abs(adj_scaled - trans[static_cast<std::size_t>(i)]) > tolerance)
      return false;
  }
  return true;
}

double trickling_bound(double lambda, int d) {
  if (d < 1) throw InvalidParamsError("dimension must be >= 1");
  if ((d - 1) * lambda >= 1.0)
    throw BoundUndefinedError("bound undefined: (d-1)*lambda >= 1");
  return lambda / (1.0 - (d - 1) * lambda);
}

SpectralCertificate hdx_certificate(const PartiteGraph& x,
                                    double lambda_target, double tolerance,
                                    int jobs) {
  if (!is_pure(x).ok)
    throw NotPureError("complex is not pure");
  if (!is_connected(x))
    throw DisconnectedError("complex is disconnected");
  if (jobs < 1)
    throw InvalidParamsError("jobs must be at least 1");

  SpectralCertificate cert;
  cert.lambda_target = lambda_target;
  cert.tolerance = tolerance;
  cert.global_lambda2 =
      transition_lambda2(link_weights_unchecked(x, Face{})).lambda2;

  const int nparts = x.nparts();
  double max_link = -1.0, max_onedim = -1.0;
  for (int size = 1; size <= nparts - 2; ++size) {
    const std::vector<Face> faces = enumerate_cliques(x, size);
    std::vector<double> values(faces.size());
    const int workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(jobs), faces.size()));
    if (workers <= 1) {
      for (std::size_t i = 0; i < faces.size(); ++i) {
        values[i] =
            transition_lambda2(link_weights_unchecked(x, faces[i])).lambda2;
      }
    } else {
      // Each link is an independent eigenproblem; hand out faces by atomic
      // index and collect by position so the result never depends on the
      // thread count.
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
          for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= faces.size()) return;
            values[i] =
                transition_lambda2(link_weights_unchecked(x, faces[i])).lambda2;
          }
        });
      }
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
      cert.link_lambda2.emplace(faces[i].vertices, values[i]);
      max_link = std::max(max_link, values[i]);
      if (size == nparts - 2) max_onedim = std::max(max_onedim, values[i]);
    }
  }
  cert.max_link_lambda2 = max_link;
  if (max_onedim >= 0 && (nparts - 2) * max_onedim < 1.0)
    cert.trickle_mu = trickling_bound(max_onedim, nparts - 1);
  cert.pass = std::max(cert.global_lambda2, max_link) <=
              lambda_target + tolerance;
  return cert;
}

}  // namespace hrg
