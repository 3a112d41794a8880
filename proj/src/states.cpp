#include "gls/states.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace gls {
namespace {

void check_werner(const WernerParams& p) {
  if (p.d < 2)
    throw std::invalid_argument("Werner dimension must be at least 2, got " +
                                std::to_string(p.d));
  if (!(p.x >= 0.0 && p.x <= 1.0))
    throw std::invalid_argument("Werner parameter x must lie in [0, 1], got " +
                                std::to_string(p.x));
}

void check_isotropic(const IsotropicParams& p) {
  if (p.d < 2)
    throw std::invalid_argument(
        "isotropic dimension must be at least 2, got " + std::to_string(p.d));
  if (!(p.fidelity >= 0.0 && p.fidelity <= 1.0))
    throw std::invalid_argument("fidelity must lie in [0, 1], got " +
                                std::to_string(p.fidelity));
}

double laplacian_trace(const ClusteredGraph& cg, LaplacianKind kind) {
  const WeightedDigraph& g = cg.graph();
  double d = degrees(g).sum();
  for (int v = 0; v < g.vertex_count(); ++v)
    d += kind_sign(kind) * g.weight(v, v).real();
  return d;
}

}  // namespace

DensityMatrix werner_density(const WernerParams& p) {
  check_werner(p);
  const int d = p.d;
  const double denom = static_cast<double>(d) * d * d - d;
  MatrixXcd m = MatrixXcd::Zero(d * d, d * d);
  m.diagonal().setConstant((d - p.x) / denom);
  // Flip operator: |ab><ba| summed over a, b.
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      m(a * d + b, b * d + a) += (p.x * d - 1.0) / denom;
  return DensityMatrix::from_matrix(std::move(m));
}

ClusteredGraph werner_graph(const WernerParams& p) {
  return ClusteredGraph(
      extract_graph(werner_density(p), LaplacianKind::signless), p.d, p.d);
}

CriterionReport werner_discord_verdict(const WernerParams& p) {
  return zero_discord_structural(werner_graph(p), LaplacianKind::signless);
}

DensityMatrix isotropic_density(const IsotropicParams& p) {
  check_isotropic(p);
  const int d = p.d;
  const double dd = static_cast<double>(d) * d;
  const double scale = dd / (dd - 1.0);
  MatrixXcd m = MatrixXcd::Zero(d * d, d * d);
  m.diagonal().setConstant(scale * (1.0 - p.fidelity) / dd);
  // Projector onto the maximally entangled vector: |aa><cc| / d.
  for (int a = 0; a < d; ++a)
    for (int c = 0; c < d; ++c)
      m(a * d + a, c * d + c) += scale * (p.fidelity - 1.0 / dd) / d;
  return DensityMatrix::from_matrix(std::move(m));
}

std::pair<double, double> isotropic_graphical_range(int d) {
  if (d < 2)
    throw std::invalid_argument(
        "isotropic dimension must be at least 2, got " + std::to_string(d));
  const double dd = static_cast<double>(d) * d;
  const double lo = 1.0 / (dd + d + 1.0);
  const double hi = d == 2 ? 1.0 : 1.0 / (dd - d - 1.0);
  return {lo, hi};
}

ClusteredGraph isotropic_graph(const IsotropicParams& p) {
  check_isotropic(p);
  const auto [lo, hi] = isotropic_graphical_range(p.d);
  if (p.fidelity < lo || p.fidelity > hi)
    throw std::invalid_argument(
        "fidelity " + std::to_string(p.fidelity) +
        " outside the graphical window [" + std::to_string(lo) + ", " +
        std::to_string(hi) + "] for d = " + std::to_string(p.d));
  return ClusteredGraph(
      extract_graph(isotropic_density(p), LaplacianKind::signless), p.d, p.d);
}

CriterionReport isotropic_discord_verdict(const IsotropicParams& p) {
  return zero_discord_structural(isotropic_graph(p), LaplacianKind::signless);
}

ClusteredGraph xstate_graph(const XStateSpec& spec) {
  const int m = spec.clusters, n = spec.cluster_size;
  if (m < 1 || n < 1)
    throw std::invalid_argument("cluster shape must be positive, got " +
                                std::to_string(m) + " x " + std::to_string(n));
  if (spec.diag.size() > 1)
    throw std::invalid_argument(
        "at most one cluster may carry inner edges, got " +
        std::to_string(spec.diag.size()));
  const auto flat = [n](int mu, int i) { return (mu - 1) * n + (i - 1); };
  const auto check_kpos = [n](int k) {
    if (k < 1 || k > n)
      throw std::invalid_argument("anti-diagonal position " +
                                  std::to_string(k) + " out of range 1.." +
                                  std::to_string(n));
  };

  WeightedDigraph g(m * n);
  std::set<std::pair<int, int>> seen_cross;
  for (const auto& block : spec.cross) {
    if (block.mu < 1 || block.nu > m || block.mu >= block.nu)
      throw std::invalid_argument("cross block needs 1 <= mu < nu <= " +
                                  std::to_string(m) + ", got (" +
                                  std::to_string(block.mu) + ", " +
                                  std::to_string(block.nu) + ")");
    if (!seen_cross.insert({block.mu, block.nu}).second)
      throw std::invalid_argument("cross block (" + std::to_string(block.mu) +
                                  ", " + std::to_string(block.nu) +
                                  ") listed twice");
    std::set<int> seen_k;
    for (const auto& e : block.edges) {
      check_kpos(e.k);
      if (!seen_k.insert(e.k).second)
        throw std::invalid_argument("position " + std::to_string(e.k) +
                                    " listed twice in one cross block");
      g = add_edge(std::move(g), flat(block.mu, e.k),
                   flat(block.nu, n + 1 - e.k), e.w);
    }
  }
  for (const auto& block : spec.diag) {
    if (block.alpha < 1 || block.alpha > m)
      throw std::invalid_argument("cluster index " +
                                  std::to_string(block.alpha) +
                                  " out of range 1.." + std::to_string(m));
    std::set<int> seen_k;
    for (const auto& e : block.edges) {
      check_kpos(e.k);
      if (e.k > n + 1 - e.k)
        throw std::invalid_argument(
            "inner edge position " + std::to_string(e.k) +
            " duplicates its partner; list the k <= n+1-k representative");
      if (!seen_k.insert(e.k).second)
        throw std::invalid_argument("position " + std::to_string(e.k) +
                                    " listed twice in the inner block");
      // The fixed point of the pairing is a loop and must be real; add_edge
      // enforces that.
      g = add_edge(std::move(g), flat(block.alpha, e.k),
                   flat(block.alpha, n + 1 - e.k), e.w);
    }
  }
  for (const auto& loop : spec.loops) {
    if (loop.mu < 1 || loop.mu > m || loop.i < 1 || loop.i > n)
      throw std::invalid_argument("loop at (" + std::to_string(loop.mu) +
                                  ", " + std::to_string(loop.i) +
                                  ") out of range");
    const int v = flat(loop.mu, loop.i);
    g = add_edge(std::move(g), v, v, loop.w);
  }
  return ClusteredGraph(std::move(g), m, n);
}

bool is_xstate(const ClusteredGraph& cg) {
  const int n = cg.cluster_size();
  int inner_cluster = 0;
  for (const auto& [key, w] : cg.graph().edges()) {
    const auto [a, b] = key;
    if (a >= b) continue;  // each pair once, loops skipped
    const int mu = a / n + 1, i = a % n + 1;
    const int nu = b / n + 1, j = b % n + 1;
    if (j != n + 1 - i) return false;
    if (mu == nu) {
      if (inner_cluster != 0 && inner_cluster != mu) return false;
      inner_cluster = mu;
    }
  }
  return true;
}

bool xstate_zero_discord(const ClusteredGraph& cg, LaplacianKind kind,
                         double tol) {
  if (!is_xstate(cg))
    throw std::invalid_argument(
        "graph is not X-shaped; the two-condition test does not apply");
  if (laplacian_trace(cg, kind) <= 1e-12)
    throw std::invalid_argument(std::string("the ") + kind_name(kind) +
                                " of this graph has zero trace; it does not "
                                "normalize to a state");

  const int m = cg.clusters(), n = cg.cluster_size();
  std::vector<WeightedDigraph> nonempty;
  for (int mu = 1; mu <= m; ++mu)
    for (int nu = mu + 1; nu <= m; ++nu) {
      WeightedDigraph sub = cross_subgraph(cg, mu, nu);
      if (!sub.edges().empty()) nonempty.push_back(std::move(sub));
    }
  for (std::size_t p = 1; p < nonempty.size(); ++p)
    if (!graphs_equal(nonempty[0], nonempty[p])) return false;

  for (int mu = 1; mu <= m; ++mu)
    for (int i = 1; i <= n; ++i)
      if (std::abs(cg.vertex_degree(mu, i) -
                   cg.vertex_degree(mu, n + 1 - i)) > tol)
        return false;
  return true;
}

}  // namespace gls
