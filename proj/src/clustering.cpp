#include "gls/clustering.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gls {
namespace {

void check_cluster(const ClusteredGraph& cg, int mu, const char* what) {
  if (mu < 1 || mu > cg.clusters())
    throw std::invalid_argument(std::string(what) + " index " +
                                std::to_string(mu) + " out of range 1.." +
                                std::to_string(cg.clusters()));
}

void check_position(const ClusteredGraph& cg, int i) {
  if (i < 1 || i > cg.cluster_size())
    throw std::invalid_argument("position " + std::to_string(i) +
                                " out of range 1.." +
                                std::to_string(cg.cluster_size()));
}

}  // namespace

ClusteredGraph::ClusteredGraph(WeightedDigraph g, int clusters,
                               int cluster_size)
    : g_(std::move(g)), m_(clusters), n_(cluster_size) {
  if (m_ < 1 || n_ < 1)
    throw std::invalid_argument("cluster shape must be positive, got " +
                                std::to_string(m_) + " x " +
                                std::to_string(n_));
  if (m_ * n_ != g_.vertex_count())
    throw std::invalid_argument(
        "cluster shape " + std::to_string(m_) + " x " + std::to_string(n_) +
        " does not cover " + std::to_string(g_.vertex_count()) + " vertices");
}

int ClusteredGraph::flat_index(int mu, int i) const {
  check_cluster(*this, mu, "cluster");
  check_position(*this, i);
  return (mu - 1) * n_ + (i - 1);
}

Complex ClusteredGraph::weight(int mu, int i, int nu, int j) const {
  return g_.weight(flat_index(mu, i), flat_index(nu, j));
}

double ClusteredGraph::vertex_degree(int mu, int i) const {
  return degree(g_, flat_index(mu, i));
}

MatrixXcd adjacency_block(const ClusteredGraph& cg, int mu, int nu) {
  check_cluster(cg, mu, "cluster");
  check_cluster(cg, nu, "cluster");
  const int n = cg.cluster_size();
  MatrixXcd b = MatrixXcd::Zero(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) b(i - 1, j - 1) = cg.weight(mu, i, nu, j);
  return b;
}

const MatrixXcd& BlockFamily::block(int mu, int nu) const {
  return blocks.at((mu - 1) * clusters + (nu - 1));
}

MatrixXcd& BlockFamily::block(int mu, int nu) {
  return blocks.at((mu - 1) * clusters + (nu - 1));
}

BlockFamily density_blocks(const ClusteredGraph& cg, LaplacianKind kind) {
  const double s = kind_sign(kind);
  const int m = cg.clusters(), n = cg.cluster_size();
  const VectorXd deg = degrees(cg.graph());
  double d = deg.sum();
  for (int v = 0; v < m * n; ++v)
    d += s * cg.graph().weight(v, v).real();
  if (d <= 1e-12)
    throw std::invalid_argument(std::string("the ") + kind_name(kind) +
                                " of this graph has zero trace; it does not "
                                "normalize to a state");
  BlockFamily f{m, n, {}};
  f.blocks.reserve(m * m);
  for (int mu = 1; mu <= m; ++mu)
    for (int nu = 1; nu <= m; ++nu) {
      MatrixXcd b = s * adjacency_block(cg, mu, nu);
      if (mu == nu)
        b.diagonal() += deg.segment((mu - 1) * n, n).cast<Complex>();
      f.blocks.push_back(b / d);
    }
  return f;
}

MatrixXcd assemble(const BlockFamily& f) {
  const int m = f.clusters, n = f.cluster_size;
  MatrixXcd full = MatrixXcd::Zero(m * n, m * n);
  for (int mu = 1; mu <= m; ++mu)
    for (int nu = 1; nu <= m; ++nu)
      full.block((mu - 1) * n, (nu - 1) * n, n, n) = f.block(mu, nu);
  return full;
}

WeightedDigraph cross_subgraph(const ClusteredGraph& cg, int mu, int nu) {
  check_cluster(cg, mu, "cluster");
  check_cluster(cg, nu, "cluster");
  if (mu == nu)
    throw std::invalid_argument(
        "cross subgraph needs distinct clusters, got " + std::to_string(mu) +
        " twice; use induced_subgraph for one cluster");
  const int n = cg.cluster_size();
  WeightedDigraph sub(2 * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Complex w = cg.weight(mu, i, nu, j);
      if (w != Complex(0.0))
        sub = add_edge(std::move(sub), i - 1, n + j - 1, w);
    }
  return sub;
}

WeightedDigraph induced_subgraph(const ClusteredGraph& cg, int mu) {
  check_cluster(cg, mu, "cluster");
  const int n = cg.cluster_size();
  WeightedDigraph sub(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Complex w = cg.weight(mu, i, mu, j);
      if (w != Complex(0.0)) sub = add_edge(std::move(sub), i - 1, j - 1, w);
    }
    const Complex l = cg.weight(mu, i, mu, i);
    if (l != Complex(0.0))
      sub = add_edge(std::move(sub), i - 1, i - 1, l);
  }
  return sub;
}

IndexSet support(const VectorXcd& a, double tol) {
  IndexSet s;
  for (int k = 0; k < a.size(); ++k)
    if (std::abs(a(k)) > tol) s.push_back(k + 1);
  return s;
}

Complex support_product(const VectorXcd& a, const VectorXcd& b, double tol) {
  if (a.size() != b.size())
    throw std::invalid_argument("support product needs equal lengths, got " +
                                std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
  Complex sum(0.0);
  for (int k = 0; k < a.size(); ++k)
    if (std::abs(a(k)) > tol && std::abs(b(k)) > tol) sum += a(k) * b(k);
  return sum;
}

WeightedNeighborhood block_row(const ClusteredGraph& cg, int mu, int nu,
                               int i) {
  check_position(cg, i);
  WeightedNeighborhood nbd;
  for (int k = 1; k <= cg.cluster_size(); ++k) {
    const Complex w = cg.weight(mu, i, nu, k);
    if (w != Complex(0.0)) {
      nbd.indices.push_back(k);
      nbd.weights.push_back(w);
    }
  }
  return nbd;
}

WeightedNeighborhood block_col(const ClusteredGraph& cg, int mu, int nu,
                               int j) {
  check_position(cg, j);
  WeightedNeighborhood nbd;
  for (int k = 1; k <= cg.cluster_size(); ++k) {
    const Complex w = cg.weight(mu, k, nu, j);
    if (w != Complex(0.0)) {
      nbd.indices.push_back(k);
      nbd.weights.push_back(w);
    }
  }
  return nbd;
}

}  // namespace gls
