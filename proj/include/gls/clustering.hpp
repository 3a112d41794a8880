#pragma once

#include <vector>

#include "gls/density.hpp"
#include "gls/graph.hpp"

namespace gls {

using Eigen::VectorXcd;

// A weighted digraph on m*n vertices partitioned into m clusters of n
// consecutive vertices.  Cluster indices mu and within-cluster positions i
// are 1-based in this interface; vertex (mu, i) sits at flat index
// (mu-1)*n + (i-1).
class ClusteredGraph {
 public:
  ClusteredGraph(WeightedDigraph g, int clusters, int cluster_size);

  const WeightedDigraph& graph() const { return g_; }
  int clusters() const { return m_; }
  int cluster_size() const { return n_; }

  int flat_index(int mu, int i) const;
  // Weight of the edge from vertex (mu, i) to vertex (nu, j).
  Complex weight(int mu, int i, int nu, int j) const;
  double vertex_degree(int mu, int i) const;

 private:
  WeightedDigraph g_;
  int m_, n_;
};

// n x n block of the adjacency matrix: entry (i, j) is the weight from
// vertex (mu, i) to vertex (nu, j).
MatrixXcd adjacency_block(const ClusteredGraph& cg, int mu, int nu);

// The m*m blocks B(mu, nu) of a block-partitioned mn x mn matrix, with
// 1-based block accessor.
struct BlockFamily {
  int clusters = 0;
  int cluster_size = 0;
  std::vector<MatrixXcd> blocks;

  const MatrixXcd& block(int mu, int nu) const;
  MatrixXcd& block(int mu, int nu);
};

// Blocks of the normalized Laplacian state of cg without forming the full
// matrix: off-diagonal blocks s*A(mu,nu)/d and diagonal blocks
// (D(mu) + s*A(mu,mu))/d, where d = tr(D + s*A) and s is the kind sign.
BlockFamily density_blocks(const ClusteredGraph& cg, LaplacianKind kind);

// Reassemble a block family into the full matrix (test/oracle helper).
MatrixXcd assemble(const BlockFamily& f);

// Bipartite subgraph between distinct clusters mu and nu: 2n vertices, the
// first n copying cluster mu, with adjacency [[0, A(mu,nu)], [A(mu,nu)*, 0]].
WeightedDigraph cross_subgraph(const ClusteredGraph& cg, int mu, int nu);

// Subgraph induced by cluster mu alone, loops included.
WeightedDigraph induced_subgraph(const ClusteredGraph& cg, int mu);

// Sorted 1-based positions at which a vector exceeds the support threshold.
using IndexSet = std::vector<int>;
IndexSet support(const VectorXcd& a, double tol = 1e-12);

// Sum of a(k)*b(k) over the intersection of the supports of a and b; no
// conjugation is applied.  Lengths must match.
Complex support_product(const VectorXcd& a, const VectorXcd& b,
                        double tol = 1e-12);

// Sparse view of one row or column of an adjacency block: the support
// positions (1-based, sorted) and the weights at those positions.  Row i of
// block (mu, nu) lists the out-neighbours of vertex (mu, i) inside cluster
// nu; column j lists the in-neighbours of vertex (nu, j) from cluster mu.
struct WeightedNeighborhood {
  IndexSet indices;
  std::vector<Complex> weights;
};

WeightedNeighborhood block_row(const ClusteredGraph& cg, int mu, int nu, int i);
WeightedNeighborhood block_col(const ClusteredGraph& cg, int mu, int nu, int j);

}  // namespace gls
