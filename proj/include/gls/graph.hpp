#pragma once

#include <complex>
#include <map>
#include <utility>

#include <Eigen/Dense>

namespace gls {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXd;

// Weighted digraph on vertices 0..N-1 whose weight function satisfies
// w(j,i) = conj(w(i,j)).  Only edges with nonzero weight are stored; both
// orientations of an edge are kept in the map so lookups stay symmetric.
// Loop weights are real.
class WeightedDigraph {
 public:
  using EdgeKey = std::pair<int, int>;
  using EdgeMap = std::map<EdgeKey, Complex>;

  explicit WeightedDigraph(int vertex_count);

  int vertex_count() const { return n_; }
  bool has_edge(int i, int j) const;
  // Weight of the (i, j) edge, 0 when absent.
  Complex weight(int i, int j) const;
  // All stored directed edges, keyed by (from, to) in lexicographic order.
  const EdgeMap& edges() const { return edges_; }

 private:
  friend WeightedDigraph add_edge(WeightedDigraph g, int i, int j, Complex w);

  int n_;
  EdgeMap edges_;
};

// Returns a copy of g with edge (i, j) set to w and (j, i) to conj(w).
// Re-adding an existing edge overwrites both orientations.  Rejects
// out-of-range endpoints, exactly-zero weights, and loops with a nonzero
// imaginary part.
WeightedDigraph add_edge(WeightedDigraph g, int i, int j, Complex w);

// Hermitian adjacency matrix A with A(i, j) = w(i, j).
MatrixXcd adjacency_matrix(const WeightedDigraph& g);

// d_i = sum_j |A(i, j)|; the loop modulus is counted exactly once.
double degree(const WeightedDigraph& g, int i);
VectorXd degrees(const WeightedDigraph& g);

// Combinatorial Laplacian D - A and signless Laplacian D + A, where
// D = diag(d_1, ..., d_N).
MatrixXcd laplacian(const WeightedDigraph& g);
MatrixXcd signless_laplacian(const WeightedDigraph& g);

// Same vertex count, same edge set, weights equal within tol componentwise.
bool graphs_equal(const WeightedDigraph& a, const WeightedDigraph& b,
                  double tol = 1e-12);

inline bool is_hermitian(const MatrixXcd& m, double tol = 1e-10) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace gls
