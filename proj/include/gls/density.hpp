#pragma once

#include "gls/graph.hpp"

namespace gls {

// Which Laplacian a graph state is built from.  The sign distinguishes
// D - A (combinatorial) from D + A (signless) and propagates into edge
// extraction and the degree-based commutation conditions.
enum class LaplacianKind { combinatorial, signless };

constexpr double kind_sign(LaplacianKind kind) {
  return kind == LaplacianKind::combinatorial ? -1.0 : 1.0;
}

const char* kind_name(LaplacianKind kind);  // "laplacian" / "signless"

// Unit-trace positive semidefinite Hermitian matrix.  Construction
// validates all three properties (Hermiticity and trace within 1e-10,
// eigenvalues >= -1e-10).
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(MatrixXcd m);

  const MatrixXcd& matrix() const { return m_; }
  int order() const { return static_cast<int>(m_.rows()); }

 private:
  explicit DensityMatrix(MatrixXcd m) : m_(std::move(m)) {}
  MatrixXcd m_;
};

// Normalized Laplacian state of g: (D ∓ A) / tr(D ∓ A).  Rejects graphs
// whose Laplacian has zero trace (e.g. only positive loops for the
// combinatorial kind).
DensityMatrix from_graph(const WeightedDigraph& g, LaplacianKind kind);

// Diagonal dominance test: rho_ii >= sum_{j != i} |rho_ij| for every row,
// with margins compared at tolerance tol.  Exactly the states reachable by
// from_graph are accepted.
bool is_graphical(const DensityMatrix& rho, double tol = 1e-12);

// Inverse of from_graph on graphical states: off-diagonal entries become
// edges with weight s * rho_ij (s = kind sign), and each row's diagonal
// surplus rho_ii - sum_{j != i} |rho_ij|, when above 1e-12, becomes a loop
// of modulus surplus/2 signed so that s * w(i,i) > 0.  Throws on
// non-graphical input.
WeightedDigraph extract_graph(const DensityMatrix& rho, LaplacianKind kind);

}  // namespace gls
