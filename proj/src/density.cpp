#include "gls/density.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gls {
namespace {

constexpr double kSupportTol = 1e-12;
constexpr double kStateTol = 1e-10;

}  // namespace

const char* kind_name(LaplacianKind kind) {
  return kind == LaplacianKind::combinatorial ? "laplacian" : "signless";
}

DensityMatrix DensityMatrix::from_matrix(MatrixXcd m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("density matrix must be square and nonempty");
  if (!is_hermitian(m, kStateTol))
    throw std::invalid_argument("density matrix must be Hermitian");
  if (std::abs(m.trace().real() - 1.0) > kStateTol ||
      std::abs(m.trace().imag()) > kStateTol)
    throw std::invalid_argument("density matrix must have unit trace");
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kStateTol)
    throw std::invalid_argument(
        "density matrix must be positive semidefinite, smallest eigenvalue " +
        std::to_string(es.eigenvalues().minCoeff()));
  return DensityMatrix(std::move(m));
}

DensityMatrix from_graph(const WeightedDigraph& g, LaplacianKind kind) {
  MatrixXcd m = kind == LaplacianKind::combinatorial ? laplacian(g)
                                                     : signless_laplacian(g);
  const double tr = m.trace().real();
  if (tr <= kSupportTol)
    throw std::invalid_argument(std::string("the ") + kind_name(kind) +
                                " of this graph has zero trace; it does not "
                                "normalize to a state");
  return DensityMatrix::from_matrix(m / tr);
}

bool is_graphical(const DensityMatrix& rho, double tol) {
  const MatrixXcd& m = rho.matrix();
  for (int i = 0; i < m.rows(); ++i) {
    double off = 0.0;
    for (int j = 0; j < m.cols(); ++j)
      if (j != i) off += std::abs(m(i, j));
    if (m(i, i).real() - off < -tol) return false;
  }
  return true;
}

WeightedDigraph extract_graph(const DensityMatrix& rho, LaplacianKind kind) {
  const MatrixXcd& m = rho.matrix();
  const double s = kind_sign(kind);
  const int n = rho.order();
  WeightedDigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(m(i, j)) > kSupportTol)
        g = add_edge(std::move(g), i, j, s * m(i, j));
  for (int i = 0; i < n; ++i) {
    double off = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) off += std::abs(m(i, j));
    const double surplus = m(i, i).real() - off;
    if (surplus < -kSupportTol)
      throw std::invalid_argument(
          "row " + std::to_string(i) + " is not diagonally dominant (margin " +
          std::to_string(surplus) + "); no graph realizes this state");
    if (surplus > kSupportTol)
      g = add_edge(std::move(g), i, i, s * surplus / 2.0);
  }
  return g;
}

}  // namespace gls
