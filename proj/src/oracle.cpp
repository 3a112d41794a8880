#include "gls/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gls {
namespace {

constexpr double kEigTol = 1e-10;
constexpr double kOutcomeTol = 1e-14;

void check_shape(int order, int dim_first, int dim_second) {
  if (dim_first < 1 || dim_second < 1 || dim_first * dim_second != order)
    throw std::invalid_argument(
        "shape " + std::to_string(dim_first) + " x " +
        std::to_string(dim_second) + " does not factor an order-" +
        std::to_string(order) + " state");
}

// Entropy of a Hermitian PSD unit-trace matrix given as raw storage; used
// for post-measurement states that were formed by projection and need no
// re-validation.
double entropy_of(const MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double lambda : es.eigenvalues()) {
    if (lambda < -kEigTol)
      throw std::invalid_argument("entropy of a non-PSD matrix (eigenvalue " +
                                  std::to_string(lambda) + ")");
    if (lambda <= 0.0) continue;
    if (lambda > 1.0) lambda = 1.0;
    s -= lambda * std::log2(lambda);
  }
  return s;
}

MatrixXcd trace_out(const MatrixXcd& m, int dim_first, int dim_second,
                    TracedSide traced) {
  if (traced == TracedSide::second) {
    MatrixXcd r = MatrixXcd::Zero(dim_first, dim_first);
    for (int a = 0; a < dim_first; ++a)
      for (int c = 0; c < dim_first; ++c)
        for (int b = 0; b < dim_second; ++b)
          r(a, c) += m(a * dim_second + b, c * dim_second + b);
    return r;
  }
  MatrixXcd r = MatrixXcd::Zero(dim_second, dim_second);
  for (int b = 0; b < dim_second; ++b)
    for (int d = 0; d < dim_second; ++d)
      for (int a = 0; a < dim_first; ++a)
        r(b, d) += m(a * dim_second + b, a * dim_second + d);
  return r;
}

}  // namespace

BlockFamily blocks_of_density(const DensityMatrix& rho, int clusters,
                              int cluster_size) {
  check_shape(rho.order(), clusters, cluster_size);
  BlockFamily f{clusters, cluster_size, {}};
  f.blocks.reserve(clusters * clusters);
  for (int mu = 0; mu < clusters; ++mu)
    for (int nu = 0; nu < clusters; ++nu)
      f.blocks.push_back(rho.matrix().block(mu * cluster_size,
                                            nu * cluster_size, cluster_size,
                                            cluster_size));
  return f;
}

bool is_commuting_normal_family(const BlockFamily& f, double tol) {
  const auto differs = [tol](const MatrixXcd& x, const MatrixXcd& y) {
    return (x - y).cwiseAbs().maxCoeff() > tol;
  };
  for (const MatrixXcd& b : f.blocks)
    if (differs(b * b.adjoint(), b.adjoint() * b)) return false;
  for (std::size_t p = 0; p < f.blocks.size(); ++p)
    for (std::size_t q = p + 1; q < f.blocks.size(); ++q)
      if (differs(f.blocks[p] * f.blocks[q], f.blocks[q] * f.blocks[p]))
        return false;
  return true;
}

DensityMatrix partial_trace(const DensityMatrix& rho, int dim_first,
                            int dim_second, TracedSide traced) {
  check_shape(rho.order(), dim_first, dim_second);
  return DensityMatrix::from_matrix(
      trace_out(rho.matrix(), dim_first, dim_second, traced));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of(rho.matrix());
}

double mutual_information(const DensityMatrix& rho, int dim_first,
                          int dim_second) {
  check_shape(rho.order(), dim_first, dim_second);
  const double sa = entropy_of(
      trace_out(rho.matrix(), dim_first, dim_second, TracedSide::second));
  const double sb = entropy_of(
      trace_out(rho.matrix(), dim_first, dim_second, TracedSide::first));
  return sa + sb - von_neumann_entropy(rho);
}

MeasurementBasis::MeasurementBasis(std::vector<VectorXcd> vectors, double tol)
    : vectors_(std::move(vectors)) {
  const int n = static_cast<int>(vectors_.size());
  if (n < 1) throw std::invalid_argument("measurement basis is empty");
  for (const VectorXcd& v : vectors_)
    if (v.size() != n)
      throw std::invalid_argument(
          "basis needs " + std::to_string(n) + " vectors of length " +
          std::to_string(n) + ", got length " + std::to_string(v.size()));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const Complex g = vectors_[p].dot(vectors_[q]);  // conjugates the left
      const double target = p == q ? 1.0 : 0.0;
      if (std::abs(g - Complex(target)) > tol)
        throw std::invalid_argument("basis vectors " + std::to_string(p) +
                                    " and " + std::to_string(q) +
                                    " are not orthonormal");
    }
}

double conditional_information(const DensityMatrix& rho, int dim_first,
                               int dim_second, const MeasurementBasis& basis) {
  check_shape(rho.order(), dim_first, dim_second);
  if (basis.dimension() != dim_second)
    throw std::invalid_argument("basis dimension " +
                                std::to_string(basis.dimension()) +
                                " does not match measured side " +
                                std::to_string(dim_second));
  double conditional_entropy = 0.0;
  for (int k = 0; k < dim_second; ++k) {
    const VectorXcd& v = basis.vector(k);
    // Identity on the first factor tensored with |v><v| on the second.
    MatrixXcd projector =
        MatrixXcd::Zero(rho.order(), rho.order());
    for (int a = 0; a < dim_first; ++a)
      projector.block(a * dim_second, a * dim_second, dim_second,
                      dim_second) = v * v.adjoint();
    const MatrixXcd sandwiched = projector * rho.matrix() * projector;
    const double p = sandwiched.trace().real();
    if (p < kOutcomeTol) continue;
    conditional_entropy += p * entropy_of(sandwiched / p);
  }
  const double sa = entropy_of(
      trace_out(rho.matrix(), dim_first, dim_second, TracedSide::second));
  return sa - conditional_entropy;
}

double discord_estimate(const DensityMatrix& rho, int dim_first,
                        int dim_second, int grid_resolution) {
  check_shape(rho.order(), dim_first, dim_second);
  if (dim_second != 2)
    throw std::invalid_argument(
        "the basis grid only covers a qubit on the measured side, got "
        "dimension " +
        std::to_string(dim_second));
  if (grid_resolution < 2)
    throw std::invalid_argument("grid resolution must be at least 2");

  const double total = mutual_information(rho, dim_first, dim_second);
  double best = std::numeric_limits<double>::infinity();
  for (int t = 0; t < grid_resolution; ++t) {
    const double theta =
        (std::numbers::pi / 2.0) * t / (grid_resolution - 1);
    for (int u = 0; u < grid_resolution; ++u) {
      const double phi = 2.0 * std::numbers::pi * u / grid_resolution;
      const Complex phase = std::polar(1.0, phi);
      VectorXcd b0(2), b1(2);
      b0 << Complex(std::cos(theta)), phase * std::sin(theta);
      b1 << -std::conj(phase) * std::sin(theta), Complex(std::cos(theta));
      const MeasurementBasis basis({b0, b1});
      const double classical =
          conditional_information(rho, dim_first, dim_second, basis);
      best = std::min(best, total - classical);
    }
  }
  return best;
}

}  // namespace gls
