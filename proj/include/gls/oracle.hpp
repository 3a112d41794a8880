#pragma once

#include <vector>

#include "gls/clustering.hpp"
#include "gls/density.hpp"

namespace gls {

// Cut a density matrix on an m*n-dimensional space into its m x m grid of
// n x n blocks.
BlockFamily blocks_of_density(const DensityMatrix& rho, int clusters,
                              int cluster_size);

// Brute-force zero-discord test: every block normal and every pair of
// blocks commuting, decided with dense products and max-modulus norm.
bool is_commuting_normal_family(const BlockFamily& f, double tol = 1e-9);

// Which tensor factor partial_trace removes.
enum class TracedSide { first, second };

// Reduced state of rho on C^m (x) C^n after tracing out the chosen side.
DensityMatrix partial_trace(const DensityMatrix& rho, int dim_first,
                            int dim_second, TracedSide traced);

// S(rho) = -sum lambda log2 lambda.  Eigenvalues in [-1e-10, 0] are
// clipped to zero; anything more negative is rejected.
double von_neumann_entropy(const DensityMatrix& rho);

// I(rho) = S(rho_a) + S(rho_b) - S(rho) on C^m (x) C^n.
double mutual_information(const DensityMatrix& rho, int dim_first,
                          int dim_second);

// Orthonormal basis of C^n, validated on construction.
class MeasurementBasis {
 public:
  explicit MeasurementBasis(std::vector<VectorXcd> vectors,
                            double tol = 1e-10);

  int dimension() const { return static_cast<int>(vectors_.size()); }
  const VectorXcd& vector(int k) const { return vectors_.at(k); }

 private:
  std::vector<VectorXcd> vectors_;
};

// J(rho | basis) = S(rho_a) - sum_k p_k S(rho_k), where rho_k is the state
// after projecting the second factor onto basis vector k and p_k its
// probability.  Outcomes with p_k < 1e-14 are skipped.
double conditional_information(const DensityMatrix& rho, int dim_first,
                               int dim_second, const MeasurementBasis& basis);

// Minimum of I(rho) - J(rho | basis) over a grid of product-form qubit
// bases on the measured (second) side; requires dim_second == 2.  The grid
// samples theta in [0, pi/2] inclusive at grid_resolution points and phi in
// [0, 2 pi) at grid_resolution points, with basis vectors
// (cos t, e^{i p} sin t) and (-e^{-i p} sin t, cos t).  An upper bound on
// the (right) quantum discord; zero-discord states evaluate to ~0 because
// the grid contains the computational basis.
double discord_estimate(const DensityMatrix& rho, int dim_first,
                        int dim_second, int grid_resolution = 64);

}  // namespace gls
