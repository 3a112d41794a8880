#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gls/oracle.hpp"
#include "support.hpp"

using namespace gls;
using Invalid = std::invalid_argument;

namespace {

DensityMatrix bell_state() {
  MatrixXcd m = MatrixXcd::Zero(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix product_state(const MatrixXcd& a, const MatrixXcd& b) {
  const int m = static_cast<int>(a.rows()), n = static_cast<int>(b.rows());
  MatrixXcd full(m * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      full.block(i * n, j * n, n, n) = a(i, j) * b;
  return DensityMatrix::from_matrix(std::move(full));
}

// Second, deliberately naive evaluation of the measured conditional
// information: expand every projected state entry by entry.
double conditional_by_hand(const DensityMatrix& rho, int m, int n,
                           const MeasurementBasis& basis) {
  const MatrixXcd& r = rho.matrix();
  const double sa =
      von_neumann_entropy(partial_trace(rho, m, n, TracedSide::second));
  double measured = 0.0;
  for (int k = 0; k < n; ++k) {
    const VectorXcd& v = basis.vector(k);
    MatrixXcd pk = v * v.adjoint();
    MatrixXcd big = MatrixXcd::Zero(m * n, m * n);
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < m; ++c)
        for (int b = 0; b < n; ++b)
          for (int d = 0; d < n; ++d) {
            Complex acc(0.0);
            for (int x = 0; x < n; ++x)
              for (int y = 0; y < n; ++y)
                acc += pk(b, x) * r(a * n + x, c * n + y) * pk(y, d);
            big(a * n + b, c * n + d) = acc;
          }
    const double p = big.trace().real();
    if (p < 1e-14) continue;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(big / p,
                                                Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (double lambda : es.eigenvalues())
      if (lambda > 0.0) s -= lambda * std::log2(lambda);
    measured += p * s;
  }
  return sa - measured;
}

}  // namespace

TEST_CASE("blocks_of_density slices and reassembles exactly") {
  testing::Rng rng(21);
  const DensityMatrix rho = testing::random_density(rng, 6);
  const BlockFamily f = blocks_of_density(rho, 2, 3);
  CHECK(assemble(f) == rho.matrix());
  CHECK_THROWS_AS(blocks_of_density(rho, 2, 2), Invalid);

  // Blocks of a product state are scalar multiples of the second factor.
  const MatrixXcd a = testing::random_density(rng, 2).matrix();
  const MatrixXcd b = testing::random_density(rng, 3).matrix();
  const BlockFamily pf = blocks_of_density(product_state(a, b), 2, 3);
  for (int mu = 1; mu <= 2; ++mu)
    for (int nu = 1; nu <= 2; ++nu)
      CHECK((pf.block(mu, nu) - a(mu - 1, nu - 1) * b).cwiseAbs().maxCoeff() <=
            1e-15);
}

TEST_CASE("commuting normal family: diagonal yes, lone shift no") {
  BlockFamily diag{2, 2, {}};
  MatrixXcd d1(2, 2), d2(2, 2);
  d1 << 0.3, 0.0, 0.0, 0.1;
  d2 << 0.2, 0.0, 0.0, 0.4;
  diag.blocks = {d1, d2, d2, d1};
  CHECK(is_commuting_normal_family(diag));

  MatrixXcd shift(2, 2);
  shift << 0.0, 0.2, 0.0, 0.0;  // not normal
  BlockFamily bad{2, 2, {d1, shift, shift.adjoint(), d1}};
  CHECK_FALSE(is_commuting_normal_family(bad));

  // Werner blocks at x = 0 contain exactly such a shift.
  CHECK_FALSE(is_commuting_normal_family(
      blocks_of_density(werner_density({2, 0.0}), 2, 2)));
}

TEST_CASE("partial traces reduce product and entangled states correctly") {
  testing::Rng rng(22);
  const MatrixXcd a = testing::random_density(rng, 2).matrix();
  const MatrixXcd b = testing::random_density(rng, 3).matrix();
  const DensityMatrix rho = product_state(a, b);
  CHECK((partial_trace(rho, 2, 3, TracedSide::second).matrix() - a)
            .cwiseAbs()
            .maxCoeff() <= 1e-13);
  CHECK((partial_trace(rho, 2, 3, TracedSide::first).matrix() - b)
            .cwiseAbs()
            .maxCoeff() <= 1e-13);

  const DensityMatrix bell = bell_state();
  CHECK((partial_trace(bell, 2, 2, TracedSide::second).matrix() -
         MatrixXcd::Identity(2, 2) * 0.5)
            .cwiseAbs()
            .maxCoeff() <= 1e-15);
}

TEST_CASE("entropy: pure 0, uniform log2(n), half-half 1") {
  CHECK(von_neumann_entropy(bell_state()) == doctest::Approx(0.0).epsilon(1e-9));
  const DensityMatrix mixed = DensityMatrix::from_matrix(
      MatrixXcd::Identity(4, 4) * 0.25);
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(2.0).epsilon(1e-12));
  MatrixXcd two = MatrixXcd::Zero(4, 4);
  two(0, 0) = two(1, 1) = 0.5;
  CHECK(von_neumann_entropy(DensityMatrix::from_matrix(two)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("entropy is concave on mixtures") {
  testing::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixXcd a = testing::random_density(rng, 4).matrix();
    const MatrixXcd b = testing::random_density(rng, 4).matrix();
    const double t = testing::uniform(rng, 0.0, 1.0);
    const double mixed = von_neumann_entropy(
        DensityMatrix::from_matrix(t * a + (1.0 - t) * b));
    const double parts =
        t * von_neumann_entropy(DensityMatrix::from_matrix(a)) +
        (1.0 - t) * von_neumann_entropy(DensityMatrix::from_matrix(b));
    CHECK(mixed >= parts - 1e-9);
  }
}

TEST_CASE("mutual information: product 0, Bell 2, maximally mixed 0") {
  testing::Rng rng(24);
  const DensityMatrix prod = product_state(
      testing::random_density(rng, 2).matrix(),
      testing::random_density(rng, 2).matrix());
  CHECK(mutual_information(prod, 2, 2) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(mutual_information(bell_state(), 2, 2) ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(mutual_information(werner_density({2, 0.5}), 2, 2) ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("measurement bases must be orthonormal") {
  VectorXcd v0(2), v1(2);
  v0 << 1.0, 0.0;
  v1 << 0.7, 0.7;  // neither unit nor orthogonal to v0
  CHECK_THROWS_AS(MeasurementBasis({v0, v1}), Invalid);
  v1 << 0.0, 1.0;
  CHECK_NOTHROW(MeasurementBasis({v0, v1}));
  CHECK_THROWS_AS(MeasurementBasis({v0}), Invalid);  // wrong count
}

TEST_CASE("conditional information matches a hand-rolled evaluation") {
  testing::Rng rng(25);
  VectorXcd v0(2), v1(2);
  v0 << 1.0, 0.0;
  v1 << 0.0, 1.0;
  const MeasurementBasis computational({v0, v1});
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = testing::random_density(rng, 4);
    const double fast = conditional_information(rho, 2, 2, computational);
    CHECK(fast == doctest::Approx(conditional_by_hand(rho, 2, 2,
                                                      computational))
                      .epsilon(1e-9));
  }
  // Product states carry no correlations at all.
  const DensityMatrix prod = product_state(
      testing::random_density(rng, 2).matrix(),
      testing::random_density(rng, 2).matrix());
  CHECK(conditional_information(prod, 2, 2, computational) ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("classical-quantum states have zero conditional gap in their "
          "pointer basis") {
  testing::Rng rng(26);
  VectorXcd v0(2), v1(2);
  v0 << 1.0, 0.0;
  v1 << 0.0, 1.0;
  const MeasurementBasis computational({v0, v1});
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix cq = testing::random_cq_state(rng);
    const double gap = mutual_information(cq, 2, 2) -
                       conditional_information(cq, 2, 2, computational);
    CHECK(std::abs(gap) <= 1e-9);
  }
}

TEST_CASE("discord estimate: zero for mixed and classical, positive for "
          "Werner extremes") {
  const DensityMatrix mixed =
      DensityMatrix::from_matrix(MatrixXcd::Identity(4, 4) * 0.25);
  CHECK(discord_estimate(mixed, 2, 2) < 1e-9);

  testing::Rng rng(27);
  CHECK(discord_estimate(testing::random_cq_state(rng), 2, 2) < 1e-6);

  CHECK(discord_estimate(werner_density({2, 0.0}), 2, 2) > 1e-3);
  CHECK(discord_estimate(werner_density({2, 1.0}), 2, 2) > 1e-3);
  CHECK(discord_estimate(werner_density({2, 0.5}), 2, 2) < 1e-6);

  // Estimates never dip meaningfully below zero.
  for (int trial = 0; trial < 5; ++trial)
    CHECK(discord_estimate(testing::random_density(rng, 4), 2, 2, 16) >=
          -1e-9);

  CHECK_THROWS_AS(discord_estimate(
                      testing::random_density(rng, 6), 2, 3),
                  Invalid);
  CHECK_THROWS_AS(discord_estimate(mixed, 2, 2, 1), Invalid);
}
