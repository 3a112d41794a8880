#include "gls/criteria.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gls {
namespace {

void require_distinct(int a, int b, const char* what) {
  if (a == b)
    throw std::invalid_argument(std::string(what) +
                                " needs distinct clusters, got " +
                                std::to_string(a) + " twice");
}

bool block_empty(const ClusteredGraph& cg, int mu, int nu) {
  for (int i = 1; i <= cg.cluster_size(); ++i)
    if (!block_row(cg, mu, nu, i).indices.empty()) return false;
  return true;
}

Complex sparse_dot(const WeightedNeighborhood& row,
                   const WeightedNeighborhood& col) {
  Complex sum(0.0);
  std::size_t a = 0, b = 0;
  while (a < row.indices.size() && b < col.indices.size()) {
    if (row.indices[a] < col.indices[b]) {
      ++a;
    } else if (row.indices[a] > col.indices[b]) {
      ++b;
    } else {
      sum += row.weights[a] * col.weights[b];
      ++a;
      ++b;
    }
  }
  return sum;
}

// Violations where |lhs(i,j) - rhs(i,j)| > tol, tagged with the given
// condition and cluster tuple.
std::vector<Violation> collect(Condition c, std::array<int, 4> clusters,
                               const MatrixXcd& lhs, const MatrixXcd& rhs,
                               double tol) {
  std::vector<Violation> out;
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j)
      if (std::abs(lhs(i, j) - rhs(i, j)) > tol)
        out.push_back({c, clusters, i + 1, j + 1, lhs(i, j), rhs(i, j)});
  return out;
}

void append(std::vector<Violation>& all, std::vector<Violation> more) {
  all.insert(all.end(), more.begin(), more.end());
}

}  // namespace

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::commutativity: return "commutativity";
    case Condition::normality: return "normality";
    case Condition::degree_a: return "degree_a";
    case Condition::degree_b: return "degree_b";
  }
  return "unknown";
}

MatrixXcd neighborhood_product(const ClusteredGraph& cg, int mu1, int nu1,
                               int mu2, int nu2) {
  const int n = cg.cluster_size();
  std::vector<WeightedNeighborhood> rows, cols;
  rows.reserve(n);
  cols.reserve(n);
  for (int i = 1; i <= n; ++i) {
    rows.push_back(block_row(cg, mu1, nu1, i));
    cols.push_back(block_col(cg, mu2, nu2, i));
  }
  MatrixXcd prod(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prod(i, j) = sparse_dot(rows[i], cols[j]);
  return prod;
}

std::vector<Violation> check_cross_commutativity(const ClusteredGraph& cg,
                                                 int mu, int nu, int alpha,
                                                 int beta, double tol) {
  require_distinct(mu, nu, "cross block");
  require_distinct(alpha, beta, "cross block");
  if (mu == alpha && nu == beta) return {};
  if (block_empty(cg, mu, nu) || block_empty(cg, alpha, beta)) return {};
  if (graphs_equal(cross_subgraph(cg, mu, nu), cross_subgraph(cg, alpha, beta)))
    return {};
  const MatrixXcd lhs = neighborhood_product(cg, mu, nu, alpha, beta);
  const MatrixXcd rhs = neighborhood_product(cg, alpha, beta, mu, nu);
  return collect(Condition::commutativity, {mu, nu, alpha, beta}, lhs, rhs,
                 tol);
}

std::vector<Violation> check_diag_cross_commutativity(const ClusteredGraph& cg,
                                                      int mu, int alpha,
                                                      int beta, double tol) {
  require_distinct(alpha, beta, "cross block");
  const MatrixXcd lhs = neighborhood_product(cg, mu, mu, alpha, beta);
  const MatrixXcd rhs = neighborhood_product(cg, alpha, beta, mu, mu);
  return collect(Condition::commutativity, {mu, 0, alpha, beta}, lhs, rhs,
                 tol);
}

std::vector<Violation> check_diag_diag_commutativity(const ClusteredGraph& cg,
                                                     int mu, int nu,
                                                     double tol) {
  require_distinct(mu, nu, "diagonal pair");
  const MatrixXcd lhs = neighborhood_product(cg, mu, mu, nu, nu);
  const MatrixXcd rhs = neighborhood_product(cg, nu, nu, mu, mu);
  return collect(Condition::commutativity, {mu, nu, 0, 0}, lhs, rhs, tol);
}

std::vector<Violation> check_normality(const ClusteredGraph& cg, int mu,
                                       int nu, double tol) {
  require_distinct(mu, nu, "cross block");
  const MatrixXcd lhs = neighborhood_product(cg, mu, nu, nu, mu);
  const MatrixXcd rhs = neighborhood_product(cg, nu, mu, mu, nu);
  return collect(Condition::normality, {mu, nu, 0, 0}, lhs, rhs, tol);
}

std::vector<Violation> check_degree_condition_a(const ClusteredGraph& cg,
                                                LaplacianKind kind, int mu,
                                                int nu, double tol) {
  require_distinct(mu, nu, "diagonal pair");
  const double s = kind_sign(kind);
  const int n = cg.cluster_size();
  std::vector<double> dmu(n), dnu(n);
  for (int i = 1; i <= n; ++i) {
    dmu[i - 1] = cg.vertex_degree(mu, i);
    dnu[i - 1] = cg.vertex_degree(nu, i);
  }
  const MatrixXcd comm = neighborhood_product(cg, mu, mu, nu, nu) -
                         neighborhood_product(cg, nu, nu, mu, mu);
  MatrixXcd expected(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      expected(i - 1, j - 1) =
          s * (cg.weight(nu, i, nu, j) * (dmu[j - 1] - dmu[i - 1]) +
               cg.weight(mu, i, mu, j) * (dnu[i - 1] - dnu[j - 1]));
  return collect(Condition::degree_a, {mu, nu, 0, 0}, comm, expected, tol);
}

std::vector<Violation> check_degree_condition_b(const ClusteredGraph& cg,
                                                LaplacianKind kind, int mu,
                                                int alpha, int beta,
                                                double tol) {
  require_distinct(alpha, beta, "cross block");
  const double s = kind_sign(kind);
  const int n = cg.cluster_size();
  std::vector<double> dmu(n);
  for (int i = 1; i <= n; ++i) dmu[i - 1] = cg.vertex_degree(mu, i);
  const MatrixXcd comm = neighborhood_product(cg, mu, mu, alpha, beta) -
                         neighborhood_product(cg, alpha, beta, mu, mu);
  MatrixXcd expected(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      expected(i - 1, j - 1) =
          s * cg.weight(alpha, i, beta, j) * (dmu[j - 1] - dmu[i - 1]);
  return collect(Condition::degree_b, {mu, 0, alpha, beta}, comm, expected,
                 tol);
}

CriterionReport zero_discord_structural(const ClusteredGraph& cg,
                                        LaplacianKind kind, double tol,
                                        bool fail_fast) {
  // Materializing the blocks validates the normalization trace up front.
  density_blocks(cg, kind);

  CriterionReport report;
  report.kind = kind;
  const int m = cg.clusters();

  const auto done = [&] { return fail_fast && !report.failures.empty(); };

  for (int mu = 1; mu <= m && !done(); ++mu)
    for (int nu = mu + 1; nu <= m && !done(); ++nu)
      append(report.failures, check_normality(cg, mu, nu, tol));

  // Ordered cross blocks in lexicographic order; each unordered pair once,
  // skipping a block against its own adjoint (that is normality again).
  std::vector<std::pair<int, int>> cross;
  for (int mu = 1; mu <= m; ++mu)
    for (int nu = 1; nu <= m; ++nu)
      if (mu != nu) cross.emplace_back(mu, nu);
  for (std::size_t p = 0; p < cross.size() && !done(); ++p)
    for (std::size_t q = p + 1; q < cross.size() && !done(); ++q) {
      if (cross[q].first == cross[p].second &&
          cross[q].second == cross[p].first)
        continue;
      append(report.failures,
             check_cross_commutativity(cg, cross[p].first, cross[p].second,
                                       cross[q].first, cross[q].second, tol));
    }

  for (int mu = 1; mu <= m && !done(); ++mu)
    for (int nu = mu + 1; nu <= m && !done(); ++nu)
      append(report.failures, check_degree_condition_a(cg, kind, mu, nu, tol));

  // [H, A] = 0 iff [H, A*] = 0 for Hermitian H, so alpha < beta suffices.
  for (int mu = 1; mu <= m && !done(); ++mu)
    for (int alpha = 1; alpha <= m && !done(); ++alpha)
      for (int beta = alpha + 1; beta <= m && !done(); ++beta)
        append(report.failures,
               check_degree_condition_b(cg, kind, mu, alpha, beta, tol));

  report.verdict = report.failures.empty();
  return report;
}

}  // namespace gls
