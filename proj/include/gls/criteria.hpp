#pragma once

#include <array>
#include <vector>

#include "gls/clustering.hpp"

namespace gls {

enum class Condition { commutativity, normality, degree_a, degree_b };

const char* condition_name(Condition c);

// One failed check instance.  clusters holds (mu, nu, alpha, beta) with 0
// for slots a condition does not use; i, j are 1-based entry positions.
// Every witness satisfies |lhs - rhs| > tolerance for the check that
// produced it, with lhs and rhs the two sides of the tested identity.
struct Violation {
  Condition condition;
  std::array<int, 4> clusters;
  int i = 0, j = 0;
  Complex lhs, rhs;
};

struct CriterionReport {
  bool verdict = false;
  LaplacianKind kind = LaplacianKind::signless;
  std::vector<Violation> failures;
};

// Entry (i, j) of A(mu1, nu1) * A(mu2, nu2) evaluated as a sum of weight
// products over the intersection of the row-i out-neighbourhood of the
// first block and the column-j in-neighbourhood of the second; never forms
// a dense product.  All four commutation checks reduce to these sums.
MatrixXcd neighborhood_product(const ClusteredGraph& cg, int mu1, int nu1,
                               int mu2, int nu2);

// Do the cross blocks A(mu,nu) and A(alpha,beta) commute?  Equal cross
// subgraphs and empty blocks short-circuit to no violations.
std::vector<Violation> check_cross_commutativity(const ClusteredGraph& cg,
                                                 int mu, int nu, int alpha,
                                                 int beta, double tol = 1e-9);

// Does the within-cluster block A(mu,mu) commute with the cross block
// A(alpha,beta)?
std::vector<Violation> check_diag_cross_commutativity(const ClusteredGraph& cg,
                                                      int mu, int alpha,
                                                      int beta,
                                                      double tol = 1e-9);

// Do the within-cluster blocks A(mu,mu) and A(nu,nu) commute?
std::vector<Violation> check_diag_diag_commutativity(const ClusteredGraph& cg,
                                                     int mu, int nu,
                                                     double tol = 1e-9);

// Is A(mu,nu) normal, i.e. A A* = A* A as neighborhood sums?
std::vector<Violation> check_normality(const ClusteredGraph& cg, int mu,
                                       int nu, double tol = 1e-9);

// Degree-corrected commutation of two diagonal density blocks:
// [A(mu,mu), A(nu,nu)]_ij must match the degree-difference expression with
// the sign of the chosen kind.  Equivalent to d^2 [B(mu,mu), B(nu,nu)] = 0.
std::vector<Violation> check_degree_condition_a(const ClusteredGraph& cg,
                                                LaplacianKind kind, int mu,
                                                int nu, double tol = 1e-9);

// Degree-corrected commutation of a diagonal with a cross block:
// [A(mu,mu), A(alpha,beta)]_ij must match s * w(alpha i, beta j) *
// (d(mu,j) - d(mu,i)).  Equivalent to d^2 [B(mu,mu), B(alpha,beta)] = 0.
std::vector<Violation> check_degree_condition_b(const ClusteredGraph& cg,
                                                LaplacianKind kind, int mu,
                                                int alpha, int beta,
                                                double tol = 1e-9);

// Full graph-side decision: the Laplacian state of cg has zero quantum
// discord (measuring the cluster side) iff no check in the sweep reports a
// violation.  Sweeps normality, cross-block commutativity, then both degree
// conditions over all relevant cluster tuples; with fail_fast it stops
// after the first failing check.
CriterionReport zero_discord_structural(const ClusteredGraph& cg,
                                        LaplacianKind kind, double tol = 1e-9,
                                        bool fail_fast = false);

}  // namespace gls
