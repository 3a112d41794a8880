#include "gls/graph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gls {

WeightedDigraph::WeightedDigraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 1)
    throw std::invalid_argument("vertex count must be positive, got " +
                                std::to_string(vertex_count));
}

bool WeightedDigraph::has_edge(int i, int j) const {
  return edges_.count({i, j}) > 0;
}

Complex WeightedDigraph::weight(int i, int j) const {
  auto it = edges_.find({i, j});
  return it == edges_.end() ? Complex(0.0) : it->second;
}

WeightedDigraph add_edge(WeightedDigraph g, int i, int j, Complex w) {
  if (i < 0 || i >= g.n_ || j < 0 || j >= g.n_)
    throw std::invalid_argument("edge (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") out of range for " +
                                std::to_string(g.n_) + " vertices");
  if (w == Complex(0.0))
    throw std::invalid_argument("zero weight on edge (" + std::to_string(i) +
                                ", " + std::to_string(j) + ")");
  if (i == j && w.imag() != 0.0)
    throw std::invalid_argument("loop weight at vertex " + std::to_string(i) +
                                " must be real");
  g.edges_[{i, j}] = w;
  g.edges_[{j, i}] = std::conj(w);
  return g;
}

MatrixXcd adjacency_matrix(const WeightedDigraph& g) {
  MatrixXcd a = MatrixXcd::Zero(g.vertex_count(), g.vertex_count());
  for (const auto& [key, w] : g.edges()) a(key.first, key.second) = w;
  return a;
}

double degree(const WeightedDigraph& g, int i) {
  if (i < 0 || i >= g.vertex_count())
    throw std::invalid_argument("vertex " + std::to_string(i) +
                                " out of range");
  double d = 0.0;
  auto it = g.edges().lower_bound({i, 0});
  for (; it != g.edges().end() && it->first.first == i; ++it)
    d += std::abs(it->second);
  return d;
}

VectorXd degrees(const WeightedDigraph& g) {
  VectorXd d = VectorXd::Zero(g.vertex_count());
  for (const auto& [key, w] : g.edges()) d(key.first) += std::abs(w);
  return d;
}

MatrixXcd laplacian(const WeightedDigraph& g) {
  MatrixXcd l = -adjacency_matrix(g);
  l.diagonal() += degrees(g).cast<Complex>();
  return l;
}

MatrixXcd signless_laplacian(const WeightedDigraph& g) {
  MatrixXcd q = adjacency_matrix(g);
  q.diagonal() += degrees(g).cast<Complex>();
  return q;
}

bool graphs_equal(const WeightedDigraph& a, const WeightedDigraph& b,
                  double tol) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edges().size() != b.edges().size()) return false;
  for (const auto& [key, w] : a.edges()) {
    auto it = b.edges().find(key);
    if (it == b.edges().end()) return false;
    const Complex d = w - it->second;
    if (std::abs(d.real()) > tol || std::abs(d.imag()) > tol) return false;
  }
  return true;
}

}  // namespace gls
