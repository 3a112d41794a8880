#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "gls/density.hpp"
#include "gls/graph.hpp"
#include "gls/oracle.hpp"
#include "gls/states.hpp"

namespace gls::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Complex weight with modulus in [lo, hi] and uniform phase.
inline Complex random_weight(Rng& rng, double lo = 0.1, double hi = 2.0) {
  return std::polar(uniform(rng, lo, hi), uniform(rng, 0.0, 6.283185307179586));
}

// Real weight with modulus in [lo, hi] and random sign, for loops.
inline double random_loop(Rng& rng, double lo = 0.1, double hi = 2.0) {
  return (chance(rng, 0.5) ? 1.0 : -1.0) * uniform(rng, lo, hi);
}

// Random graph with the given edge density; always contains at least one
// non-loop edge so both Laplacians have positive trace.
inline WeightedDigraph random_graph(Rng& rng, int n, double density = 0.3,
                                    double loop_density = 0.3) {
  while (true) {
    WeightedDigraph g(n);
    bool has_edge = false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j)
        if (chance(rng, density)) {
          g = add_edge(std::move(g), i, j, random_weight(rng));
          has_edge = true;
        }
      if (chance(rng, loop_density))
        g = add_edge(std::move(g), i, i, random_loop(rng));
    }
    if (has_edge) return g;
  }
}

inline ClusteredGraph random_clustered(Rng& rng, int m, int n,
                                       double density = 0.3) {
  return ClusteredGraph(random_graph(rng, m * n, density), m, n);
}

// Random full-rank state: G G* normalized.
inline DensityMatrix random_density(Rng& rng, int n) {
  MatrixXcd g(n, n);
  std::normal_distribution<double> gauss;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  MatrixXcd m = g * g.adjoint();
  return DensityMatrix::from_matrix(m / m.trace().real());
}

// Classical-quantum two-qubit state with computational pointer basis:
// p sigma0 (x) |0><0| + (1-p) sigma1 (x) |1><1|.  Zero discord with the
// minimizing basis on the sampling grid.
inline DensityMatrix random_cq_state(Rng& rng) {
  const double p = uniform(rng, 0.15, 0.85);
  const MatrixXcd s0 = random_density(rng, 2).matrix();
  const MatrixXcd s1 = random_density(rng, 2).matrix();
  MatrixXcd m = MatrixXcd::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) {
      m(a * 2 + 0, c * 2 + 0) = p * s0(a, c);
      m(a * 2 + 1, c * 2 + 1) = (1.0 - p) * s1(a, c);
    }
  return DensityMatrix::from_matrix(std::move(m));
}

// --- X-shaped instances -----------------------------------------------
//
// The builders below stay inside the class of graphs for which the
// two-condition test provably matches the matrix-side family check:
// every nonempty cross block carries one shared matrix with conjugate
// anti-diagonal entries, loops are mirror symmetric, and an inner-edge
// cluster forces those shared entries to be real.

struct XInstanceOptions {
  int clusters = 0;      // 0 = random in 2..4
  int cluster_size = 0;  // 0 = random in 2..4
  int min_cross_pairs = 1;
  bool allow_inner = true;
};

inline XStateSpec symmetric_xspec(Rng& rng, const XInstanceOptions& opt = {}) {
  const int m = opt.clusters ? opt.clusters : pick(rng, 2, 4);
  const int n = opt.cluster_size ? opt.cluster_size : pick(rng, 2, 4);
  XStateSpec spec;
  spec.clusters = m;
  spec.cluster_size = n;

  const bool with_inner = opt.allow_inner && chance(rng, 0.5);
  const bool real_shared = with_inner || chance(rng, 0.3);

  // Shared anti-diagonal weights w(k) with w(n+1-k) = conj(w(k)).
  std::vector<Complex> w(n + 1);
  for (int k = 1; 2 * k <= n + 1; ++k) {
    if (2 * k == n + 1) {
      w[k] = (chance(rng, 0.5) ? 1.0 : -1.0) * uniform(rng, 0.3, 1.5);
    } else {
      w[k] = real_shared
                 ? Complex((chance(rng, 0.5) ? 1.0 : -1.0) *
                           uniform(rng, 0.3, 1.5))
                 : random_weight(rng, 0.3, 1.5);
      w[n + 1 - k] = std::conj(w[k]);
    }
  }

  std::vector<std::pair<int, int>> pairs;
  for (int mu = 1; mu <= m; ++mu)
    for (int nu = mu + 1; nu <= m; ++nu)
      if (chance(rng, 0.6)) pairs.emplace_back(mu, nu);
  while (static_cast<int>(pairs.size()) < opt.min_cross_pairs) {
    std::pair<int, int> p{pick(rng, 1, m - 1), 0};
    p.second = pick(rng, p.first + 1, m);
    if (std::find(pairs.begin(), pairs.end(), p) == pairs.end())
      pairs.push_back(p);
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [mu, nu] : pairs) {
    XStateSpec::CrossBlock block{mu, nu, {}};
    for (int k = 1; k <= n; ++k) block.edges.push_back({k, w[k]});
    spec.cross.push_back(std::move(block));
  }

  if (with_inner) {
    XStateSpec::DiagBlock block{pick(rng, 1, m), {}};
    for (int k = 1; 2 * k <= n + 1; ++k)
      if (chance(rng, 0.7))
        block.edges.push_back(
            {k, Complex((chance(rng, 0.5) ? 1.0 : -1.0) *
                        uniform(rng, 0.3, 1.5))});
    if (!block.edges.empty()) spec.diag.push_back(std::move(block));
  }

  // Mirror-symmetric loops.
  for (int mu = 1; mu <= m; ++mu)
    for (int k = 1; 2 * k <= n + 1; ++k)
      if (chance(rng, 0.5)) {
        const double l = random_loop(rng, 0.3, 1.5);
        spec.loops.push_back({mu, k, l});
        if (2 * k != n + 1) spec.loops.push_back({mu, n + 1 - k, l});
      }
  return spec;
}

// Multiplies the anti-diagonal pair (k0, n+1-k0) of the last cross block by
// i (and -i on the partner), which keeps that block normal but makes it
// disagree with the shared block of the remaining pairs.
inline void twist_last_cross_block(XStateSpec& spec, int k0 = 1) {
  auto& edges = spec.cross.back().edges;
  for (auto& e : edges) {
    if (e.k == k0) e.w *= Complex(0.0, 1.0);
    if (e.k == spec.cluster_size + 1 - k0) e.w *= Complex(0.0, -1.0);
  }
}

// Replaces one loop so that exactly one vertex degree loses its mirror
// partner for the given kind.  The new loop takes the sign the kind's
// Laplacian actually sees (positive for signless, negative for
// combinatorial) and a larger modulus, so the degree and the diagonal
// Laplacian entry both move; a loop of the invisible sign would change the
// degree without changing the state at all.
inline void break_loop_symmetry(Rng& rng, XStateSpec& spec, LaplacianKind kind,
                                int mu, int k0) {
  double before = 0.0;
  for (const auto& l : spec.loops)
    if (l.mu == mu && l.i == k0) before = l.w;
  const double sign = kind == LaplacianKind::signless ? 1.0 : -1.0;
  const double after = sign * (std::abs(before) + uniform(rng, 0.3, 1.0));
  spec.loops.erase(std::remove_if(spec.loops.begin(), spec.loops.end(),
                                  [&](const XStateSpec::Loop& l) {
                                    return l.mu == mu && l.i == k0;
                                  }),
                   spec.loops.end());
  spec.loops.push_back({mu, k0, after});
}

// Matrix-side verdict straight from the density matrix of the graph.
inline bool matrix_family_verdict(const ClusteredGraph& cg, LaplacianKind kind,
                                  double tol = 1e-9) {
  return is_commuting_normal_family(
      blocks_of_density(from_graph(cg.graph(), kind), cg.clusters(),
                        cg.cluster_size()),
      tol);
}

}  // namespace gls::testing
