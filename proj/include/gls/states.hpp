#pragma once

#include <utility>
#include <vector>

#include "gls/criteria.hpp"

namespace gls {

// Werner family on C^d (x) C^d: the mixture of identity and flip fixed by
// all U (x) U rotations, parametrized so x = 1/d gives the maximally mixed
// state.
struct WernerParams {
  int d = 2;
  double x = 0.0;  // in [0, 1]
};

DensityMatrix werner_density(const WernerParams& p);

// Canonical graph of the Werner state: signless extraction clustered (d, d).
ClusteredGraph werner_graph(const WernerParams& p);

// Structural verdict on werner_graph; true exactly at x = 1/d.
CriterionReport werner_discord_verdict(const WernerParams& p);

// Isotropic family on C^d (x) C^d: mixture of identity and the projector
// onto the maximally entangled vector, parametrized by its fidelity F with
// that vector.  F = 1/d^2 gives the maximally mixed state.
struct IsotropicParams {
  int d = 2;
  double fidelity = 0.0;  // in [0, 1]
};

DensityMatrix isotropic_density(const IsotropicParams& p);

// Closed-form fidelity window (lo, hi) inside which the isotropic state is
// treated as graph-representable: lo = 1/(d^2+d+1) and
// hi = min(1, 1/(d^2-d-1)).
std::pair<double, double> isotropic_graphical_range(int d);

// Canonical graph of the isotropic state, accepted only for fidelity inside
// isotropic_graphical_range (closed interval).
ClusteredGraph isotropic_graph(const IsotropicParams& p);

// Structural verdict on isotropic_graph; true exactly at F = 1/d^2.
CriterionReport isotropic_discord_verdict(const IsotropicParams& p);

// Construction plan for an X-shaped clustered graph on m clusters of size
// n: every non-loop edge joins anti-diagonal partners k and n+1-k, either
// across two clusters or inside at most one distinguished cluster.  Loops
// may sit anywhere.
struct XStateSpec {
  struct Edge {
    int k = 0;  // 1-based anti-diagonal position
    Complex w;
  };
  struct CrossBlock {
    int mu = 0, nu = 0;  // mu < nu; edge k runs (mu, k) -> (nu, n+1-k)
    std::vector<Edge> edges;
  };
  struct DiagBlock {
    int alpha = 0;  // edge k runs (alpha, k) -> (alpha, n+1-k), k <= n+1-k
    std::vector<Edge> edges;
  };
  struct Loop {
    int mu = 0, i = 0;
    double w = 0.0;
  };

  int clusters = 0;
  int cluster_size = 0;
  std::vector<CrossBlock> cross;
  std::vector<DiagBlock> diag;  // at most one cluster may carry inner edges
  std::vector<Loop> loops;
};

ClusteredGraph xstate_graph(const XStateSpec& spec);

// Does every non-loop edge of cg respect the anti-diagonal pairing, with
// inner edges confined to at most one cluster?  Loops are ignored.
bool is_xstate(const ClusteredGraph& cg);

// Graph-side zero-discord test for X-shaped graphs: all nonempty cross
// subgraphs must be equal as labeled weighted graphs, and every cluster's
// degree sequence must be symmetric under k <-> n+1-k (compared at tol).
// Throws if cg is not an X-shaped graph or its Laplacian of the given kind
// has zero trace.
bool xstate_zero_discord(const ClusteredGraph& cg, LaplacianKind kind,
                         double tol = 1e-9);

}  // namespace gls
