#pragma once

#include <optional>

#include <json.hpp>

#include "gls/criteria.hpp"
#include "gls/states.hpp"

namespace gls {

// Deterministic serialization: fields keep insertion order and map
// iteration is already sorted, so equal inputs produce identical bytes.
using Json = nlohmann::ordered_json;

// Graph files: {"vertices": N, "edges": [{"from", "to", "re", "im"}, ...]}
// with an optional "shape": [m, n].  A listed edge implies its conjugate
// reverse; listing both orientations is only accepted when the weights are
// exact conjugates.  Loops must carry "im": 0.
struct GraphFile {
  WeightedDigraph graph;
  std::optional<std::pair<int, int>> shape;
};

GraphFile graph_from_json(const Json& j);
Json graph_to_json(const WeightedDigraph& g,
                   std::optional<std::pair<int, int>> shape = std::nullopt);

// Density files: {"order": N, "entries": [[{"re", "im"}, ...], ...]}.
DensityMatrix density_from_json(const Json& j);
Json density_to_json(const DensityMatrix& rho);

Json report_to_json(const CriterionReport& report);

// X-state construction plans:
// {"m", "n",
//  "cross": [{"mu", "nu", "edges": [{"k", "re", "im"}, ...]}, ...],
//  "diag":  [{"alpha", "edges": [...]}, ...],
//  "loops": [{"mu", "i", "w"}, ...]}.
XStateSpec xstate_spec_from_json(const Json& j);

}  // namespace gls
