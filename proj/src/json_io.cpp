#include "gls/json_io.hpp"

#include <stdexcept>
#include <string>

namespace gls {
namespace {

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument(std::string("missing integer field \"") + key +
                                "\"");
  return j[key].get<int>();
}

double num_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw std::invalid_argument(std::string("missing numeric field \"") + key +
                                "\"");
  return j[key].get<double>();
}

Json complex_to_json(const Complex& z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

}  // namespace

GraphFile graph_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph JSON must be an object");
  const int n = int_field(j, "vertices");
  WeightedDigraph g(n);
  if (j.contains("edges")) {
    if (!j["edges"].is_array())
      throw std::invalid_argument("\"edges\" must be an array");
    std::map<std::pair<int, int>, Complex> listed;
    for (const Json& e : j["edges"]) {
      const int from = int_field(e, "from");
      const int to = int_field(e, "to");
      const Complex w(num_field(e, "re"), num_field(e, "im"));
      if (from == to && w.imag() != 0.0)
        throw std::invalid_argument("loop at vertex " + std::to_string(from) +
                                    " must have \"im\": 0");
      if (listed.count({from, to}))
        throw std::invalid_argument("edge (" + std::to_string(from) + ", " +
                                    std::to_string(to) + ") listed twice");
      auto rev = listed.find({to, from});
      if (rev != listed.end() && from != to) {
        if (rev->second != std::conj(w))
          throw std::invalid_argument(
              "edge (" + std::to_string(from) + ", " + std::to_string(to) +
              ") conflicts with its reverse; weights must be exact "
              "conjugates");
        listed.emplace(std::make_pair(from, to), w);
        continue;  // already added through the reverse listing
      }
      listed.emplace(std::make_pair(from, to), w);
      g = add_edge(std::move(g), from, to, w);
    }
  }
  GraphFile file{std::move(g), std::nullopt};
  if (j.contains("shape")) {
    if (!j["shape"].is_array() || j["shape"].size() != 2 ||
        !j["shape"][0].is_number_integer() || !j["shape"][1].is_number_integer())
      throw std::invalid_argument("\"shape\" must be [clusters, cluster_size]");
    file.shape = {j["shape"][0].get<int>(), j["shape"][1].get<int>()};
  }
  return file;
}

Json graph_to_json(const WeightedDigraph& g,
                   std::optional<std::pair<int, int>> shape) {
  Json edges = Json::array();
  for (const auto& [key, w] : g.edges()) {
    // One orientation per edge; the reverse is implied by conjugation.
    if (key.first > key.second) continue;
    edges.push_back(Json{{"from", key.first},
                         {"to", key.second},
                         {"re", w.real()},
                         {"im", w.imag()}});
  }
  Json j{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
  if (shape) j["shape"] = Json::array({shape->first, shape->second});
  return j;
}

DensityMatrix density_from_json(const Json& j) {
  if (!j.is_object())
    throw std::invalid_argument("density JSON must be an object");
  const int n = int_field(j, "order");
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (!j.contains("entries") || !j["entries"].is_array() ||
      static_cast<int>(j["entries"].size()) != n)
    throw std::invalid_argument("\"entries\" must be an array of " +
                                std::to_string(n) + " rows");
  MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r) {
    const Json& row = j["entries"][r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("row " + std::to_string(r) + " must have " +
                                  std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c)
      m(r, c) = Complex(num_field(row[c], "re"), num_field(row[c], "im"));
  }
  return DensityMatrix::from_matrix(std::move(m));
}

Json density_to_json(const DensityMatrix& rho) {
  Json rows = Json::array();
  for (int r = 0; r < rho.order(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < rho.order(); ++c)
      row.push_back(complex_to_json(rho.matrix()(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"order", rho.order()}, {"entries", std::move(rows)}};
}

Json report_to_json(const CriterionReport& report) {
  Json failures = Json::array();
  for (const Violation& v : report.failures)
    failures.push_back(Json{{"condition", condition_name(v.condition)},
                            {"clusters", Json::array({v.clusters[0],
                                                      v.clusters[1],
                                                      v.clusters[2],
                                                      v.clusters[3]})},
                            {"i", v.i},
                            {"j", v.j},
                            {"lhs", complex_to_json(v.lhs)},
                            {"rhs", complex_to_json(v.rhs)}});
  return Json{{"verdict", report.verdict},
              {"kind", kind_name(report.kind)},
              {"failures", std::move(failures)}};
}

XStateSpec xstate_spec_from_json(const Json& j) {
  if (!j.is_object())
    throw std::invalid_argument("X-state JSON must be an object");
  XStateSpec spec;
  spec.clusters = int_field(j, "m");
  spec.cluster_size = int_field(j, "n");
  const auto edges_of = [](const Json& block) {
    std::vector<XStateSpec::Edge> edges;
    if (!block.contains("edges") || !block["edges"].is_array())
      throw std::invalid_argument("block needs an \"edges\" array");
    for (const Json& e : block["edges"])
      edges.push_back({int_field(e, "k"),
                       Complex(num_field(e, "re"), num_field(e, "im"))});
    return edges;
  };
  if (j.contains("cross"))
    for (const Json& b : j["cross"])
      spec.cross.push_back(
          {int_field(b, "mu"), int_field(b, "nu"), edges_of(b)});
  if (j.contains("diag"))
    for (const Json& b : j["diag"])
      spec.diag.push_back({int_field(b, "alpha"), edges_of(b)});
  if (j.contains("loops"))
    for (const Json& l : j["loops"])
      spec.loops.push_back(
          {int_field(l, "mu"), int_field(l, "i"), num_field(l, "w")});
  return spec;
}

}  // namespace gls
