#include "gls/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gls/json_io.hpp"
#include "gls/oracle.hpp"

namespace gls::cli {
namespace {

Json read_json(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return Json::parse(in);
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  return Json::parse(file);
}

LaplacianKind parse_kind(const std::string& name) {
  if (name == "laplacian") return LaplacianKind::combinatorial;
  if (name == "signless") return LaplacianKind::signless;
  throw CLI::ValidationError("--kind", "must be laplacian or signless");
}

std::string format_weight(const Complex& w) {
  std::ostringstream s;
  s << w.real() << (w.imag() < 0 ? "-" : "+") << std::abs(w.imag()) << "i";
  return s.str();
}

struct Options {
  std::string input;
  std::string kind = "signless";
  std::vector<int> clusters;
  double tol = 1e-9;
  bool fail_fast = false;
  bool quiet = false;
  bool estimate_discord = false;
  int grid = 64;
};

ClusteredGraph clustered(const GraphFile& file, const Options& opt) {
  int m = 0, n = 0;
  if (opt.clusters.size() == 2) {
    m = opt.clusters[0];
    n = opt.clusters[1];
  } else if (file.shape) {
    m = file.shape->first;
    n = file.shape->second;
  } else {
    throw std::runtime_error(
        "no cluster shape: pass --clusters M N or add \"shape\" to the "
        "graph file");
  }
  return ClusteredGraph(file.graph, m, n);
}

void emit(const Json& j, bool quiet, const std::string& summary,
          std::ostream& out, std::ostream& err) {
  out << j.dump(2) << "\n";
  if (!quiet && !summary.empty()) err << summary << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"weighted-digraph Laplacian states and their discord checks"};
  app.require_subcommand(1);
  Options opt;

  std::string family;
  int gen_d = 2;
  double gen_x = 0.0, gen_f = 0.0;
  std::string spec_path;
  CLI::App* gen = app.add_subcommand(
      "gen", "generate the graph of a named state family");
  gen->add_option("family", family, "werner | isotropic | xstate")
      ->required()
      ->check(CLI::IsMember({"werner", "isotropic", "xstate"}));
  gen->add_option("--d", gen_d, "local dimension");
  gen->add_option("--x", gen_x, "Werner mixing parameter in [0, 1]");
  gen->add_option("--F", gen_f, "isotropic fidelity in [0, 1]");
  gen->add_option("--spec", spec_path, "X-state construction JSON");
  gen->add_flag("--quiet", opt.quiet, "suppress the stderr summary");

  const auto add_common = [&](CLI::App* cmd, bool with_input = true) {
    if (with_input)
      cmd->add_option("input", opt.input, "input file, - or empty for stdin");
    cmd->add_flag("--quiet", opt.quiet, "suppress the stderr summary");
    return cmd;
  };

  CLI::App* check = add_common(
      app.add_subcommand("check-state", "is a density matrix graphical?"));

  CLI::App* fromg = add_common(app.add_subcommand(
      "from-graph", "normalized Laplacian state of a graph"));
  fromg->add_option("--kind", opt.kind, "laplacian | signless")
      ->check(CLI::IsMember({"laplacian", "signless"}));

  CLI::App* structure = add_common(app.add_subcommand(
      "discord-structure", "graph-side zero-discord decision"));
  structure->add_option("--kind", opt.kind, "laplacian | signless")
      ->check(CLI::IsMember({"laplacian", "signless"}));
  structure->add_option("--clusters", opt.clusters, "clusters and cluster size")
      ->expected(2);
  structure->add_option("--tol", opt.tol, "comparison tolerance");
  structure->add_flag("--fail-fast", opt.fail_fast,
                      "stop at the first failing check");

  CLI::App* oracle = add_common(app.add_subcommand(
      "oracle", "matrix-side zero-discord verdict (graph or density input)"));
  oracle->add_option("--kind", opt.kind, "laplacian | signless");
  oracle->add_option("--clusters", opt.clusters, "clusters and cluster size")
      ->expected(2);
  oracle->add_option("--tol", opt.tol, "comparison tolerance");
  oracle->add_flag("--estimate-discord", opt.estimate_discord,
                   "grid-minimized discord estimate (qubit measured side)");
  oracle->add_option("--grid", opt.grid, "basis grid resolution per angle");

  CLI::App* dot = add_common(
      app.add_subcommand("export-dot", "Graphviz rendering of a graph"));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      GraphFile file{WeightedDigraph(1), std::nullopt};
      if (family == "werner") {
        ClusteredGraph cg = werner_graph({gen_d, gen_x});
        file = {cg.graph(), {{cg.clusters(), cg.cluster_size()}}};
      } else if (family == "isotropic") {
        ClusteredGraph cg = isotropic_graph({gen_d, gen_f});
        file = {cg.graph(), {{cg.clusters(), cg.cluster_size()}}};
      } else {
        ClusteredGraph cg = xstate_graph(
            xstate_spec_from_json(read_json(spec_path, std::cin)));
        file = {cg.graph(), {{cg.clusters(), cg.cluster_size()}}};
      }
      emit(graph_to_json(file.graph, file.shape), opt.quiet,
           family + " graph: " + std::to_string(file.graph.vertex_count()) +
               " vertices, " +
               std::to_string(file.graph.edges().size()) + " directed edges",
           out, err);
      return 0;
    }

    if (check->parsed()) {
      const DensityMatrix rho =
          density_from_json(read_json(opt.input, std::cin));
      const bool ok = is_graphical(rho);
      emit(Json{{"graphical", ok}}, opt.quiet,
           ok ? "graphical: some weighted digraph realizes this state"
              : "not graphical: diagonal dominance fails",
           out, err);
      return ok ? 0 : 1;
    }

    if (fromg->parsed()) {
      const GraphFile file = graph_from_json(read_json(opt.input, std::cin));
      const LaplacianKind kind = parse_kind(opt.kind);
      const DensityMatrix rho = from_graph(file.graph, kind);
      emit(density_to_json(rho), opt.quiet,
           std::string("order-") + std::to_string(rho.order()) + " state (" +
               kind_name(kind) + " kind)",
           out, err);
      return 0;
    }

    if (structure->parsed()) {
      const GraphFile file = graph_from_json(read_json(opt.input, std::cin));
      const LaplacianKind kind = parse_kind(opt.kind);
      const CriterionReport report = zero_discord_structural(
          clustered(file, opt), kind, opt.tol, opt.fail_fast);
      emit(report_to_json(report), opt.quiet,
           report.verdict
               ? "zero discord: all structural checks hold"
               : "nonzero discord: " +
                     std::to_string(report.failures.size()) +
                     " violation(s)",
           out, err);
      return report.verdict ? 0 : 1;
    }

    if (oracle->parsed()) {
      const Json j = read_json(opt.input, std::cin);
      const LaplacianKind kind = parse_kind(opt.kind);
      int m = 0, n = 0;
      DensityMatrix rho = DensityMatrix::from_matrix(MatrixXcd::Identity(1, 1));
      if (j.contains("vertices")) {
        const GraphFile file = graph_from_json(j);
        const ClusteredGraph cg = clustered(file, opt);
        m = cg.clusters();
        n = cg.cluster_size();
        rho = from_graph(cg.graph(), kind);
      } else {
        rho = density_from_json(j);
        if (opt.clusters.size() != 2)
          throw std::runtime_error(
              "density input needs --clusters M N for the block split");
        m = opt.clusters[0];
        n = opt.clusters[1];
      }
      const bool verdict = is_commuting_normal_family(
          blocks_of_density(rho, m, n), opt.tol);
      Json result{{"verdict", verdict}};
      std::string summary =
          verdict ? "commuting normal family: zero discord"
                  : "not a commuting normal family: nonzero discord";
      if (opt.estimate_discord) {
        const double estimate = discord_estimate(rho, m, n, opt.grid);
        result["discord_estimate"] = estimate;
        summary += "; discord estimate " + std::to_string(estimate);
      }
      emit(result, opt.quiet, summary, out, err);
      return verdict ? 0 : 1;
    }

    if (dot->parsed()) {
      const GraphFile file = graph_from_json(read_json(opt.input, std::cin));
      const int n = file.shape ? file.shape->second : 0;
      out << "graph G {\n";
      for (int v = 0; v < file.graph.vertex_count(); ++v) {
        out << "  v" << v << " [label=\"v_{";
        if (file.shape)
          out << v / n + 1 << "," << v % n + 1;
        else
          out << v + 1;
        out << "}\"];\n";
      }
      for (const auto& [key, w] : file.graph.edges())
        if (key.first <= key.second)
          out << "  v" << key.first << " -- v" << key.second << " [label=\""
              << format_weight(w) << "\"];\n";
      out << "}\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gls::cli
