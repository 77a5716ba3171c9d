#include "lgg/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lgg/cnf.hpp"
#include "lgg/dilation.hpp"
#include "lgg/gabriel.hpp"
#include "lgg/generators.hpp"
#include "lgg/graph_io.hpp"
#include "lgg/oracles.hpp"
#include "lgg/solver.hpp"
#include "lgg/verifier.hpp"

namespace lgg {

namespace {

using json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json dilation_json(const DilationValue& v) {
  if (v.infinite) return json("infinite");
  json j;
  j["lo"] = v.value.lo.str();
  j["hi"] = v.value.hi.str();
  return j;
}

struct Commands {
  std::ostream& out;

  int verify(const std::string& path, bool oracle, bool serial) {
    GraphDocument doc = parse_graph(read_input(path));
    VerifyResult res = serial ? verify_lgg_serial(doc.graph) : verify_lgg(doc.graph);
    json j;
    j["command"] = "verify";
    j["valid"] = res.valid;
    if (res.witness) {
      j["witness"] = {{"shared", res.witness->shared}, {"first", res.witness->first}, {"second", res.witness->second}};
    }
    if (oracle) {
      bool ov = oracles::brute_force_lgg_valid(doc.graph);
      j["oracle"] = {{"valid", ov}, {"agrees", ov == res.valid}};
    }
    out << j.dump(2) << "\n";
    return res.valid ? 0 : 1;
  }

  int gabriel(const std::string& path, bool force_fast, bool force_reference) {
    GraphDocument doc = parse_graph(read_input(path));
    const PointSet& pts = doc.graph.points();
    bool fast = force_fast || (!force_reference && pts.size() > 1000);
    GeometricGraph g = fast ? gabriel_graph_fast(pts) : gabriel_graph(pts);
    std::map<std::string, std::string> meta = doc.metadata;
    meta["generator"] = "gabriel";
    out << emit_graph(g, meta);
    return 0;
  }

  int maximize(const std::string& path, bool greedy, double budget, bool use_weights, bool oracle,
               std::uint64_t seed) {
    GraphDocument doc = parse_graph(read_input(path));
    ConflictGraph cg = build_conflict_graph(doc.graph);
    if (!use_weights)
      cg = ConflictGraph(cg.node_count(), cg.arcs(), std::vector<Rational>(cg.node_count(), Rational(1)));
    std::optional<std::chrono::duration<double>> budget_opt;
    if (budget > 0) budget_opt = std::chrono::duration<double>(budget);
    SolveResult res = greedy ? max_glgg_greedy(cg, seed) : max_glgg_exact(cg, budget_opt);
    json j;
    j["command"] = "maximize";
    j["mode"] = greedy ? "greedy" : "exact";
    j["weight"] = res.total_weight.str();
    j["edges_chosen"] = res.chosen.size();
    j["optimal"] = res.optimal;
    j["nodes_explored"] = res.nodes_explored;
    j["chosen"] = res.chosen;
    if (oracle) {
      auto o = oracles::brute_force_mwis(cg);
      j["oracle"] = {{"weight", o.weight.str()}, {"agrees", o.weight == res.total_weight}};
    }
    out << j.dump(2) << "\n";
    return 0;
  }

  int dilation_cmd(const std::string& path, bool with_pair, VertexId u, VertexId v, bool matrix) {
    GraphDocument doc = parse_graph(read_input(path));
    json j;
    j["command"] = "dilation";
    if (with_pair) {
      DilationValue val = dilation_pair(doc.graph, u, v);
      j["pair"] = {u, v};
      j["dilation"] = dilation_json(val);
    } else {
      DilationReport rep = dilation(doc.graph, matrix);
      j["dilation"] = dilation_json(rep.global);
      j["witness_pair"] = {rep.witness_pair.first, rep.witness_pair.second};
      if (matrix) {
        json m = json::array();
        for (VertexId a = 0; a < rep.vertex_count; ++a) {
          json row = json::array();
          for (VertexId b = 0; b < rep.vertex_count; ++b)
            row.push_back(a == b ? json("self") : dilation_json(rep.pair(a, b)));
          m.push_back(std::move(row));
        }
        j["per_pair"] = std::move(m);
      }
    }
    out << j.dump(2) << "\n";
    return 0;
  }

  int min_dilation(const std::string& path, std::size_t cap, std::size_t max_points, bool oracle,
                   const std::string& decide) {
    GraphDocument doc = parse_graph(read_input(path));
    MinDilationOptions opts;
    opts.cap = cap;
    opts.max_points = max_points;
    MinDilationResult res = min_dilation_lgg(doc.graph.points(), opts);
    json j;
    j["command"] = "min-dilation";
    j["dilation"] = dilation_json(res.dilation);
    j["candidates"] = res.candidates;
    j["truncated"] = res.truncated;
    json edges = json::array();
    for (const Edge& e : res.best.edges()) edges.push_back(json::array({e.a, e.b}));
    j["edges"] = std::move(edges);
    if (oracle) {
      DilationValue o = oracles::brute_force_min_dilation(doc.graph.points());
      bool agrees = o.infinite == res.dilation.infinite;
      if (agrees && !o.infinite) {
        // Intervals must overlap within reporting resolution.
        agrees = !(o.value.certainly_less(res.dilation.value) || res.dilation.value.certainly_less(o.value));
      }
      j["oracle"] = {{"dilation", dilation_json(o)}, {"agrees", agrees}};
    }
    int code = 0;
    if (!decide.empty()) {
      Rational k = Rational::parse(decide);
      bool yes = !res.dilation.infinite && res.dilation.value.lo.cmp(k) <= 0;
      j["decision"] = {{"k", k.str()}, {"at_most_k", yes}};
      code = yes ? 0 : 1;
    }
    out << j.dump(2) << "\n";
    return code;
  }

  int plot(const std::string& path, const std::string& output, bool underlay) {
    GraphDocument doc = parse_graph(read_input(path));
    SvgStyle style;
    style.gabriel_underlay = underlay;
    std::string svg = emit_svg(doc.graph, style);
    std::ofstream f(output);
    if (!f) fail(ErrorKind::ParseError, "cannot write " + output);
    f << svg;
    json j;
    j["command"] = "plot";
    j["output"] = output;
    out << j.dump(2) << "\n";
    return 0;
  }
};

std::map<std::string, std::string> instance_metadata(const ReductionInstance& inst, const std::string& kind) {
  std::map<std::string, std::string> meta;
  meta["generator"] = kind;
  meta["variables"] = std::to_string(inst.num_vars);
  meta["clauses"] = std::to_string(inst.num_clauses);
  meta["e1_edges"] = std::to_string(inst.e1.size());
  meta["e2_edges"] = std::to_string(inst.e2.size());
  meta["target"] = std::to_string(inst.target);
  return meta;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locally Gabriel Graph toolkit"};
  app.require_subcommand(1);
  Commands cmd{out};

  std::string path;
  bool oracle = false, serial = false, fast = false, reference = false;

  auto* verify = app.add_subcommand("verify", "Check whether a graph document is a valid LGG");
  verify->add_option("graph", path, "graph document (default: stdin)");
  verify->add_flag("--oracle", oracle, "run the brute-force reference side by side");
  verify->add_flag("--serial", serial, "use the serial reference implementation");

  auto* gabriel = app.add_subcommand("gabriel", "Gabriel graph of a point document");
  gabriel->add_option("points", path, "point document (default: stdin)");
  gabriel->add_flag("--fast", fast, "force the grid kernel");
  gabriel->add_flag("--reference", reference, "force the pair-vs-all reference scan");

  bool greedy = false, exact = false, use_weights = false;
  double budget = 0;
  std::uint64_t seed = 0;
  auto* maximize = app.add_subcommand("maximize", "Edge-maximum (or max-weight) GLGG over a graph document");
  maximize->add_option("graph", path, "graph document (default: stdin)");
  maximize->add_flag("--exact", exact, "branch-and-bound exact solver (default)");
  maximize->add_flag("--greedy", greedy, "greedy heuristic with local search");
  maximize->add_option("--budget", budget, "time budget in seconds for the exact solver");
  maximize->add_flag("--weights", use_weights, "use the document's edge weights (default: unit weights)");
  maximize->add_flag("--oracle", oracle, "compare against exhaustive enumeration (small inputs)");
  maximize->add_option("--seed", seed, "tie-breaking seed for the greedy solver");

  bool matrix = false;
  std::vector<std::uint64_t> pair;
  auto* dilation = app.add_subcommand("dilation", "Stretch factor of a graph document");
  dilation->add_option("graph", path, "graph document (default: stdin)");
  dilation->add_option("--pair", pair, "only this vertex pair")->expected(2);
  dilation->add_flag("--matrix", matrix, "emit the full per-pair matrix");

  std::size_t cap = 100000, max_points = 12;
  std::string decide;
  auto* mindil = app.add_subcommand("min-dilation", "Minimum-dilation LGG over a point document");
  mindil->add_option("points", path, "point document (default: stdin)");
  mindil->add_option("--cap", cap, "maximal-LGG enumeration cap");
  mindil->add_option("--max-points", max_points, "point-count guard");
  mindil->add_flag("--oracle", oracle, "compare against the brute-force oracle (<= 7 points)");
  mindil->add_option("--decide", decide, "answer whether the minimum is at most this value");

  auto* gen = app.add_subcommand("gen", "Point-set and instance generators");
  gen->require_subcommand(1);
  std::size_t ladder_n = 16;
  std::string ladder_r;
  auto* ladder = gen->add_subcommand("ladder", "two-slanted-lines lower-bound point set");
  ladder->add_option("--n", ladder_n, "point count (even perfect square)")->required();
  ladder->add_option("--r", ladder_r, "line width (rational, at least 1/(2n)+3/2)");
  bool witness = false;
  auto* ladder_aug = gen->add_subcommand("ladder-aug", "augmented ladder with exterior detour points");
  ladder_aug->add_option("--n", ladder_n, "ladder point count")->required();
  ladder_aug->add_flag("--witness", witness, "emit the bounded-dilation witness LGG edges");
  std::string cnf_path;
  auto* sat3 = gen->add_subcommand("sat3", "3-SAT hardness reduction instance");
  sat3->add_option("--cnf", cnf_path, "DIMACS CNF input")->required();
  auto* max34 = gen->add_subcommand("max34", "MAX-(3,4)-SAT reduction instance");
  max34->add_option("--cnf", cnf_path, "DIMACS CNF input (every variable in exactly 4 clauses)")->required();
  std::size_t rows = 2, cols = 2;
  auto* grid = gen->add_subcommand("unit-grid", "integer grid with unit edges");
  grid->add_option("--rows", rows, "rows")->required();
  grid->add_option("--cols", cols, "columns")->required();
  std::size_t rand_n = 10;
  std::uint64_t rand_seed = 0;
  std::vector<std::string> box_strs;
  auto* random = gen->add_subcommand("random", "seeded distinct random points");
  random->add_option("--n", rand_n, "point count")->required();
  random->add_option("--seed", rand_seed, "seed");
  random->add_option("--box", box_strs, "bounding box x0 y0 x1 y1")->expected(4);

  std::string svg_out;
  bool underlay = false;
  auto* plot = app.add_subcommand("plot", "SVG rendering of a graph document");
  plot->add_option("graph", path, "graph document (default: stdin)");
  plot->add_option("-o,--output", svg_out, "output SVG path")->required();
  plot->add_flag("--gabriel-underlay", underlay, "solid Gabriel edges underneath, extra edges dotted");

  std::vector<const char*> argv;
  argv.push_back("lgg");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage;
    int rc = app.exit(e, usage, usage);
    (rc == 0 ? out : err) << usage.str();
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd.verify(path, oracle, serial);
    if (gabriel->parsed()) return cmd.gabriel(path, fast, reference);
    if (maximize->parsed()) {
      if (exact && greedy) fail(ErrorKind::BadParameter, "--exact and --greedy are mutually exclusive");
      return cmd.maximize(path, greedy, budget, use_weights, oracle, seed);
    }
    if (dilation->parsed())
      return cmd.dilation_cmd(path, !pair.empty(), pair.size() == 2 ? pair[0] : 0,
                              pair.size() == 2 ? pair[1] : 0, matrix);
    if (mindil->parsed()) return cmd.min_dilation(path, cap, max_points, oracle, decide);
    if (plot->parsed()) return cmd.plot(path, svg_out, underlay);
    if (gen->parsed()) {
      if (ladder->parsed()) {
        std::optional<Rational> r;
        if (!ladder_r.empty()) r = Rational::parse(ladder_r);
        PointSet pts = gen_ladder(ladder_n, r);
        out << emit_graph(GeometricGraph(pts, std::vector<Edge>{}),
                          {{"generator", "ladder"}, {"n", std::to_string(ladder_n)}});
        return 0;
      }
      if (ladder_aug->parsed()) {
        if (witness) {
          out << emit_graph(gen_ladder_augmented_lgg(ladder_n),
                            {{"generator", "ladder-aug-witness"}, {"n", std::to_string(ladder_n)}});
        } else {
          out << emit_graph(GeometricGraph(gen_ladder_augmented(ladder_n), std::vector<Edge>{}),
                            {{"generator", "ladder-aug"}, {"n", std::to_string(ladder_n)}});
        }
        return 0;
      }
      if (sat3->parsed()) {
        ReductionInstance inst = gen_sat3_instance(parse_dimacs(read_input(cnf_path)));
        out << emit_graph(inst.graph, instance_metadata(inst, "sat3"));
        return 0;
      }
      if (max34->parsed()) {
        ReductionInstance inst = gen_max34_instance(parse_dimacs(read_input(cnf_path), true));
        out << emit_graph(inst.graph, instance_metadata(inst, "max34"));
        return 0;
      }
      if (grid->parsed()) {
        out << emit_graph(gen_unit_distance_grid(rows, cols),
                          {{"generator", "unit-grid"},
                           {"rows", std::to_string(rows)},
                           {"cols", std::to_string(cols)}});
        return 0;
      }
      if (random->parsed()) {
        std::optional<Box> box;
        if (box_strs.size() == 4)
          box = Box{Rational::parse(box_strs[0]), Rational::parse(box_strs[1]), Rational::parse(box_strs[2]),
                    Rational::parse(box_strs[3])};
        PointSet pts = gen_random_points(rand_n, rand_seed, box);
        out << emit_graph(GeometricGraph(pts, std::vector<Edge>{}),
                          {{"generator", "random"},
                           {"n", std::to_string(rand_n)},
                           {"seed", std::to_string(rand_seed)}});
        return 0;
      }
    }
  } catch (const Error& e) {
    json j;
    j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    out << j.dump(2) << "\n";
    err << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace lgg
