// Batch front-end: generate instances, run cover schemes, verify claims.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "asdim/annulus.hpp"
#include "asdim/cover.hpp"
#include "asdim/generators.hpp"
#include "asdim/geometric.hpp"
#include "asdim/graph.hpp"
#include "asdim/io.hpp"
#include "asdim/oracle.hpp"
#include "asdim/pathwidth.hpp"
#include "asdim/pipelines.hpp"

namespace {

using namespace asdim;

std::string fmt_num(double x) {
  char buf[64];
  if (x == (double)(long long)x) {
    std::snprintf(buf, sizeof(buf), "%lld", (long long)x);
  } else {
    std::snprintf(buf, sizeof(buf), "%g", x);
  }
  return buf;
}

std::string stem_of(const std::string& path) {
  std::filesystem::path p(path);
  std::filesystem::path out = p.parent_path() / p.stem();
  return out.string();
}

std::string join_dims(const std::vector<int>& dims, char sep) {
  std::string out;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(dims[i]);
  }
  return out;
}

// Recipe tokens (grid4x4, cycle12, path30, complete5, torus3x3) or a graph
// file path.
WeightedGraph load_base(const std::string& token, std::string* name) {
  auto starts = [&](const char* p) { return token.rfind(p, 0) == 0; };
  auto dims_of = [&](size_t off) {
    std::vector<int> dims;
    std::string cur;
    for (size_t i = off; i <= token.size(); ++i) {
      if (i == token.size() || token[i] == 'x') {
        if (cur.empty()) throw CLI::ValidationError("--base", "bad recipe: " + token);
        dims.push_back(std::stoi(cur));
        cur.clear();
      } else if (std::isdigit((unsigned char)token[i])) {
        cur.push_back(token[i]);
      } else {
        throw CLI::ValidationError("--base", "bad recipe: " + token);
      }
    }
    return dims;
  };
  if (std::filesystem::exists(token)) {
    *name = stem_of(token);
    return read_graph(token);
  }
  *name = token;
  if (starts("grid")) return gen_grid(dims_of(4)).graph;
  if (starts("torus")) return gen_torus_grid(dims_of(5));
  if (starts("cycle")) return gen_cycle(std::stoi(token.substr(5)));
  if (starts("path")) return gen_path(std::stoi(token.substr(4)));
  if (starts("complete")) return gen_complete(std::stoi(token.substr(8)));
  throw CLI::ValidationError("--base", "not a recipe or file: " + token);
}

// Index-wise union of per-component annulus covers; bound is the worst
// component's. Components sit at infinite distance, so r-components of the
// merged sets are exactly the per-component ones.
Cover annulus_cover_all(const WeightedGraph& g, const DistanceOracle& oracle,
                        double r, double q, int p, int m) {
  auto comps = connected_components(g);
  Cover out;
  out.sets.assign(m, {});
  out.target = all_vertices(g);
  double bound = 0.0;
  for (const auto& comp : comps) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    DistanceOracle local(sub.graph);
    Cover piece = annulus_cover(sub.graph, local, 0, r, q, p, m);
    bound = std::max(bound, piece.cert.claimed_bound);
    for (int j = 0; j < m; ++j) {
      for (int v : piece.sets[j]) out.sets[j].push_back(sub.to_orig[v]);
    }
  }
  for (auto& s : out.sets) vs_normalize(s);
  out.cert.scale_r = r;
  out.cert.claimed_bound = bound;
  out.cert.claimed_coverage = m - 1;
  out.cert.scheme_name = "banana";
  out.cert.parameters = {{"q", q}, {"p", (double)p}, {"m", (double)m}};
  return out;
}

struct CoverArgs {
  std::string scheme;
  std::vector<double> rs;
  std::vector<std::string> inputs;
  std::string out_prefix;
  std::string sweep_path;
  int p = 0;
  int genus = -1;
  double q = 2.0;
  int m = 2;
  bool verify = false;
  bool strict = false;
};

int run_cover(const CoverArgs& a) {
  const std::string& scheme = a.scheme;
  size_t need = scheme == "pathwidth" || scheme == "geometric" ? 2 : 1;
  if (a.inputs.size() != need) {
    throw CLI::ValidationError(
        "inputs", scheme + " takes " + std::to_string(need) + " input file(s)");
  }

  WeightedGraph g;
  Embedding emb;
  PathDecomposition pd;
  if (scheme == "unit-ball") {
    emb = read_points(a.inputs[0]);
    if (!emb.unit_ball)
      throw CLI::ValidationError("inputs", "points file is not unit-ball mode");
    g = build_unit_ball_graph(emb.points);
  } else {
    g = read_graph(a.inputs[0]);
    if (scheme == "pathwidth") pd = read_pd(a.inputs[1]);
    if (scheme == "geometric") {
      emb = read_points(a.inputs[1]);
      if (emb.unit_ball)
        throw CLI::ValidationError("inputs",
                                   "points file is unit-ball mode; use --scheme unit-ball");
    }
  }

  DistanceOracle oracle(g);
  std::string prefix = a.out_prefix.empty() ? stem_of(a.inputs[0]) : a.out_prefix;
  bool do_verify = a.verify || a.strict || !a.sweep_path.empty();
  std::vector<SweepRow> rows;
  bool all_pass = true;

  for (double r : a.rs) {
    Cover cover;
    if (scheme == "banana") {
      cover = annulus_cover_all(g, oracle, r, a.q, a.p ? a.p : 2, a.m);
    } else if (scheme == "k3p") {
      if (a.p < 2) throw CLI::ValidationError("--p", "k3p needs --p >= 2");
      cover = k3p_cover(g, a.p, r);
    } else if (scheme == "planar") {
      cover = planar_cover(g, r);
    } else if (scheme == "genus") {
      if (a.genus < 0) throw CLI::ValidationError("--g", "genus needs --g >= 0");
      cover = genus_cover(g, a.genus, r);
    } else if (scheme == "pathwidth") {
      cover = pw_cover(g, oracle, pd, r);
    } else if (scheme == "chordal") {
      cover = chordal_scheme(g, r);
    } else if (scheme == "geometric") {
      cover = geometric_cover(g, emb, r);
    } else if (scheme == "unit-ball") {
      cover = unit_ball_cover(emb.points, r);
    } else {
      throw CLI::ValidationError("--scheme", "unknown scheme: " + scheme);
    }

    std::string path = prefix + "." + scheme + ".r" + fmt_num(r) + ".cover.json";
    VerificationReport report;
    if (do_verify) {
      report = verify_cover(cover, oracle);
      all_pass = all_pass && report.pass;
      write_cover(cover, path, &report);
      std::cout << path << (report.pass ? " PASS" : " FAIL") << "\n";
      SweepRow row;
      row.scheme = scheme;
      row.r = r;
      row.n = (int)g.vertex_count();
      row.m = (int)g.edge_count();
      row.sets = (int)cover.sets.size();
      row.min_coverage = report.observed_min_coverage;
      row.max_component_diameter = report.max_component_diameter;
      row.bound = cover.cert.claimed_bound;
      if (report.observed_max_multiplicity)
        row.multiplicity = *report.observed_max_multiplicity;
      else if (cover.cert.claimed_multiplicity)
        row.multiplicity = *cover.cert.claimed_multiplicity;
      rows.push_back(row);
    } else {
      write_cover(cover, path);
      std::cout << path << "\n";
    }
  }
  if (!a.sweep_path.empty()) write_sweep_csv(rows, a.sweep_path);
  if (a.strict && !all_pass) return 1;
  return 0;
}

struct GenArgs {
  std::string family;
  std::vector<int> dims;
  std::string out;
  std::string base;
  int n = 0;
  int k = 0;
  int p = 0;
  int extra = 0;
  int d = 2;
  uint64_t seed = 1;
  double box = 10.0;
  double stretch_c = 0.0;
  bool unit_ball = false;
  bool weighted = false;
  std::string graph_out;
};

int run_gen(const GenArgs& a) {
  auto need_dims = [&](size_t at_least) {
    if (a.dims.size() < at_least)
      throw CLI::ValidationError("dims", a.family + " needs positional sizes");
  };
  auto emit_graph = [&](const WeightedGraph& g, const std::string& name) {
    std::string path = (a.out.empty() ? name : a.out) + ".g";
    write_graph_text(g, path);
    std::cout << path << "\n";
  };

  if (a.family == "grid") {
    need_dims(1);
    emit_graph(gen_grid(a.dims).graph, "grid" + join_dims(a.dims, 'x'));
  } else if (a.family == "torus") {
    need_dims(1);
    emit_graph(gen_torus_grid(a.dims), "torus" + join_dims(a.dims, 'x'));
  } else if (a.family == "path") {
    need_dims(1);
    emit_graph(gen_path(a.dims[0]), "path" + std::to_string(a.dims[0]));
  } else if (a.family == "cycle") {
    need_dims(1);
    emit_graph(gen_cycle(a.dims[0]), "cycle" + std::to_string(a.dims[0]));
  } else if (a.family == "complete") {
    need_dims(1);
    emit_graph(gen_complete(a.dims[0]), "complete" + std::to_string(a.dims[0]));
  } else if (a.family == "tree") {
    if (a.n <= 0) throw CLI::ValidationError("--n", "tree needs --n");
    emit_graph(gen_tree(a.seed, a.n),
               "tree_n" + std::to_string(a.n) + "_s" + std::to_string(a.seed));
  } else if (a.family == "random") {
    if (a.n <= 0) throw CLI::ValidationError("--n", "random needs --n");
    emit_graph(random_connected_graph(a.seed, a.n, a.extra, !a.weighted),
               "random_n" + std::to_string(a.n) + "_e" + std::to_string(a.extra) +
                   "_s" + std::to_string(a.seed));
  } else if (a.family == "interval") {
    if (a.n <= 0 || a.k <= 0)
      throw CLI::ValidationError("--n", "interval needs --n and --k");
    IntervalInstance inst = gen_interval_graph(a.seed, a.n, a.k);
    std::string name = a.out.empty() ? "interval_n" + std::to_string(a.n) + "_k" +
                                           std::to_string(a.k) + "_s" +
                                           std::to_string(a.seed)
                                     : a.out;
    write_graph_text(inst.graph, name + ".g");
    write_pd(inst.pd, name + ".pd");
    std::cout << name << ".g\n" << name << ".pd\n";
  } else if (a.family == "stretch") {
    if (a.base.empty() || a.k <= 0 || a.p <= 0)
      throw CLI::ValidationError("--base", "stretch needs --base, --k, --p");
    std::string base_name;
    WeightedGraph g = load_base(a.base, &base_name);
    StretchParams params;
    params.k = a.k;
    params.p = a.p;
    emit_graph(stretch(g, params), "stretch_" + base_name + "_k" +
                                       std::to_string(a.k) + "_p" +
                                       std::to_string(a.p));
  } else if (a.family == "points") {
    if (a.n <= 0) throw CLI::ValidationError("--n", "points needs --n");
    if (a.unit_ball == (a.stretch_c > 0.0))
      throw CLI::ValidationError("--unit-ball",
                                 "pick exactly one of --unit-ball / --stretch C");
    std::string name;
    Embedding emb;
    if (a.unit_ball) {
      emb.d = a.d;
      emb.unit_ball = true;
      emb.points = gen_unit_ball_points(a.seed, a.n, a.d, a.box);
      name = a.out.empty() ? "points_ub_n" + std::to_string(a.n) + "_d" +
                                 std::to_string(a.d) + "_s" + std::to_string(a.seed)
                           : a.out;
      write_points(emb, name + ".pts");
      std::cout << name << ".pts\n";
      if (!a.graph_out.empty()) {
        write_graph_text(build_unit_ball_graph(emb.points), a.graph_out);
        std::cout << a.graph_out << "\n";
      }
    } else {
      SeparationInstance inst =
          gen_separation_instance(a.seed, a.n, a.d, a.stretch_c, a.box);
      name = a.out.empty() ? "points_sep_n" + std::to_string(a.n) + "_d" +
                                 std::to_string(a.d) + "_c" + fmt_num(a.stretch_c) +
                                 "_s" + std::to_string(a.seed)
                           : a.out;
      write_points(inst.emb, name + ".pts");
      write_graph_text(inst.graph, name + ".g");
      std::cout << name << ".pts\n" << name << ".g\n";
    }
  } else {
    throw CLI::ValidationError("family", "unknown family: " + a.family);
  }
  return 0;
}

int run_verify(const std::string& graph_path,
               const std::vector<std::string>& cover_paths,
               const std::string& csv_path) {
  WeightedGraph g = read_graph(graph_path);
  DistanceOracle oracle(g);
  bool all_pass = true;
  std::vector<SweepRow> rows;
  std::string out = "{\n  \"results\": [\n";
  for (size_t i = 0; i < cover_paths.size(); ++i) {
    Cover cover = read_cover(cover_paths[i]);
    VerificationReport report = verify_cover(cover, oracle);
    all_pass = all_pass && report.pass;
    std::string doc = cover_to_json(cover, &report);
    // Summarize per cover; the full document stays in the cover file shape.
    out += "    {\"cover\": \"" + cover_paths[i] + "\", \"pass\": " +
           (report.pass ? "true" : "false") + ", \"max_component_diameter\": " +
           fmt_num(report.max_component_diameter) + ", \"bound\": " +
           fmt_num(cover.cert.claimed_bound) + "}";
    out += i + 1 < cover_paths.size() ? ",\n" : "\n";
    SweepRow row;
    row.scheme = cover.cert.scheme_name;
    row.r = cover.cert.scale_r;
    row.n = (int)g.vertex_count();
    row.m = (int)g.edge_count();
    row.sets = (int)cover.sets.size();
    row.min_coverage = report.observed_min_coverage;
    row.max_component_diameter = report.max_component_diameter;
    row.bound = cover.cert.claimed_bound;
    if (report.observed_max_multiplicity)
      row.multiplicity = *report.observed_max_multiplicity;
    rows.push_back(row);
  }
  out += "  ]\n}\n";
  std::cout << out;
  if (!csv_path.empty()) write_sweep_csv(rows, csv_path);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covers and partitions of weighted graphs with certified bounds"};
  app.require_subcommand(1);

  GenArgs ga;
  CLI::App* gen = app.add_subcommand("gen", "generate instance files");
  gen->add_option("family", ga.family,
                  "grid|torus|path|cycle|complete|tree|random|interval|stretch|points")
      ->required();
  gen->add_option("dims", ga.dims, "positional sizes (grid/torus axes, n)");
  gen->add_option("-o,--out", ga.out, "output name prefix");
  gen->add_option("--n", ga.n, "vertex / point count");
  gen->add_option("--k", ga.k, "width (interval) or edge subdivisions (stretch)");
  gen->add_option("--p", ga.p, "tree-edge subdivisions (stretch)");
  gen->add_option("--extra", ga.extra, "extra edges beyond a tree (random)");
  gen->add_option("--d", ga.d, "point dimension");
  gen->add_option("--seed", ga.seed, "rng seed");
  gen->add_option("--box", ga.box, "point sampling box side");
  gen->add_option("--stretch", ga.stretch_c, "separation-mode adjacency radius");
  gen->add_flag("--unit-ball", ga.unit_ball, "unit-ball point mode");
  gen->add_flag("--weighted", ga.weighted, "random weights in (0, 1]");
  gen->add_option("--base", ga.base, "stretch base: recipe token or graph file");
  gen->add_option("--graph-out", ga.graph_out,
                  "also write the derived unit-ball graph here");

  CoverArgs ca;
  CLI::App* cover = app.add_subcommand("cover", "run a scheme over scales");
  cover->add_option("--scheme", ca.scheme,
                    "banana|k3p|planar|genus|pathwidth|geometric|unit-ball|chordal")
      ->required();
  cover->add_option("--r", ca.rs, "comma-separated scales")
      ->required()
      ->delimiter(',');
  cover->add_option("inputs", ca.inputs,
                    "graph file; pathwidth adds .pd, geometric adds .pts, "
                    "unit-ball takes .pts alone")
      ->required();
  cover->add_option("-o,--out", ca.out_prefix, "output name prefix");
  cover->add_option("--p", ca.p, "forbidden-minor size (k3p) or banana arity");
  cover->add_option("--g", ca.genus, "Euler genus");
  cover->add_option("--q", ca.q, "banana fatness");
  cover->add_option("--m", ca.m, "banana set count");
  cover->add_flag("--verify", ca.verify, "re-verify and embed the report");
  cover->add_flag("--strict", ca.strict, "verify; exit 1 on any failure");
  cover->add_option("--sweep", ca.sweep_path, "write one CSV row per r");

  std::string vg;
  std::vector<std::string> vcovers;
  std::string vcsv;
  CLI::App* ver = app.add_subcommand("verify", "re-verify cover files");
  ver->add_option("graph", vg, "graph file")->required();
  ver->add_option("covers", vcovers, "cover files")->required();
  ver->add_option("--csv", vcsv, "write one CSV row per cover");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(ga);
    if (cover->parsed()) return run_cover(ca);
    return run_verify(vg, vcovers, vcsv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
