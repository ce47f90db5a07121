#include "asdim/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace asdim {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string first_nonspace(const std::string& s) {
  for (char c : s)
    if (!std::isspace((unsigned char)c)) return std::string(1, c);
  return "";
}

}  // namespace

WeightedGraph parse_graph(const std::string& text) {
  if (first_nonspace(text) == "{") {
    json j = json::parse(text);
    WeightedGraph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
      const double w = e.size() > 2 ? e[2].get<double>() : 1.0;
      g.add_edge(e[0].get<int>(), e[1].get<int>(), w);
    }
    return g;
  }
  std::istringstream in(text);
  int n = -1, m = -1;
  if (!(in >> n >> m)) throw std::runtime_error("graph header must be 'n m'");
  if (n < 0 || m < 0) throw std::runtime_error("negative graph header");
  WeightedGraph g(n);
  for (int i = 0; i < m; ++i) {
    int u, v;
    double w;
    if (!(in >> u >> v >> w))
      throw std::runtime_error("expected edge line 'u v w' (" +
                               std::to_string(i) + " of " +
                               std::to_string(m) + ")");
    g.add_edge(u, v, w);
  }
  return g;
}

WeightedGraph read_graph(const std::string& path) {
  return parse_graph(slurp(path));
}

void write_graph_text(const WeightedGraph& g, const std::string& path) {
  std::ostringstream out;
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  out.precision(17);
  for (const auto& e : g.edges())
    out << e.u << " " << e.v << " " << e.w << "\n";
  spit(path, out.str());
}

void write_graph_json(const WeightedGraph& g, const std::string& path) {
  json j;
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v, e.w});
  spit(path, j.dump(2) + "\n");
}

std::string cover_to_json(const Cover& cover,
                          const VerificationReport* report) {
  json j;
  j["scheme"] = cover.cert.scheme_name;
  j["r"] = cover.cert.scale_r;
  j["bound"] = cover.cert.claimed_bound;
  j["coverage"] = cover.cert.claimed_coverage;
  if (cover.cert.claimed_multiplicity)
    j["multiplicity"] = *cover.cert.claimed_multiplicity;
  j["parameters"] = json::object();
  for (const auto& [k, v] : cover.cert.parameters) j["parameters"][k] = v;
  j["target"] = cover.target;
  j["sets"] = cover.sets;
  if (report) {
    json rep;
    rep["pass"] = report->pass;
    rep["observed_min_coverage"] = report->observed_min_coverage;
    rep["max_component_diameter"] = report->max_component_diameter;
    rep["per_set_max_component_diameter"] =
        report->per_set_max_component_diameter;
    if (report->observed_max_multiplicity)
      rep["observed_max_multiplicity"] = *report->observed_max_multiplicity;
    rep["failures"] = report->failures;
    j["report"] = rep;
  }
  return j.dump(2) + "\n";
}

void write_cover(const Cover& cover, const std::string& path,
                 const VerificationReport* report) {
  spit(path, cover_to_json(cover, report));
}

Cover read_cover(const std::string& path) {
  json j = json::parse(slurp(path));
  Cover cover;
  cover.cert.scheme_name = j.at("scheme").get<std::string>();
  cover.cert.scale_r = j.at("r").get<double>();
  cover.cert.claimed_bound = j.at("bound").get<double>();
  cover.cert.claimed_coverage = j.at("coverage").get<int>();
  if (j.contains("multiplicity"))
    cover.cert.claimed_multiplicity = j["multiplicity"].get<int>();
  if (j.contains("parameters"))
    for (const auto& [k, v] : j["parameters"].items())
      cover.cert.parameters[k] = v.get<double>();
  cover.target = j.at("target").get<VertexSet>();
  cover.sets = j.at("sets").get<std::vector<VertexSet>>();
  return cover;
}

void write_points(const Embedding& emb, const std::string& path) {
  std::ostringstream out;
  out.precision(17);
  out << emb.points.size() << " " << emb.d << " "
      << (emb.unit_ball ? "unit-ball" : "separation") << " " << emb.stretch
      << "\n";
  for (const auto& p : emb.points) {
    for (int a = 0; a < emb.d; ++a) out << (a ? " " : "") << p[a];
    out << "\n";
  }
  spit(path, out.str());
}

Embedding read_points(const std::string& path) {
  std::istringstream in(slurp(path));
  Embedding emb;
  int n;
  std::string mode;
  if (!(in >> n >> emb.d >> mode >> emb.stretch))
    throw std::runtime_error("points header must be 'n d mode stretch'");
  if (mode == "unit-ball")
    emb.unit_ball = true;
  else if (mode == "separation")
    emb.unit_ball = false;
  else
    throw std::runtime_error("unknown embedding mode '" + mode + "'");
  if (n < 0 || emb.d < 1) throw std::runtime_error("bad points header");
  emb.points.assign(n, std::vector<double>(emb.d));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < emb.d; ++a)
      if (!(in >> emb.points[i][a]))
        throw std::runtime_error("points file truncated at vertex " +
                                 std::to_string(i));
  return emb;
}

void write_pd(const PathDecomposition& pd, const std::string& path) {
  std::ostringstream out;
  for (const auto& bag : pd.bags) {
    for (size_t i = 0; i < bag.size(); ++i) out << (i ? " " : "") << bag[i];
    out << "\n";
  }
  spit(path, out.str());
}

PathDecomposition read_pd(const std::string& path) {
  std::istringstream in(slurp(path));
  PathDecomposition pd;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    VertexSet bag;
    int v;
    while (ls >> v) bag.push_back(v);
    if (!bag.empty() || !first_nonspace(line).empty()) {
      vs_normalize(bag);
      pd.bags.push_back(bag);
    }
  }
  if (pd.bags.empty()) throw std::runtime_error("empty path decomposition");
  return pd;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "scheme,r,n,m,sets,min_coverage,max_component_diameter,bound,"
         "multiplicity\n";
  for (const auto& row : rows) {
    out << row.scheme << "," << row.r << "," << row.n << "," << row.m << ","
        << row.sets << "," << row.min_coverage << ","
        << row.max_component_diameter << "," << row.bound << ",";
    if (row.multiplicity >= 0) out << row.multiplicity;
    out << "\n";
  }
  return out.str();
}

void write_sweep_csv(const std::vector<SweepRow>& rows,
                     const std::string& path) {
  spit(path, sweep_csv(rows));
}

}  // namespace asdim
