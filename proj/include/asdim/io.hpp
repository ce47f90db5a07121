#pragma once

#include <string>
#include <vector>

#include "asdim/cover.hpp"
#include "asdim/geometric.hpp"
#include "asdim/graph.hpp"
#include "asdim/pathwidth.hpp"

namespace asdim {

// Graph files: text form is a "n m" header then one "u v w" line per edge;
// a structured form { "n": ..., "edges": [[u, v, w], ...] } is accepted too
// (sniffed by a leading '{'). Writers emit the text form unless asked.
WeightedGraph read_graph(const std::string& path);
WeightedGraph parse_graph(const std::string& text);
void write_graph_text(const WeightedGraph& g, const std::string& path);
void write_graph_json(const WeightedGraph& g, const std::string& path);

// Covers travel as a structured document: scheme, r, bound, coverage,
// multiplicity, sets, parameters, and optionally the verification report.
std::string cover_to_json(const Cover& cover,
                          const VerificationReport* report = nullptr);
void write_cover(const Cover& cover, const std::string& path,
                 const VerificationReport* report = nullptr);
Cover read_cover(const std::string& path);

// Point sets: header "n d <separation|unit-ball> <stretch>", then one line
// of d floats per vertex.
void write_points(const Embedding& emb, const std::string& path);
Embedding read_points(const std::string& path);

// Path decompositions: one line per bag, vertex ids space-separated.
void write_pd(const PathDecomposition& pd, const std::string& path);
PathDecomposition read_pd(const std::string& path);

// One sweep row per (scheme, r) run, the shape reports aggregate.
struct SweepRow {
  std::string scheme;
  double r = 0.0;
  int n = 0;
  int m = 0;
  int sets = 0;
  int min_coverage = 0;
  double max_component_diameter = 0.0;
  double bound = 0.0;
  int multiplicity = -1;  // -1 when unclaimed
};

std::string sweep_csv(const std::vector<SweepRow>& rows);
void write_sweep_csv(const std::vector<SweepRow>& rows,
                     const std::string& path);

}  // namespace asdim
