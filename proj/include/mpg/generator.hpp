#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mpg/plane_graph.hpp"
#include "mpg/ubcycle.hpp"

namespace mpg {

enum class GenMethod {
  /// Closure of K4 under the wheel operators e3wo/e4wo/e5wo and their
  /// contractions, over simple triangulations of order <= max_order + 2.
  ce,
  /// Vertex splitting (inverse edge contraction) from K4, with pruning by
  /// degree deficiency when a minimum degree is requested.
  split,
};
std::string to_string(GenMethod m);

struct GenerationOptions {
  int max_order = 4;
  std::optional<int> min_degree;
  GenMethod method = GenMethod::split;
  int jobs = 0;
  std::size_t max_graphs = 0;  // per order; 0 = unlimited
};

struct GenerationRun {
  int max_order = 4;
  std::optional<int> min_degree;
  GenMethod method = GenMethod::split;
  /// Emitted graphs per order in canonical labelling, sorted by canonical form.
  std::map<int, std::vector<PlaneGraph>> by_order;
  bool complete = true;

  std::size_t count(int order) const;
  std::vector<PlaneGraph> all() const;
};

GenerationRun generate(const GenerationOptions& opts);

/// Rebuilds the canonically labelled graph from a simple graph's canonical form.
PlaneGraph graph_from_canonical_form(const std::string& form);

/// SMPGs whose outer face is a 4-cycle, with at most `max_vertices` vertices:
/// every triangulation with a degree-4 vertex, that vertex removed, deduplicated.
/// With `interior_min_degree`, vertices off the outer cycle must reach it.
std::vector<PlaneGraph> quad_smpg_corpus(int max_vertices, int interior_min_degree = 0, int jobs = 0);

/// Removes a vertex of a triangulation; its link becomes the outer face.
PlaneGraph delete_vertex(const PlaneGraph& g, Vertex w);

struct ScanEntry {
  PlaneGraph graph;
  UbReport report;
};

struct ScanResult {
  std::vector<ScanEntry> ubcmpgs;                 // every UBCMPG found, in emission order
  std::map<int, std::map<UbcType, int>> by_order;  // type counts, including not_ubcmpg
  std::size_t scanned = 0;
};

/// Classifies every emitted graph; requires min_degree >= 4.
ScanResult ubcmpg_scan(const GenerationRun& run, int jobs = 0);

/// Writes numbered .rot files and stats.json into `dir`.
void write_run(const GenerationRun& run, const std::string& dir);

}  // namespace mpg
