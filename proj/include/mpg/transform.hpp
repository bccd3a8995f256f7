#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "mpg/ce_ops.hpp"
#include "mpg/coloring.hpp"
#include "mpg/plane_graph.hpp"

namespace mpg {

/// A degree-5 vertex with a neighbour of degree 5 (kind 55) or 6 (kind 56).
struct WernickeConfig {
  int kind = 0;
  Vertex center = kNone;
  Vertex neighbor = kNone;
};

/// Least center, then least neighbour. Requires minimum degree 5; a miss
/// raises TheoremAlarm.
WernickeConfig find_wernicke_config(const PlaneGraph& g);

/// Degree patterns among {555, 556, 557, 566} realised by some face.
std::set<int> borodin_config_scan(const PlaneGraph& g);

/// Clockwise neighbours of v, read as its link cycle.
std::vector<Vertex> link_cycle(const PlaneGraph& g, Vertex v);

/// Middle vertex of the bichromatic 2-path on the link of v, or nullopt if the
/// link does not use all four colors. v itself is ignored.
std::optional<Vertex> bichromatic_center(const PlaneGraph& g, Vertex v, const Coloring& f);

struct RotationStep {
  Coloring before, after;
  ColorPair pair;
  Vertex at = kNone;           // the swap starts here
  bool three_colored = false;  // the link lost a color, v can be colored directly
};

/// One K-change on the link of v (v uncolored, link 4-colored). Either frees a
/// color for v, or moves the bichromatic 2-path center two places back along
/// the link.
RotationStep rotation_step(const PlaneGraph& g, Vertex v, const Coloring& f);

/// Repeats rotation_step until `end` is an end of the bichromatic 2-path or the
/// link becomes 3-colored.
std::vector<RotationStep> rotate_to_bichromatic_path(const PlaneGraph& g, Vertex v, const Coloring& f, Vertex end);

struct ModuleExtraction {
  OperatorApplication extension;        // e4wo on v3 v4 v1
  PlaneGraph gstar;
  Coloring f2;                          // on gstar, C4 colored with two colors
  SmpgView smpg;                        // gstar without the two new vertices, C4 outer
  std::array<Vertex, 4> c4{};           // v1 v2 v3 v4
  Vertex copy = kNone, center = kNone;  // split copy of v4 and the wheel center
};

/// `f` colors g - v2 with the bichromatic 2-path v3 v4 v1 on the link, v3 = end.
ModuleExtraction extract_module(const PlaneGraph& g, Vertex v2, const Coloring& f, Vertex end);

enum class DecycleRule { swap, kempe_class, constructive, exhaustive };
std::string to_string(DecycleRule r);

struct DecycleResult {
  Coloring f;
  DecycleRule rule = DecycleRule::swap;
};

/// A coloring of the module with f(v2) != f(v4), starting from a coloring that
/// agrees on them.
DecycleResult decycle(const SmpgView& s, const Coloring& f, Vertex v2, Vertex v4);

/// Colors the split copy like v4 and the center with a free color, then
/// contracts back to g. Returns the coloring of g.
Coloring restore_and_color(const ModuleExtraction& m, const Coloring& fstar, const PlaneGraph& g,
                           OperatorApplication* contraction = nullptr);

struct TraceStep {
  std::string kind;  // config_found | kchange | e4wo | module_extracted | decycle | extend | c4wo
  nlohmann::json payload;
};

struct TransformTrace {
  PlaneGraph input;
  std::vector<TraceStep> steps;
  Coloring output;

  nlohmann::json to_json() const;
  static TransformTrace from_json(const nlohmann::json& j);
};

/// The full pipeline on an MPG of minimum degree 5.
TransformTrace transform(const PlaneGraph& g);

/// Re-executes the steps on the input and returns the final coloring.
Coloring replay(const TransformTrace& t);

}  // namespace mpg
