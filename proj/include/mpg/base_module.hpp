#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpg/coloring.hpp"
#include "mpg/plane_graph.hpp"

namespace mpg {

/// Corners v1..v4 of an SMPG whose outer face is a 4-cycle, in face order.
std::array<Vertex, 4> quad_corners(const SmpgView& s);

/// Renames colors so that v1, v3 get 1 and v2, v4 get 2; 3 and 4 follow first
/// appearance. Throws unless f colors the outer 4-cycle with two colors.
Coloring normalize_f2(const SmpgView& s, const Coloring& f);

/// F2: colorings (up to color renaming) using exactly two colors on the
/// outer 4-cycle, normalized and sorted.
std::vector<Coloring> f2_colorings(const SmpgView& s);

struct EndpointPathFamily {
  Vertex from = kNone, to = kNone;          // v1,v3 or v2,v4
  ColorPair colors;                         // {1,i} or {2,i}
  std::vector<std::vector<Vertex>> paths;   // alternating paths, up to the limit
  bool nonempty = false;                    // decided by component connectivity
  bool truncated = false;                   // enumeration hit the limit
};

/// P13, P14, P23, P24 in that order, for a normalized F2 coloring.
std::array<EndpointPathFamily, 4> endpoint_paths(const SmpgView& s, const Coloring& f, std::size_t limit = 64);

enum class F2Class { cross, shared_on_24, shared_on_13 };
std::string to_string(F2Class c);
F2Class classify_f2(const SmpgView& s, const Coloring& f);

enum class ModuleKind { tree, cycle, cyclic_cycle, none };
enum class PathKind { smp, mmp, other, none };
std::string to_string(ModuleKind k);
std::string to_string(PathKind k);

struct BaseModuleReport {
  SmpgView smpg;
  std::array<Vertex, 4> corners{};
  std::vector<Coloring> f2;                  // F2, normalized
  bool is_4_base_module = false;
  std::optional<Coloring> witness;           // f0
  std::optional<std::pair<Vertex, Vertex>> shared_pair;
  std::vector<Coloring> module_colorings;    // F2 members of the Kempe class of f0
  ModuleKind kind = ModuleKind::none;
  bool kind_witnessed = false;               // cycle: a mate exhibits the UB-cycle
  PathKind path_kind = PathKind::none;
  std::vector<Cycle> shells;
};

/// Decides the base-module property intrinsically: some f0 in F2 whose Kempe
/// class meets F2 only in shared-endpoint colorings on one fixed pair.
/// Fills kind, path kind and shells (mate search bounded by `mate_bound`
/// interior vertices).
BaseModuleReport analyze_base_module(const SmpgView& s, int mate_bound = 2);
/// Only the yes/no part with witness and shared pair.
BaseModuleReport is_4_base_module(const SmpgView& s);

ModuleKind module_type(const BaseModuleReport& r, int mate_bound = 2, bool* witnessed = nullptr);
PathKind path_type(const BaseModuleReport& r);
std::vector<Cycle> shells(const BaseModuleReport& r);

/// The union of two SMPGs over the same 4-cycle. The mate's outer walk
/// m0..m3 is mapped to corners (shift - j) mod 4, after reversing the mate
/// when `mirror` is set. Module ids are kept; mate interiors are appended.
/// Returns nullopt when the union is not a simple triangulation.
std::optional<PlaneGraph> glue(const SmpgView& module, const SmpgView& mate, int shift, bool mirror);

/// True iff g is an MPG with minimum degree >= 4 and `cycle` is a UB-cycle of
/// some coloring of g.
bool is_ubcmpg_wrt(const PlaneGraph& g, std::span<const Vertex> cycle);

/// SMPGs over a 4-cycle with at most `max_interior` interior vertices.
const std::vector<SmpgView>& mate_corpus(int max_interior);

/// First glued union (over all mates with <= max_interior interior vertices
/// and all alignments) that is a UBCMPG w.r.t. the outer 4-cycle.
std::optional<PlaneGraph> find_mate(const SmpgView& s, int max_interior);

/// Module glued with the identity module, aligned so that the identity
/// module's connected corner pair meets the module's unshared pair.
std::optional<PlaneGraph> glue_identity_module(const BaseModuleReport& r);

}  // namespace mpg
