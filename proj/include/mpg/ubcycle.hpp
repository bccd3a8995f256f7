#pragma once

#include <span>
#include <string>
#include <vector>

#include "mpg/coloring.hpp"
#include "mpg/kempe.hpp"

namespace mpg {

enum class UbcType { pure, tree, cycle, hybrid, not_ubcmpg };
std::string to_string(UbcType t);

/// Partition class of a coloring: UBC-coloring, tree-coloring or cyclic
/// cycle-coloring.
enum class ColoringClass { ubc, tree, cyclic };
std::string to_string(ColoringClass c);

struct UbReport {
  PlaneGraph graph;
  std::vector<Coloring> colorings;                    // C_4^0(G), sorted
  std::vector<int> kempe_class_of;                    // index into the Kempe partition
  std::vector<ColoringClass> coloring_class;          // per coloring
  std::vector<std::vector<BichromaticCycle>> ub_cycles;  // per coloring
  UbcType type = UbcType::not_ubcmpg;

  int count(ColoringClass c) const;
};

/// Crossing test for two cycles: some vertex of each lies strictly inside the
/// other. Independent of which face is outer.
bool cycles_intersect(const Cycle& a, const Cycle& b);

/// Definition-based: the cycle stays bichromatic under every member of F^f.
bool is_ub_cycle(const PlaneGraph& g, const Coloring& f, std::span<const Vertex> cycle);
bool is_ub_cycle(const PlaneGraph& g, const KempeClass& k, std::span<const Vertex> cycle);

/// Criterion-based: no cycle of the Kempe cycle-set that is bichromatic on a
/// different pair (under the member coloring it belongs to) intersects it.
bool is_ub_cycle_by_criterion(const PlaneGraph& g, const Coloring& f, std::span<const Vertex> cycle);
bool is_ub_cycle_by_criterion(const PlaneGraph& g, const KempeClass& k, std::span<const Vertex> cycle);

/// UB-cycles shared by a whole Kempe class: the intersection of C^2 over members.
std::vector<BichromaticCycle> class_ub_cycles(const PlaneGraph& g, const KempeClass& k);

/// Throws PreconditionError unless g is an MPG with minimum degree >= 4.
UbReport classify_ubcmpg(const PlaneGraph& g);

}  // namespace mpg
