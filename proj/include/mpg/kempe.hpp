#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mpg/coloring.hpp"

namespace mpg {

/// F^f(G): the canonical colorings reachable from `seed` by K-changes, and the
/// union of their bichromatic cycles.
struct KempeClass {
  Coloring seed;
  std::vector<Coloring> members;         // sorted
  std::vector<BichromaticCycle> cycle_set;  // sorted, filled when requested

  bool contains(const Coloring& f) const;
};

/// Canonical colorings one K-change (on a pair with omega >= 2) away from f.
std::vector<Coloring> kempe_neighbors(const PlaneGraph& g, const Coloring& f);

/// BFS closure over single K-changes, canonicalizing after each step.
KempeClass kempe_class(const PlaneGraph& g, const Coloring& f, bool with_cycle_set = true);

/// Kempe classes partitioning C_4^0(G), ordered by their least member.
std::vector<KempeClass> kempe_partition(const PlaneGraph& g, bool with_cycle_set = false);

/// True iff C_4^0(G) is a single Kempe class.
bool is_kempe_graph(const PlaneGraph& g);

/// Thread-safe memo of Kempe partitions. Keyed by the labelled rotation
/// system, since colorings refer to concrete vertex ids.
class KempeCache {
 public:
  std::shared_ptr<const std::vector<KempeClass>> partition(const PlaneGraph& g);

 private:
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const std::vector<KempeClass>>> memo_;
};

}  // namespace mpg
