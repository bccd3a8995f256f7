#pragma once

// Slow, independent reference implementations used only by the tests.

#include <set>
#include <vector>

#include "mpg/coloring.hpp"
#include "mpg/plane_graph.hpp"

namespace oracle {

using Adj = std::vector<std::vector<int>>;
using Face = std::vector<int>;

Adj adjacency(const mpg::PlaneGraph& g);

/// Number of proper 4-colorings divided by the 24 palette permutations.
long count_colorings(const Adj& adj);

/// Kempe classes by union-find over all labelled colorings (permutations and
/// every single component swap are merged). Returns class count.
int count_kempe_classes(const Adj& adj);
/// The same classes with their labelled members.
std::vector<std::vector<std::vector<int>>> kempe_classes(const Adj& adj);

/// Number of ij-components by union-find.
int count_components(const Adj& adj, const std::vector<int>& colors, int i, int j);

/// Simple cycles in the subgraph on vertices colored i or j, by edge-subset
/// enumeration. Each cycle is its sorted vertex set.
std::set<std::vector<int>> bichromatic_cycle_sets(const Adj& adj, const std::vector<int>& colors);

/// Graph isomorphism by backtracking with degree pruning.
bool isomorphic(const Adj& a, const Adj& b);

/// Triangulations of the sphere on n vertices (simple), one per abstract
/// isomorphism class, found by BFS over edge flips. Faces are oriented triples.
std::vector<std::vector<Face>> triangulations(int n);

}  // namespace oracle
