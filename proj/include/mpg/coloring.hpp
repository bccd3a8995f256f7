#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mpg/plane_graph.hpp"

namespace mpg {

/// Colors are 1..4; 0 marks a vertex that is not (yet) colored.
using Color = std::uint8_t;
inline constexpr Color kUncolored = 0;
inline constexpr int kColors = 4;

struct Coloring {
  std::vector<Color> colors;

  Coloring() = default;
  explicit Coloring(int n) : colors(static_cast<std::size_t>(n), kUncolored) {}
  explicit Coloring(std::vector<Color> c) : colors(std::move(c)) {}

  int size() const noexcept { return static_cast<int>(colors.size()); }
  Color operator[](Vertex v) const { return colors[static_cast<std::size_t>(v)]; }
  Color& operator[](Vertex v) { return colors[static_cast<std::size_t>(v)]; }

  auto operator<=>(const Coloring&) const = default;
};

/// Unordered pair of distinct colors, stored with first < second.
struct ColorPair {
  Color first = 1;
  Color second = 2;

  ColorPair() = default;
  ColorPair(Color a, Color b) : first(a < b ? a : b), second(a < b ? b : a) {}
  bool contains(Color c) const { return c == first || c == second; }
  /// The other two colors of {1,2,3,4}.
  ColorPair complement() const;
  auto operator<=>(const ColorPair&) const = default;
};

/// All six pairs in lexicographic order.
std::span<const ColorPair> all_color_pairs();

enum class ComponentKind { path, cycle, other };

struct IjComponent {
  ColorPair pair;
  std::vector<Vertex> vertices;  // sorted
  ComponentKind kind = ComponentKind::other;
};

struct BichromaticCycle {
  std::vector<Vertex> vertices;  // normalized: least vertex first, then its smaller neighbour
  ColorPair pair;

  auto operator<=>(const BichromaticCycle&) const = default;
};

enum class ColoringKind { tree, cycle };

/// Every vertex colored in 1..4 and no edge monochromatic.
bool is_proper(const PlaneGraph& g, const Coloring& f);
/// No edge joins two equal non-zero colors.
bool is_proper_partial(const PlaneGraph& g, const Coloring& f);

/// Representative of the color-permutation class: colors renamed in order of
/// first appearance along the vertex order (the lexicographically least of the
/// 24 relabellings).
Coloring canonicalize(const Coloring& f);

/// C_4^0(G): one canonical coloring per equivalence class, sorted.
std::vector<Coloring> enumerate_colorings(const PlaneGraph& g);

/// Backtracking over proper 4-colorings of the graph given by `adj`, one per
/// color-permutation class. `fixed` pre-assigns colors (0 = free); when it is
/// non-empty the permutation symmetry is not broken. The visitor returns false
/// to stop. Returns false if stopped early.
bool for_each_coloring(const std::vector<std::vector<Vertex>>& adj, const Coloring& fixed,
                       const std::function<bool(const Coloring&)>& visit);

/// First coloring accepted by `accept`, or nullopt.
std::optional<Coloring> find_coloring(const std::vector<std::vector<Vertex>>& adj,
                                      const std::function<bool(const Coloring&)>& accept);

std::vector<IjComponent> ij_components(const PlaneGraph& g, const Coloring& f, Color i, Color j);
int omega(const PlaneGraph& g, const Coloring& f, Color i, Color j);
/// Sum of omega over the six color pairs.
int omega(const PlaneGraph& g, const Coloring& f);

/// Swaps i and j on the ij-component containing v. No uniqueness check.
Coloring swap_component(const PlaneGraph& g, const Coloring& f, Color i, Color j, Vertex v);

/// K-change on `component`. Throws PreconditionError if the component does
/// not belong to f or is the only ij-component.
Coloring kempe_change(const PlaneGraph& g, const Coloring& f, const IjComponent& component);

/// All bichromatic cycles of f (every simple cycle inside every ij-component).
std::vector<BichromaticCycle> bichromatic_cycles(const PlaneGraph& g, const Coloring& f);
ColoringKind classify_coloring(const PlaneGraph& g, const Coloring& f);

/// Swaps the complementary pair strictly inside the cycle. Throws if the cycle
/// is not bichromatic under f.
Coloring sigma_operation(const PlaneGraph& g, const Coloring& f, std::span<const Vertex> cycle);

/// Color set of the given vertices under f.
std::vector<Color> colors_on(const Coloring& f, std::span<const Vertex> vertices);

/// Rotates/reflects a closed vertex list into the normalized form used by
/// BichromaticCycle.
std::vector<Vertex> normalize_cycle(std::span<const Vertex> cycle);

}  // namespace mpg
