#include "mpg/coloring.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "mpg/errors.hpp"

namespace mpg {

ColorPair ColorPair::complement() const {
  Color rest[2];
  int k = 0;
  for (Color c = 1; c <= kColors; ++c)
    if (!contains(c)) rest[k++] = c;
  return {rest[0], rest[1]};
}

std::span<const ColorPair> all_color_pairs() {
  static const std::array<ColorPair, 6> pairs{ColorPair{1, 2}, ColorPair{1, 3}, ColorPair{1, 4},
                                              ColorPair{2, 3}, ColorPair{2, 4}, ColorPair{3, 4}};
  return pairs;
}

bool is_proper(const PlaneGraph& g, const Coloring& f) {
  if (f.size() != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (f[v] < 1 || f[v] > kColors) return false;
  return is_proper_partial(g, f);
}

bool is_proper_partial(const PlaneGraph& g, const Coloring& f) {
  if (f.size() != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.adjacency()[v])
      if (f[v] != kUncolored && f[v] == f[w]) return false;
  return true;
}

Coloring canonicalize(const Coloring& f) {
  std::array<Color, kColors + 1> rename{};
  Color next = 1;
  Coloring out(f.size());
  for (Vertex v = 0; v < f.size(); ++v) {
    const Color c = f[v];
    if (c == kUncolored) continue;
    if (rename[c] == 0) rename[c] = next++;
    out[v] = rename[c];
  }
  return out;
}

namespace {

// Degree-descending start, then always the vertex with most ordered neighbours.
std::vector<Vertex> search_order(const std::vector<std::vector<Vertex>>& adj, const Coloring& fixed) {
  const int n = static_cast<int>(adj.size());
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  std::vector<int> weight(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (!fixed.colors.empty() && fixed[v] != kUncolored) {
      placed[v] = true;
      for (Vertex w : adj[v]) ++weight[w];
    }
  while (true) {
    Vertex best = kNone;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == kNone || weight[v] > weight[best] ||
          (weight[v] == weight[best] && adj[v].size() > adj[best].size()))
        best = v;
    }
    if (best == kNone) break;
    placed[best] = true;
    order.push_back(best);
    for (Vertex w : adj[best]) ++weight[w];
  }
  return order;
}

}  // namespace

bool for_each_coloring(const std::vector<std::vector<Vertex>>& adj, const Coloring& fixed,
                       const std::function<bool(const Coloring&)>& visit) {
  const int n = static_cast<int>(adj.size());
  const bool break_symmetry = fixed.colors.empty() ||
                              std::all_of(fixed.colors.begin(), fixed.colors.end(), [](Color c) { return c == 0; });
  Coloring f = fixed.colors.empty() ? Coloring(n) : fixed;
  const auto order = search_order(adj, f);
  const int m = static_cast<int>(order.size());
  std::vector<int> max_used(m + 1, 0);
  std::vector<Color> tried(m, 0);
  int depth = 0;
  while (depth >= 0) {
    if (depth == m) {
      if (!visit(f)) return false;
      --depth;
      continue;
    }
    const Vertex v = order[depth];
    const int limit = break_symmetry ? std::min(kColors, max_used[depth] + 1) : kColors;
    Color c = static_cast<Color>(tried[depth] + 1);
    for (; c <= limit; ++c) {
      bool ok = true;
      for (Vertex w : adj[v])
        if (f[w] == c) {
          ok = false;
          break;
        }
      if (ok) break;
    }
    if (c > limit) {
      f[v] = kUncolored;
      tried[depth] = 0;
      --depth;
      continue;
    }
    f[v] = c;
    tried[depth] = c;
    max_used[depth + 1] = std::max<int>(max_used[depth], c);
    ++depth;
    if (depth < m) tried[depth] = 0;
  }
  return true;
}

std::optional<Coloring> find_coloring(const std::vector<std::vector<Vertex>>& adj,
                                      const std::function<bool(const Coloring&)>& accept) {
  std::optional<Coloring> out;
  for_each_coloring(adj, {}, [&](const Coloring& f) {
    if (!accept(f)) return true;
    out = f;
    return false;
  });
  return out;
}

std::vector<Coloring> enumerate_colorings(const PlaneGraph& g) {
  std::vector<Coloring> out;
  for_each_coloring(g.adjacency(), {}, [&](const Coloring& f) {
    out.push_back(canonicalize(f));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Component labels of the subgraph induced by colors {i, j}; -1 elsewhere.
int label_components(const PlaneGraph& g, const Coloring& f, Color i, Color j, std::vector<int>& comp) {
  const int n = g.vertex_count();
  comp.assign(n, -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if ((f[s] != i && f[s] != j) || comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.adjacency()[u])
        if ((f[w] == i || f[w] == j) && comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return count;
}

}  // namespace

std::vector<IjComponent> ij_components(const PlaneGraph& g, const Coloring& f, Color i, Color j) {
  if (i == j) throw PreconditionError("color pair must be two distinct colors");
  std::vector<int> comp;
  const int count = label_components(g, f, i, j, comp);
  std::vector<IjComponent> out(count);
  std::vector<int> edges(count, 0);
  std::vector<bool> all_deg2(count, true), max_deg2(count, true);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (comp[v] < 0) continue;
    auto& c = out[comp[v]];
    c.pair = ColorPair(i, j);
    c.vertices.push_back(v);
    int d = 0;
    for (Vertex w : g.adjacency()[v]) d += comp[w] == comp[v];
    edges[comp[v]] += d;
    if (d != 2) all_deg2[comp[v]] = false;
    if (d > 2) max_deg2[comp[v]] = false;
  }
  for (int k = 0; k < count; ++k) {
    const int e = edges[k] / 2;
    const int nv = static_cast<int>(out[k].vertices.size());
    if (all_deg2[k] && e == nv && nv >= 3)
      out[k].kind = ComponentKind::cycle;
    else if (max_deg2[k] && e == nv - 1)
      out[k].kind = ComponentKind::path;
    else
      out[k].kind = ComponentKind::other;
  }
  return out;
}

int omega(const PlaneGraph& g, const Coloring& f, Color i, Color j) {
  std::vector<int> comp;
  return label_components(g, f, i, j, comp);
}

int omega(const PlaneGraph& g, const Coloring& f) {
  int total = 0;
  for (const auto& p : all_color_pairs()) total += omega(g, f, p.first, p.second);
  return total;
}

Coloring swap_component(const PlaneGraph& g, const Coloring& f, Color i, Color j, Vertex v) {
  if (f[v] != i && f[v] != j) throw PreconditionError("vertex is not colored with the pair");
  Coloring out = f;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{v};
  seen[v] = true;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    out[u] = f[u] == i ? j : i;
    for (Vertex w : g.adjacency()[u])
      if (!seen[w] && (f[w] == i || f[w] == j)) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return out;
}

Coloring kempe_change(const PlaneGraph& g, const Coloring& f, const IjComponent& component) {
  const Color i = component.pair.first, j = component.pair.second;
  if (component.vertices.empty()) throw PreconditionError("empty component");
  const auto comps = ij_components(g, f, i, j);
  const auto it = std::find_if(comps.begin(), comps.end(),
                               [&](const IjComponent& c) { return c.vertices == component.vertices; });
  if (it == comps.end()) throw PreconditionError("component does not belong to the coloring");
  if (comps.size() < 2)
    throw PreconditionError("K-change needs at least two ij-components (the swap would only permute colors)");
  return swap_component(g, f, i, j, component.vertices.front());
}

std::vector<Vertex> normalize_cycle(std::span<const Vertex> cycle) {
  std::vector<Vertex> c(cycle.begin(), cycle.end());
  if (c.empty()) return c;
  const auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

namespace {

// Simple cycles of the subgraph on `members` (adjacency restricted by `in`).
void simple_cycles(const PlaneGraph& g, const std::vector<Vertex>& members, const std::vector<int>& comp, int id,
                   ColorPair pair, std::vector<BichromaticCycle>& out) {
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<Vertex> path;
  for (Vertex s : members) {
    // Cycles whose least vertex is s.
    path.assign(1, s);
    on_path[s] = true;
    std::vector<std::size_t> idx{0};
    while (!path.empty()) {
      const Vertex u = path.back();
      const auto& nb = g.adjacency()[u];
      std::size_t& k = idx.back();
      bool advanced = false;
      while (k < nb.size()) {
        const Vertex w = nb[k++];
        if (comp[w] != id || w < s) continue;
        if (w == s) {
          if (path.size() >= 3 && path[1] < path.back()) out.push_back({path, pair});
          continue;
        }
        if (on_path[w]) continue;
        on_path[w] = true;
        path.push_back(w);
        idx.push_back(0);
        advanced = true;
        break;
      }
      if (!advanced) {
        on_path[path.back()] = false;
        path.pop_back();
        idx.pop_back();
      }
    }
  }
}

}  // namespace

std::vector<BichromaticCycle> bichromatic_cycles(const PlaneGraph& g, const Coloring& f) {
  std::vector<BichromaticCycle> out;
  std::vector<int> comp;
  for (const auto& p : all_color_pairs()) {
    const int count = label_components(g, f, p.first, p.second, comp);
    std::vector<std::vector<Vertex>> members(count);
    std::vector<int> twice_edges(count, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (comp[v] < 0) continue;
      members[comp[v]].push_back(v);
      for (Vertex w : g.adjacency()[v]) twice_edges[comp[v]] += comp[w] == comp[v];
    }
    for (int k = 0; k < count; ++k) {
      if (twice_edges[k] / 2 < static_cast<int>(members[k].size())) continue;  // a tree
      simple_cycles(g, members[k], comp, k, p, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ColoringKind classify_coloring(const PlaneGraph& g, const Coloring& f) {
  for (const auto& p : all_color_pairs()) {
    std::vector<int> comp;
    const int count = label_components(g, f, p.first, p.second, comp);
    std::vector<int> nv(count, 0), twice_edges(count, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (comp[v] < 0) continue;
      ++nv[comp[v]];
      for (Vertex w : g.adjacency()[v]) twice_edges[comp[v]] += comp[w] == comp[v];
    }
    for (int k = 0; k < count; ++k)
      if (twice_edges[k] / 2 >= nv[k]) return ColoringKind::cycle;
  }
  return ColoringKind::tree;
}

std::vector<Color> colors_on(const Coloring& f, std::span<const Vertex> vertices) {
  std::vector<Color> out;
  for (Vertex v : vertices) out.push_back(f[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Coloring sigma_operation(const PlaneGraph& g, const Coloring& f, std::span<const Vertex> cycle) {
  const auto cs = colors_on(f, cycle);
  if (cs.size() != 2 || cs[0] == kUncolored) throw PreconditionError("cycle is not bichromatic under the coloring");
  const Cycle sides = cycle_sides(g, cycle);
  const ColorPair swap = ColorPair(cs[0], cs[1]).complement();
  Coloring out = f;
  for (Vertex v : sides.interior) {
    if (out[v] == swap.first)
      out[v] = swap.second;
    else if (out[v] == swap.second)
      out[v] = swap.first;
  }
  return out;
}

}  // namespace mpg
