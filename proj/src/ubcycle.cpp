#include "mpg/ubcycle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mpg/errors.hpp"

namespace mpg {

std::string to_string(UbcType t) {
  switch (t) {
    case UbcType::pure: return "pure";
    case UbcType::tree: return "tree";
    case UbcType::cycle: return "cycle";
    case UbcType::hybrid: return "hybrid";
    case UbcType::not_ubcmpg: return "not_ubcmpg";
  }
  return "?";
}

std::string to_string(ColoringClass c) {
  switch (c) {
    case ColoringClass::ubc: return "ubc";
    case ColoringClass::tree: return "tree";
    case ColoringClass::cyclic: return "cyclic";
  }
  return "?";
}

int UbReport::count(ColoringClass c) const {
  return static_cast<int>(std::count(coloring_class.begin(), coloring_class.end(), c));
}

bool cycles_intersect(const Cycle& a, const Cycle& b) {
  const bool a_in_b = std::any_of(a.vertices.begin(), a.vertices.end(), [&](Vertex v) { return b.has_in_interior(v); });
  if (!a_in_b) return false;
  return std::any_of(b.vertices.begin(), b.vertices.end(), [&](Vertex v) { return a.has_in_interior(v); });
}

namespace {

void require_bichromatic(const Coloring& f, std::span<const Vertex> cycle) {
  if (colors_on(f, cycle).size() != 2) throw PreconditionError("cycle is not bichromatic under the coloring");
}

void require_min_degree_4(const PlaneGraph& g) {
  if (g.min_degree() < 4) throw PreconditionError("UB-cycles are defined for minimum degree >= 4");
}

class SideCache {
 public:
  explicit SideCache(const PlaneGraph& g) : g_(g) {}
  const Cycle& get(const std::vector<Vertex>& c) {
    auto it = memo_.find(c);
    if (it == memo_.end()) it = memo_.emplace(c, cycle_sides(g_, c)).first;
    return it->second;
  }

 private:
  const PlaneGraph& g_;
  std::map<std::vector<Vertex>, Cycle> memo_;
};

}  // namespace

bool is_ub_cycle(const PlaneGraph&, const KempeClass& k, std::span<const Vertex> cycle) {
  return std::all_of(k.members.begin(), k.members.end(),
                     [&](const Coloring& m) { return colors_on(m, cycle).size() == 2; });
}

bool is_ub_cycle(const PlaneGraph& g, const Coloring& f, std::span<const Vertex> cycle) {
  require_min_degree_4(g);
  require_bichromatic(f, cycle);
  return is_ub_cycle(g, kempe_class(g, f, false), cycle);
}

bool is_ub_cycle_by_criterion(const PlaneGraph& g, const KempeClass& k, std::span<const Vertex> cycle) {
  SideCache sides(g);
  const auto key = normalize_cycle(cycle);
  const Cycle& c = sides.get(key);
  for (const auto& m : k.members) {
    const auto own = colors_on(m, cycle);
    for (const auto& other : bichromatic_cycles(g, m)) {
      if (other.vertices == key) continue;
      const std::vector<Color> pair{other.pair.first, other.pair.second};
      if (pair == own) continue;
      if (cycles_intersect(c, sides.get(other.vertices))) return false;
    }
  }
  return true;
}

bool is_ub_cycle_by_criterion(const PlaneGraph& g, const Coloring& f, std::span<const Vertex> cycle) {
  require_min_degree_4(g);
  require_bichromatic(f, cycle);
  return is_ub_cycle_by_criterion(g, kempe_class(g, f, false), cycle);
}

std::vector<BichromaticCycle> class_ub_cycles(const PlaneGraph& g, const KempeClass& k) {
  std::vector<BichromaticCycle> out;
  for (const auto& c : bichromatic_cycles(g, k.seed))
    if (is_ub_cycle(g, k, c.vertices)) out.push_back(c);
  return out;
}

UbReport classify_ubcmpg(const PlaneGraph& g) {
  const auto check = validate_mpg(g);
  if (!check.is_mpg) throw PreconditionError("graph is not a maximal planar graph");
  require_min_degree_4(g);

  UbReport r;
  r.graph = g;
  const auto classes = kempe_partition(g, false);
  std::vector<std::pair<Coloring, int>> all;
  std::vector<std::set<std::vector<Vertex>>> ub_sets;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    std::set<std::vector<Vertex>> ub;
    for (const auto& c : class_ub_cycles(g, classes[ci])) ub.insert(c.vertices);
    ub_sets.push_back(std::move(ub));
    for (const auto& m : classes[ci].members) all.emplace_back(m, static_cast<int>(ci));
  }
  std::sort(all.begin(), all.end());
  for (const auto& [f, ci] : all) {
    r.colorings.push_back(f);
    r.kempe_class_of.push_back(ci);
    std::vector<BichromaticCycle> ub;
    const auto cycles = bichromatic_cycles(g, f);
    for (const auto& c : cycles)
      if (ub_sets[ci].count(c.vertices)) ub.push_back(c);
    if (!ub.empty())
      r.coloring_class.push_back(ColoringClass::ubc);
    else if (cycles.empty())
      r.coloring_class.push_back(ColoringClass::tree);
    else
      r.coloring_class.push_back(ColoringClass::cyclic);
    r.ub_cycles.push_back(std::move(ub));
  }
  const int u = r.count(ColoringClass::ubc), t = r.count(ColoringClass::tree), c = r.count(ColoringClass::cyclic);
  if (u == 0)
    r.type = UbcType::not_ubcmpg;
  else if (t == 0 && c == 0)
    r.type = UbcType::pure;
  else if (c == 0)
    r.type = UbcType::tree;
  else if (t == 0)
    r.type = UbcType::cycle;
  else
    r.type = UbcType::hybrid;
  return r;
}

}  // namespace mpg
