#include "mpg/kempe.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "mpg/rot_io.hpp"

namespace mpg {

bool KempeClass::contains(const Coloring& f) const {
  return std::binary_search(members.begin(), members.end(), canonicalize(f));
}

std::vector<Coloring> kempe_neighbors(const PlaneGraph& g, const Coloring& f) {
  std::vector<Coloring> out;
  for (const auto& p : all_color_pairs()) {
    const auto comps = ij_components(g, f, p.first, p.second);
    if (comps.size() < 2) continue;
    for (const auto& c : comps) out.push_back(canonicalize(swap_component(g, f, p.first, p.second, c.vertices.front())));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

KempeClass kempe_class(const PlaneGraph& g, const Coloring& f, bool with_cycle_set) {
  KempeClass k;
  k.seed = canonicalize(f);
  std::set<Coloring> seen{k.seed};
  std::deque<Coloring> frontier{k.seed};
  while (!frontier.empty()) {
    const Coloring cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto& next : kempe_neighbors(g, cur))
      if (seen.insert(next).second) frontier.push_back(std::move(next));
  }
  k.members.assign(seen.begin(), seen.end());
  if (with_cycle_set) {
    std::set<BichromaticCycle> cycles;
    for (const auto& m : k.members)
      for (auto& c : bichromatic_cycles(g, m)) cycles.insert(std::move(c));
    k.cycle_set.assign(cycles.begin(), cycles.end());
  }
  return k;
}

std::vector<KempeClass> kempe_partition(const PlaneGraph& g, bool with_cycle_set) {
  std::vector<KempeClass> out;
  std::set<Coloring> covered;
  for (const auto& f : enumerate_colorings(g)) {
    if (covered.count(f)) continue;
    auto k = kempe_class(g, f, with_cycle_set);
    covered.insert(k.members.begin(), k.members.end());
    out.push_back(std::move(k));
  }
  return out;
}

bool is_kempe_graph(const PlaneGraph& g) { return kempe_partition(g).size() <= 1; }

std::shared_ptr<const std::vector<KempeClass>> KempeCache::partition(const PlaneGraph& g) {
  const std::string key = format_rot(g);
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  auto value = std::make_shared<const std::vector<KempeClass>>(kempe_partition(g, true));
  std::lock_guard lock(mu_);
  return memo_.try_emplace(key, std::move(value)).first->second;
}

}  // namespace mpg
