#include "mpg/base_module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "mpg/errors.hpp"
#include "mpg/fixtures.hpp"
#include "mpg/generator.hpp"
#include "mpg/kempe.hpp"
#include "mpg/ubcycle.hpp"

namespace mpg {

std::string to_string(F2Class c) {
  switch (c) {
    case F2Class::cross: return "cross";
    case F2Class::shared_on_24: return "shared_on_24";
    case F2Class::shared_on_13: return "shared_on_13";
  }
  return "?";
}

std::string to_string(ModuleKind k) {
  switch (k) {
    case ModuleKind::tree: return "tree";
    case ModuleKind::cycle: return "cycle";
    case ModuleKind::cyclic_cycle: return "cyclic_cycle";
    case ModuleKind::none: return "none";
  }
  return "?";
}

std::string to_string(PathKind k) {
  switch (k) {
    case PathKind::smp: return "SMP";
    case PathKind::mmp: return "MMP";
    case PathKind::other: return "other";
    case PathKind::none: return "none";
  }
  return "?";
}

std::array<Vertex, 4> quad_corners(const SmpgView& s) {
  const auto& c = s.outer_cycle.vertices;
  if (c.size() != 4) throw PreconditionError("outer cycle must have length 4");
  return {c[0], c[1], c[2], c[3]};
}

namespace {

bool two_colored(const std::array<Vertex, 4>& c, const Coloring& f) {
  return f[c[0]] != kUncolored && f[c[1]] != kUncolored && f[c[0]] == f[c[2]] && f[c[1]] == f[c[3]] &&
         f[c[0]] != f[c[1]];
}

}  // namespace

Coloring normalize_f2(const SmpgView& s, const Coloring& f) {
  const auto c = quad_corners(s);
  if (!two_colored(c, f)) throw PreconditionError("coloring does not use two colors on the outer 4-cycle");
  std::array<Color, kColors + 1> map{};
  map[f[c[0]]] = 1;
  map[f[c[1]]] = 2;
  Color next = 3;
  Coloring out = f;
  for (auto& x : out.colors) {
    if (x == kUncolored) continue;
    if (map[x] == 0) map[x] = next++;
    x = map[x];
  }
  return out;
}

std::vector<Coloring> f2_colorings(const SmpgView& s) {
  const auto c = quad_corners(s);
  const auto& g = s.graph;
  Coloring fixed(g.vertex_count());
  fixed[c[0]] = fixed[c[2]] = 1;
  fixed[c[1]] = fixed[c[3]] = 2;
  if (!is_proper_partial(g, fixed)) return {};
  std::set<Coloring> out;
  for_each_coloring(g.adjacency(), fixed, [&](const Coloring& f) {
    out.insert(normalize_f2(s, f));
    return true;
  });
  return {out.begin(), out.end()};
}

namespace {

bool same_component(const PlaneGraph& g, const Coloring& f, Vertex a, Vertex b, ColorPair p) {
  if (!p.contains(f[a]) || !p.contains(f[b])) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    if (u == b) return true;
    for (Vertex w : g.adjacency()[u])
      if (!seen[w] && p.contains(f[w])) seen[w] = 1, stack.push_back(w);
  }
  return false;
}

void enumerate_paths(const PlaneGraph& g, const Coloring& f, EndpointPathFamily& fam, std::size_t limit) {
  std::vector<char> on(g.vertex_count(), 0);
  std::vector<Vertex> path{fam.from};
  on[fam.from] = 1;
  std::function<void(Vertex)> go = [&](Vertex u) {
    if (fam.truncated) return;
    if (u == fam.to) {
      if (fam.paths.size() >= limit) {
        fam.truncated = true;
        return;
      }
      fam.paths.push_back(path);
      return;
    }
    for (Vertex w : g.adjacency()[u]) {
      if (on[w] || !fam.colors.contains(f[w])) continue;
      on[w] = 1;
      path.push_back(w);
      go(w);
      path.pop_back();
      on[w] = 0;
    }
  };
  go(fam.from);
}

}  // namespace

std::array<EndpointPathFamily, 4> endpoint_paths(const SmpgView& s, const Coloring& f, std::size_t limit) {
  const auto c = quad_corners(s);
  if (f[c[0]] != 1 || f[c[2]] != 1 || f[c[1]] != 2 || f[c[3]] != 2)
    throw PreconditionError("endpoint paths need a normalized F2 coloring");
  std::array<EndpointPathFamily, 4> out;
  const std::array<std::pair<int, Color>, 4> families{{{0, 3}, {0, 4}, {1, 3}, {1, 4}}};
  for (int k = 0; k < 4; ++k) {
    auto& fam = out[k];
    const int base = families[k].first;
    fam.from = c[base];
    fam.to = c[base + 2];
    fam.colors = ColorPair(static_cast<Color>(base + 1), families[k].second);
    fam.nonempty = same_component(s.graph, f, fam.from, fam.to, fam.colors);
    if (fam.nonempty && limit > 0) enumerate_paths(s.graph, f, fam, limit);
  }
  return out;
}

F2Class classify_f2(const SmpgView& s, const Coloring& f) {
  const auto p = endpoint_paths(s, f, 0);
  const bool p13 = p[0].nonempty, p14 = p[1].nonempty, p23 = p[2].nonempty, p24 = p[3].nonempty;
  if ((p13 && p23) || (p14 && p24)) return F2Class::cross;
  if (!p13 && !p14) return F2Class::shared_on_24;
  if (p13 && p14) return F2Class::shared_on_13;
  throw TheoremAlarm("F2 coloring is neither cross nor shared-endpoint");
}

namespace {

std::vector<Coloring> f2_members(const SmpgView& s, const KempeClass& k) {
  const auto c = quad_corners(s);
  std::set<Coloring> out;
  for (const auto& m : k.members)
    if (two_colored(c, m)) out.insert(normalize_f2(s, m));
  return {out.begin(), out.end()};
}

}  // namespace

BaseModuleReport is_4_base_module(const SmpgView& s) {
  BaseModuleReport r;
  r.smpg = s;
  r.corners = quad_corners(s);
  r.f2 = f2_colorings(s);
  std::set<Coloring> done;
  for (const auto& f0 : r.f2) {
    if (done.count(canonicalize(f0))) continue;
    const auto k = kempe_class(s.graph, f0, false);
    done.insert(k.members.begin(), k.members.end());
    const auto members = f2_members(s, k);
    std::set<F2Class> kinds;
    for (const auto& m : members) kinds.insert(classify_f2(s, m));
    if (kinds.size() != 1 || *kinds.begin() == F2Class::cross) continue;
    r.is_4_base_module = true;
    r.witness = f0;
    r.module_colorings = members;
    const auto& c = r.corners;
    r.shared_pair = *kinds.begin() == F2Class::shared_on_24 ? std::pair{c[1], c[3]} : std::pair{c[0], c[2]};
    break;
  }
  return r;
}

namespace {

std::vector<std::vector<Vertex>> other_cycles(const BaseModuleReport& r) {
  const auto& g = r.smpg.graph;
  const auto quad = normalize_cycle(r.corners);
  std::set<std::vector<Vertex>> out;
  for (const auto& m : kempe_class(g, *r.witness, false).members)
    for (const auto& c : bichromatic_cycles(g, m))
      if (c.vertices != quad) out.insert(c.vertices);
  return {out.begin(), out.end()};
}

// Faces strictly inside a simple cycle (the side away from the outer face).
std::vector<char> faces_inside(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
  const int k = static_cast<int>(cycle.size());
  std::vector<char> cut(g.half_edge_count(), 0);
  for (int i = 0; i < k; ++i) {
    const HalfEdge h = g.find_half_edge(cycle[i], cycle[(i + 1) % k]);
    cut[h] = cut[g.twin(h)] = 1;
  }
  std::vector<int> parent(g.face_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (HalfEdge h = 0; h < g.half_edge_count(); ++h)
    if (!cut[h]) parent[find(g.face_of(h))] = find(g.face_of(g.twin(h)));
  const int outer = find(g.outer_face());
  std::vector<char> in(g.face_count(), 0);
  for (int f = 0; f < g.face_count(); ++f) in[f] = find(f) != outer;
  return in;
}

}  // namespace

ModuleKind module_type(const BaseModuleReport& r, int mate_bound, bool* witnessed) {
  if (witnessed) *witnessed = false;
  if (!r.is_4_base_module) return ModuleKind::none;
  const auto& g = r.smpg.graph;
  const auto quad = normalize_cycle(r.corners);
  const auto own = bichromatic_cycles(g, *r.witness);
  if (own.size() == 1 && own.front().vertices == quad) return ModuleKind::tree;
  const auto others = other_cycles(r);
  if (others.empty()) return ModuleKind::tree;
  const std::set<std::vector<Vertex>> wanted(others.begin(), others.end());
  for (const auto& mate : mate_corpus(mate_bound))
    for (int shift = 0; shift < 4; ++shift)
      for (bool mirror : {false, true}) {
        const auto u = glue(r.smpg, mate, shift, mirror);
        if (!u || u->min_degree() < 4) continue;
        for (const auto& k : kempe_partition(*u)) {
          if (!is_ub_cycle(*u, k, r.corners)) continue;
          for (const auto& c : class_ub_cycles(*u, k))
            if (wanted.count(c.vertices)) {
              if (witnessed) *witnessed = true;
              return ModuleKind::cycle;
            }
        }
      }
  return ModuleKind::cyclic_cycle;
}

namespace {

// All module paths of a module coloring, or nothing if some family is not a single path.
std::optional<std::vector<std::vector<Vertex>>> unique_module_paths(const SmpgView& s, const Coloring& f) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& fam : endpoint_paths(s, f, 2)) {
    if (!fam.nonempty) continue;
    if (fam.paths.size() != 1) return std::nullopt;
    out.push_back(fam.paths.front());
  }
  return out;
}

}  // namespace

PathKind path_type(const BaseModuleReport& r) {
  if (!r.is_4_base_module || r.kind == ModuleKind::tree || r.kind == ModuleKind::none) return PathKind::none;
  const auto& ms = r.module_colorings;
  std::vector<std::vector<std::vector<Vertex>>> paths;
  for (const auto& m : ms) {
    auto p = unique_module_paths(r.smpg, m);
    if (!p) return PathKind::other;
    paths.push_back(std::move(*p));
  }
  if (std::all_of(paths.begin(), paths.end(), [&](const auto& p) { return p == paths.front(); }))
    return PathKind::smp;
  // Every member must be reachable from the first by sigma-operations on cycles
  // that meet a module path and land on another member.
  const auto& g = r.smpg.graph;
  const auto quad = normalize_cycle(r.corners);
  std::vector<char> reached(ms.size(), 0);
  std::vector<std::size_t> queue{0};
  reached[0] = 1;
  while (!queue.empty()) {
    const std::size_t a = queue.back();
    queue.pop_back();
    std::set<Vertex> on_path;
    for (const auto& p : paths[a]) on_path.insert(p.begin(), p.end());
    for (const auto& c : bichromatic_cycles(g, ms[a])) {
      if (c.vertices == quad) continue;
      if (std::none_of(c.vertices.begin(), c.vertices.end(), [&](Vertex v) { return on_path.count(v); })) continue;
      const auto next = normalize_f2(r.smpg, sigma_operation(g, ms[a], c.vertices));
      const auto it = std::lower_bound(ms.begin(), ms.end(), next);
      if (it == ms.end() || *it != next) continue;
      const auto b = static_cast<std::size_t>(it - ms.begin());
      if (!reached[b]) reached[b] = 1, queue.push_back(b);
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](char x) { return x != 0; }) ? PathKind::mmp
                                                                                     : PathKind::other;
}

std::vector<Cycle> shells(const BaseModuleReport& r) {
  if (r.kind != ModuleKind::cyclic_cycle) return {};
  const auto& g = r.smpg.graph;
  const auto cycles = other_cycles(r);
  std::vector<std::vector<char>> inside;
  for (const auto& c : cycles) inside.push_back(faces_inside(g, c));
  // Cycles whose closed disks share a face belong to one family.
  std::vector<int> parent(cycles.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t a = 0; a < cycles.size(); ++a)
    for (std::size_t b = a + 1; b < cycles.size(); ++b)
      for (int f = 0; f < g.face_count(); ++f)
        if (inside[a][f] && inside[b][f]) {
          parent[find(static_cast<int>(a))] = find(static_cast<int>(b));
          break;
        }
  std::map<int, std::vector<char>> families;
  for (std::size_t a = 0; a < cycles.size(); ++a) {
    auto& u = families.try_emplace(find(static_cast<int>(a)), std::vector<char>(g.face_count(), 0)).first->second;
    for (int f = 0; f < g.face_count(); ++f) u[f] |= inside[a][f];
  }
  std::vector<Cycle> out;
  for (const auto& [root, in] : families) {
    // Trace the boundary walks of the face union and keep the outermost.
    std::vector<char> used(g.half_edge_count(), 0);
    std::optional<Cycle> best;
    for (HalfEdge h = 0; h < g.half_edge_count(); ++h) {
      if (used[h] || !in[g.face_of(h)] || in[g.face_of(g.twin(h))]) continue;
      std::vector<Vertex> walk;
      for (HalfEdge e = h; !used[e];) {
        used[e] = 1;
        walk.push_back(g.origin(e));
        e = g.face_next(e);
        while (in[g.face_of(g.twin(e))]) e = g.face_next(g.twin(e));
      }
      Cycle c;
      try {
        c = cycle_sides(g, walk);
      } catch (const PreconditionError&) {
        c.vertices = walk;
      }
      if (!best || c.interior.size() > best->interior.size()) best = std::move(c);
    }
    if (best) out.push_back(std::move(*best));
  }
  return out;
}

BaseModuleReport analyze_base_module(const SmpgView& s, int mate_bound) {
  auto r = is_4_base_module(s);
  if (!r.is_4_base_module) return r;
  r.kind = module_type(r, mate_bound, &r.kind_witnessed);
  r.path_kind = path_type(r);
  r.shells = shells(r);
  return r;
}

std::optional<PlaneGraph> glue(const SmpgView& module, const SmpgView& mate, int shift, bool mirror) {
  const auto corners = quad_corners(module);
  const auto& mg = mate.graph;
  const int n = module.graph.vertex_count();
  std::vector<std::vector<Vertex>> faces;
  for (int f = 0; f < module.graph.face_count(); ++f)
    if (f != module.graph.outer_face()) faces.push_back(module.graph.face_vertices(f));
  auto mate_walk = mg.face_vertices(mg.outer_face());
  if (mate_walk.size() != 4) throw PreconditionError("mate must have an outer 4-cycle");
  if (mirror) std::reverse(mate_walk.begin(), mate_walk.end());
  std::vector<Vertex> map(mg.vertex_count(), kNone);
  for (int j = 0; j < 4; ++j) map[mate_walk[j]] = corners[((shift - j) % 4 + 4) % 4];
  int next = n;
  for (Vertex v = 0; v < mg.vertex_count(); ++v)
    if (map[v] == kNone) map[v] = next++;
  for (int f = 0; f < mg.face_count(); ++f) {
    if (f == mg.outer_face()) continue;
    auto vs = mg.face_vertices(f);
    if (mirror) std::reverse(vs.begin(), vs.end());
    for (auto& v : vs) v = map[v];
    faces.push_back(std::move(vs));
  }
  try {
    auto u = PlaneGraph::from_faces(next, faces, 0);
    if (!validate_mpg(u).is_mpg) return std::nullopt;
    return u;
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

bool is_ubcmpg_wrt(const PlaneGraph& g, std::span<const Vertex> cycle) {
  const auto check = validate_mpg(g);
  if (!check.is_mpg || check.min_degree < 4) return false;
  for (const auto& k : kempe_partition(g))
    if (is_ub_cycle(g, k, cycle)) return true;
  return false;
}

const std::vector<SmpgView>& mate_corpus(int max_interior) {
  static std::mutex mu;
  static std::map<int, std::vector<SmpgView>> memo;
  std::lock_guard lock(mu);
  auto it = memo.find(max_interior);
  if (it != memo.end()) return it->second;
  std::vector<SmpgView> out;
  for (const auto& s : quad_smpg_corpus(max_interior + 4, 0, 1)) out.push_back(smpg_view(s));
  return memo.emplace(max_interior, std::move(out)).first->second;
}

std::optional<PlaneGraph> find_mate(const SmpgView& s, int max_interior) {
  const auto corners = quad_corners(s);
  for (const auto& mate : mate_corpus(max_interior))
    for (int shift = 0; shift < 4; ++shift)
      for (bool mirror : {false, true}) {
        auto u = glue(s, mate, shift, mirror);
        if (u && is_ubcmpg_wrt(*u, corners)) return u;
      }
  return std::nullopt;
}

std::optional<PlaneGraph> glue_identity_module(const BaseModuleReport& r) {
  if (!r.is_4_base_module) return std::nullopt;
  const auto b4 = smpg_view(fixtures::b4_module());
  // The identity module's face walk starts at one of its two degree-4 corners.
  const auto walk = b4.graph.face_vertices(b4.graph.outer_face());
  const int offset = b4.graph.degree(walk[0]) == 4 ? 0 : 1;
  const bool shared_24 = r.shared_pair->first == r.corners[1];
  for (int s : {0, 2})
    for (bool mirror : {false, true}) {
      const int shift = s + (shared_24 ? 0 : 1) + (mirror ? -offset : offset);
      if (auto u = glue(r.smpg, b4, shift, mirror)) return u;
    }
  return std::nullopt;
}

}  // namespace mpg
