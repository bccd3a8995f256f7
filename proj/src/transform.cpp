#include "mpg/transform.hpp"

#include <algorithm>
#include <map>

#include "mpg/base_module.hpp"
#include "mpg/errors.hpp"
#include "mpg/kempe.hpp"
#include "mpg/rot_io.hpp"

namespace mpg {

namespace {

void require_min_degree_5(const PlaneGraph& g) {
  const auto check = validate_mpg(g);
  if (!check.is_mpg) throw PreconditionError("input is not a maximal planar graph");
  if (check.min_degree != 5) throw PreconditionError("minimum degree must be 5");
}

Color free_color(std::initializer_list<Color> used) {
  for (Color c = 1; c <= kColors; ++c)
    if (std::find(used.begin(), used.end(), c) == used.end()) return c;
  return kUncolored;
}

bool in_component(const PlaneGraph& g, const Coloring& f, Vertex from, Vertex to, Color i, Color j) {
  const Coloring swapped = swap_component(g, f, i, j, from);
  return swapped[to] != f[to];
}

int rim_index(const std::vector<Vertex>& rim, Vertex v) {
  const auto it = std::find(rim.begin(), rim.end(), v);
  if (it == rim.end()) throw PreconditionError("vertex is not on the link");
  return static_cast<int>(it - rim.begin());
}

nlohmann::json colors_json(const Coloring& f) { return f.colors; }
Coloring colors_from(const nlohmann::json& j) { return Coloring(j.get<std::vector<Color>>()); }

}  // namespace

WernickeConfig find_wernicke_config(const PlaneGraph& g) {
  require_min_degree_5(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 5) continue;
    auto nb = g.adjacency()[v];
    std::sort(nb.begin(), nb.end());
    for (Vertex w : nb)
      if (g.degree(w) == 5 || g.degree(w) == 6) return {g.degree(w) == 5 ? 55 : 56, v, w};
  }
  throw TheoremAlarm("no 55- or 56-configuration in a minimum degree 5 MPG");
}

std::set<int> borodin_config_scan(const PlaneGraph& g) {
  require_min_degree_5(g);
  std::set<int> out;
  for (int f = 0; f < g.face_count(); ++f) {
    auto vs = g.face_vertices(f);
    std::array<int, 3> d{g.degree(vs[0]), g.degree(vs[1]), g.degree(vs[2])};
    std::sort(d.begin(), d.end());
    const int code = d[0] * 100 + d[1] * 10 + d[2];
    if (code == 555 || code == 556 || code == 557 || code == 566) out.insert(code);
  }
  return out;
}

std::vector<Vertex> link_cycle(const PlaneGraph& g, Vertex v) { return g.cw_neighbors(v); }

std::optional<Vertex> bichromatic_center(const PlaneGraph& g, Vertex v, const Coloring& f) {
  const auto rim = link_cycle(g, v);
  auto used = colors_on(f, rim);
  if (used.size() != kColors) return std::nullopt;
  const int k = static_cast<int>(rim.size());
  for (int i = 0; i < k; ++i)
    if (f[rim[(i + k - 1) % k]] == f[rim[(i + 1) % k]]) return rim[i];
  return std::nullopt;
}

RotationStep rotation_step(const PlaneGraph& g, Vertex v, const Coloring& f) {
  const auto rim = link_cycle(g, v);
  if (rim.size() != 5) throw PreconditionError("rotation needs a degree-5 vertex");
  if (f[v] != kUncolored) throw PreconditionError("the link center must be uncolored");
  const auto center = bichromatic_center(g, v, f);
  if (!center) throw PreconditionError("the link must use four colors");
  const int i = rim_index(rim, *center);
  auto at = [&](int d) { return rim[(i + d + 5) % 5]; };
  const Color a = f[at(-1)], b = f[at(0)], c = f[at(2)], d = f[at(-2)];
  RotationStep step;
  step.before = f;
  if (!in_component(g, f, at(0), at(-2), b, d)) {
    step.pair = ColorPair(b, d);
    step.at = at(0);
    step.after = swap_component(g, f, b, d, at(0));
    step.three_colored = true;
    return step;
  }
  // The bd-path from the center to at(-2) separates at(-1) from at(2).
  if (in_component(g, f, at(-1), at(2), a, c))
    throw TheoremAlarm("link vertices on both sides of a bichromatic path share a component");
  step.pair = ColorPair(a, c);
  step.at = at(-1);
  step.after = swap_component(g, f, a, c, at(-1));
  return step;
}

std::vector<RotationStep> rotate_to_bichromatic_path(const PlaneGraph& g, Vertex v, const Coloring& f, Vertex end) {
  const auto rim = link_cycle(g, v);
  const int e = rim_index(rim, end);
  std::vector<RotationStep> steps;
  Coloring cur = f;
  for (int round = 0; round <= 5; ++round) {
    const auto center = bichromatic_center(g, v, cur);
    if (!center) return steps;
    const int i = rim_index(rim, *center);
    if ((i + 1) % 5 == e || (i + 4) % 5 == e) return steps;
    steps.push_back(rotation_step(g, v, cur));
    cur = steps.back().after;
    if (steps.back().three_colored) return steps;
  }
  throw TheoremAlarm("rotation did not reach the requested 2-path");
}

namespace {

// g minus the given vertices, which must be the highest ids; the hole they
// leave becomes the outer face.
PlaneGraph remove_top_vertices(const PlaneGraph& g, int keep) {
  std::vector<std::vector<Vertex>> faces;
  std::set<std::pair<Vertex, Vertex>> used;
  for (int f = 0; f < g.face_count(); ++f) {
    auto vs = g.face_vertices(f);
    if (std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return v >= keep; })) continue;
    for (std::size_t k = 0; k < vs.size(); ++k) used.insert({vs[k], vs[(k + 1) % vs.size()]});
    faces.push_back(std::move(vs));
  }
  std::map<Vertex, Vertex> hole;
  for (const auto& [u, v] : used)
    if (!used.count({v, u})) {
      if (hole.count(v)) throw PreconditionError("removal leaves a pinched hole");
      hole[v] = u;
    }
  if (hole.empty()) throw PreconditionError("removal leaves no hole");
  std::vector<Vertex> walk{hole.begin()->first};
  while (true) {
    const Vertex n = hole.at(walk.back());
    if (n == walk.front()) break;
    walk.push_back(n);
  }
  if (walk.size() != hole.size()) throw PreconditionError("removal leaves more than one hole");
  faces.insert(faces.begin(), walk);
  return PlaneGraph::from_faces(keep, faces, 0);
}

}  // namespace

ModuleExtraction extract_module(const PlaneGraph& g, Vertex v2, const Coloring& f, Vertex end) {
  const auto center = bichromatic_center(g, v2, f);
  if (!center) throw PreconditionError("the link of v2 must use four colors");
  const auto rim = link_cycle(g, v2);
  const int i = rim_index(rim, *center);
  const Vertex prev = rim[(i + 4) % 5], next = rim[(i + 1) % 5];
  if (end != prev && end != next) throw PreconditionError("end is not on the bichromatic 2-path");
  ModuleExtraction m;
  const Vertex v3 = end, v4 = *center, v1 = end == prev ? next : prev;
  m.c4 = {v1, v2, v3, v4};
  // The split copy must take the v2 side of the path around v4.
  Vertex p = v3, q = v1;
  bool right = false;
  for (HalfEdge h = g.next_cw(g.find_half_edge(v4, q)); g.target(h) != p; h = g.next_cw(h))
    right |= g.target(h) == v2;
  if (!right) std::swap(p, q);
  m.extension = e4wo(g, f, p, v4, q);
  m.gstar = m.extension.after;
  m.copy = m.extension.contracted->second;
  m.center = m.extension.center;
  if (!m.gstar.adjacent(m.copy, v2) || m.gstar.adjacent(v4, v2))
    throw TheoremAlarm("split copy did not take the edge to v2");
  // v2 takes the color of v4; the copy and the center take the two colors of
  // the link outside the 2-path.
  m.f2 = m.extension.coloring_after;
  const Color a = f[v1], b = f[v4];
  std::vector<Color> rest;
  for (Color c = 1; c <= kColors; ++c)
    if (c != a && c != b) rest.push_back(c);
  m.f2[v2] = b;
  m.f2[m.copy] = rest[0];
  m.f2[m.center] = rest[1];
  if (!is_proper(m.gstar, m.f2)) {
    std::swap(m.f2[m.copy], m.f2[m.center]);
    if (!is_proper(m.gstar, m.f2)) throw TheoremAlarm("no proper recoloring of the extended 5-cycle");
  }
  const auto module = remove_top_vertices(m.gstar, g.vertex_count());
  m.smpg = smpg_view(module);
  if (!validate_smpg(module, m.smpg.outer_cycle.vertices) || m.smpg.outer_cycle.vertices.size() != 4)
    throw TheoremAlarm("extracted module is not a semi-maximal planar graph on a 4-cycle");
  return m;
}

std::string to_string(DecycleRule r) {
  switch (r) {
    case DecycleRule::swap: return "swap";
    case DecycleRule::kempe_class: return "kempe_class";
    case DecycleRule::constructive: return "constructive";
    case DecycleRule::exhaustive: return "exhaustive";
  }
  return "?";
}

DecycleResult decycle(const SmpgView& s, const Coloring& f, Vertex v2, Vertex v4) {
  const auto& g = s.graph;
  if (!is_proper(g, f)) throw PreconditionError("module coloring is not proper");
  if (f[v2] != f[v4]) return {f, DecycleRule::swap};
  const Color b = f[v2];
  for (Color c = 1; c <= kColors; ++c)
    if (c != b && !in_component(g, f, v2, v4, b, c)) return {swap_component(g, f, b, c, v2), DecycleRule::swap};

  const auto report = is_4_base_module(s);
  if (!report.is_4_base_module) {
    for (const auto& m : kempe_class(g, f, false).members)
      if (m[v2] != m[v4]) return {m, DecycleRule::kempe_class};
    throw TheoremAlarm("module is not a base module but its Kempe class has no decycle coloring");
  }

  // Constructive recoloring when v2 has degree 4: free one color of the v1/v3
  // pair at v2 by two K-changes.
  const auto corners = quad_corners(s);
  const auto pos2 = std::find(corners.begin(), corners.end(), v2) - corners.begin();
  const Vertex v1 = corners[(pos2 + 3) % 4], v3 = corners[(pos2 + 1) % 4];
  if (g.degree(v2) == 4) {
    const Color a = f[v1];
    std::vector<Color> rest;
    for (Color c = 1; c <= kColors; ++c)
      if (c != a && c != b) rest.push_back(c);
    for (int flip = 0; flip < 2; ++flip) {
      const Color c = rest[flip], d = rest[1 - flip];
      if (in_component(g, f, v1, v3, a, d) || in_component(g, f, v1, v3, a, c)) continue;
      Coloring h = swap_component(g, f, a, d, v1);
      if (h[v3] != a) continue;
      h = swap_component(g, h, a, c, v3);
      h[v2] = a;
      if (is_proper(g, h) && h[v2] != h[v4]) return {h, DecycleRule::constructive};
    }
  }

  // Stand-in for the general decycle argument: a coloring with v2 and v4 apart
  // is a coloring of the module plus the edge v2 v4.
  auto adj = g.adjacency();
  adj[v2].push_back(v4);
  adj[v4].push_back(v2);
  if (auto h = find_coloring(adj, [](const Coloring&) { return true; })) return {*h, DecycleRule::exhaustive};
  throw TheoremAlarm("no decycle coloring of the extracted module");
}

Coloring restore_and_color(const ModuleExtraction& m, const Coloring& fstar, const PlaneGraph& g,
                           OperatorApplication* contraction) {
  const auto [v1, v2, v3, v4] = m.c4;
  if (fstar[v2] == fstar[v4]) throw PreconditionError("not a decycle coloring");
  Coloring h(m.gstar.vertex_count());
  std::copy(fstar.colors.begin(), fstar.colors.begin() + g.vertex_count(), h.colors.begin());
  h[m.copy] = h[v4];
  h[m.center] = free_color({h[v1], h[v3], h[v4]});
  if (!is_proper(m.gstar, h)) throw TheoremAlarm("extended decycle coloring is not proper");
  auto app = c4wo(m.gstar, h, m.center, v4, m.copy);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto a = app.after.adjacency()[v], b = g.adjacency()[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw TheoremAlarm("contraction did not restore the input graph");
  }
  if (!is_proper(g, app.coloring_after)) throw TheoremAlarm("restored coloring is not proper");
  Coloring out = app.coloring_after;
  if (contraction) *contraction = std::move(app);
  return out;
}

nlohmann::json TransformTrace::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& s : steps) steps_json.push_back({{"kind", s.kind}, {"payload", s.payload}});
  return {{"input", format_rot(input)}, {"steps", steps_json}, {"output", colors_json(output)}};
}

TransformTrace TransformTrace::from_json(const nlohmann::json& j) {
  TransformTrace t;
  t.input = parse_rot(j.at("input").get<std::string>());
  for (const auto& s : j.at("steps")) t.steps.push_back({s.at("kind").get<std::string>(), s.at("payload")});
  t.output = colors_from(j.at("output"));
  return t;
}

TransformTrace transform(const PlaneGraph& g) {
  const auto cfg = find_wernicke_config(g);
  const Vertex v2 = cfg.center;
  TransformTrace t;
  t.input = g;
  const auto rim = link_cycle(g, v2);

  // Color g - v2, preferring a link that uses all four colors.
  auto adj = g.adjacency();
  for (auto& row : adj) row.erase(std::remove(row.begin(), row.end(), v2), row.end());
  adj[v2].clear();
  auto f = find_coloring(adj, [&](const Coloring& h) { return colors_on(h, rim).size() == kColors; });
  if (!f) f = find_coloring(adj, [](const Coloring&) { return true; });
  if (!f) throw TheoremAlarm("g - v is not 4-colorable");
  Coloring cur = *f;
  cur[v2] = kUncolored;
  t.steps.push_back({"config_found",
                     {{"kind", cfg.kind}, {"center", v2}, {"neighbor", cfg.neighbor}, {"coloring", colors_json(cur)}}});

  auto finish_direct = [&]() {
    const auto used = colors_on(cur, rim);
    Color c = 1;
    while (std::find(used.begin(), used.end(), c) != used.end()) ++c;
    cur[v2] = c;
    t.steps.push_back({"extend", {{"vertices", {v2}}, {"colors", {c}}}});
    if (!is_proper(g, cur)) throw TheoremAlarm("direct coloring of the center is not proper");
    t.output = cur;
    return t;
  };
  if (colors_on(cur, rim).size() < kColors) return finish_direct();

  for (const auto& step : rotate_to_bichromatic_path(g, v2, cur, cfg.neighbor)) {
    t.steps.push_back({"kchange", {{"pair", {step.pair.first, step.pair.second}}, {"vertex", step.at}}});
    cur = step.after;
  }
  if (colors_on(cur, rim).size() < kColors) return finish_direct();

  const auto m = extract_module(g, v2, cur, cfg.neighbor);
  t.steps.push_back({"e4wo", {{"site", m.extension.site}}});
  t.steps.push_back({"module_extracted", {{"c4", m.c4}, {"coloring", colors_json(m.f2)}}});
  if (m.smpg.graph.degree(v2) != 4 || m.smpg.graph.degree(m.c4[2]) != g.degree(cfg.neighbor))
    throw TheoremAlarm("unexpected degrees on the extracted module");

  Coloring module_f(std::vector<Color>(m.f2.colors.begin(), m.f2.colors.begin() + g.vertex_count()));
  const auto d = decycle(m.smpg, module_f, v2, m.c4[3]);
  Coloring fstar = d.f;
  fstar.colors.resize(m.gstar.vertex_count(), kUncolored);
  t.steps.push_back({"decycle", {{"rule", to_string(d.rule)}, {"coloring", colors_json(fstar)}}});

  OperatorApplication contraction;
  t.output = restore_and_color(m, fstar, g, &contraction);
  const auto& pre = contraction.coloring_before;
  t.steps.push_back({"extend", {{"vertices", {m.copy, m.center}}, {"colors", {pre[m.copy], pre[m.center]}}}});
  t.steps.push_back({"c4wo", {{"site", contraction.site}}});
  return t;
}

Coloring replay(const TransformTrace& t) {
  PlaneGraph g = t.input;
  Coloring f;
  for (const auto& s : t.steps) {
    const auto& p = s.payload;
    if (s.kind == "config_found" || s.kind == "module_extracted" || s.kind == "decycle") {
      f = colors_from(p.at("coloring"));
      if (f.size() != g.vertex_count() || !is_proper_partial(g, f))
        throw PreconditionError("trace step '" + s.kind + "' carries an invalid coloring");
    } else if (s.kind == "kchange") {
      const auto pair = p.at("pair").get<std::vector<Color>>();
      f = swap_component(g, f, pair.at(0), pair.at(1), p.at("vertex").get<Vertex>());
    } else if (s.kind == "extend") {
      const auto vs = p.at("vertices").get<std::vector<Vertex>>();
      const auto cs = p.at("colors").get<std::vector<Color>>();
      for (std::size_t k = 0; k < vs.size(); ++k) f[vs[k]] = cs.at(k);
      if (!is_proper_partial(g, f)) throw PreconditionError("trace extension is not proper");
    } else if (s.kind == "e4wo" || s.kind == "c4wo") {
      const auto site = p.at("site").get<std::vector<Vertex>>();
      auto app = apply_wheel_op(s.kind == "e4wo" ? WheelOp::e4wo : WheelOp::c4wo, g, f, site);
      g = app.after;
      f = app.coloring_after;
    } else {
      throw PreconditionError("unknown trace step '" + s.kind + "'");
    }
  }
  if (!is_proper(g, f)) throw PreconditionError("replayed coloring is not proper");
  return f;
}

}  // namespace mpg
