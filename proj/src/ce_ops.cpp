#include "mpg/ce_ops.hpp"

#include <algorithm>
#include <array>

#include "mpg/errors.hpp"

namespace mpg {

std::string to_string(WheelOp op) {
  static const std::array<const char*, 8> names{"e2wo", "c2wo", "e3wo", "c3wo", "e4wo", "c4wo", "e5wo", "c5wo"};
  return names[static_cast<std::size_t>(op)];
}

std::optional<WheelOp> parse_wheel_op(const std::string& name) {
  for (int i = 0; i < 8; ++i)
    if (to_string(static_cast<WheelOp>(i)) == name) return static_cast<WheelOp>(i);
  return std::nullopt;
}

WheelOp inverse_op(WheelOp op) {
  switch (op) {
    case WheelOp::e2wo: return WheelOp::c2wo;
    case WheelOp::c2wo: return WheelOp::e2wo;
    case WheelOp::e3wo: return WheelOp::c3wo;
    case WheelOp::c3wo: return WheelOp::e3wo;
    case WheelOp::e4wo: return WheelOp::c4wo;
    case WheelOp::c4wo: return WheelOp::e4wo;
    case WheelOp::e5wo: return WheelOp::c5wo;
    case WheelOp::c5wo: return WheelOp::e5wo;
  }
  return op;
}

namespace {

void require_vertex(const PlaneGraph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex " + std::to_string(v + 1) + " out of range");
}

HalfEdge require_edge(const PlaneGraph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  const HalfEdge h = g.find_half_edge(u, v);
  if (h == kNone)
    throw PreconditionError("no edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
  return h;
}

void check_coloring(const PlaneGraph& g, const Coloring& f) {
  if (f.size() != 0 && f.size() != g.vertex_count())
    throw PreconditionError("coloring size does not match the graph");
}

Color least_free(std::initializer_list<Color> used) {
  for (Color c = 1; c <= kColors; ++c)
    if (std::find(used.begin(), used.end(), c) == used.end()) return c;
  return kUncolored;
}

bool all_colored(std::initializer_list<Color> cs) {
  return std::none_of(cs.begin(), cs.end(), [](Color c) { return c == kUncolored; });
}

std::vector<HalfEdge> between_cw(const RotationEditor& ed, HalfEdge from, HalfEdge to) {
  std::vector<HalfEdge> out;
  for (HalfEdge h = ed.next_cw(from); h != to; h = ed.next_cw(h)) out.push_back(h);
  return out;
}

// Moves hs (in order) to w, appending after `after` (kNone if w is isolated).
HalfEdge move_all(RotationEditor& ed, const std::vector<HalfEdge>& hs, Vertex w, HalfEdge after) {
  for (HalfEdge h : hs) {
    ed.move_half_edge(h, w, after);
    after = h;
  }
  return after;
}

// A live half-edge of g's outer face in the editor, or any live one.
HalfEdge surviving_outer(const PlaneGraph& g, const std::vector<bool>& dead, HalfEdge fallback) {
  if (g.outer_face() != kNone)
    for (HalfEdge h : g.face(g.outer_face()))
      if (!dead[h]) return h;
  return fallback;
}

OperatorApplication start(WheelOp op, const PlaneGraph& g, const Coloring& f, std::vector<Vertex> site) {
  check_coloring(g, f);
  OperatorApplication app;
  app.op = op;
  app.site = std::move(site);
  app.before = g;
  app.coloring_before = f;
  return app;
}

void finish_extension(OperatorApplication& app, const RotationEditor& ed, std::vector<Color> extra) {
  app.after = ed.build(app.before.outer_face() == kNone ? kNone : app.before.face(app.before.outer_face()).front());
  app.vertex_map = ed.vertex_map();
  if (app.coloring_before.size() == 0) return;
  app.coloring_after = app.coloring_before;
  for (Color c : extra) app.coloring_after.colors.push_back(c);
  for (Vertex v = 0; v < app.coloring_after.size(); ++v)
    if (app.coloring_after[v] == kUncolored) app.pending.push_back(v);
}

void finish_contraction(OperatorApplication& app, const RotationEditor& ed, const std::vector<HalfEdge>& removed,
                        HalfEdge fallback) {
  std::vector<bool> dead(app.before.half_edge_count(), false);
  for (HalfEdge h : removed) dead[h] = dead[app.before.twin(h)] = true;
  app.after = ed.build(surviving_outer(app.before, dead, fallback));
  app.vertex_map = ed.vertex_map();
  if (app.coloring_before.size() == 0) return;
  app.coloring_after = Coloring(app.after.vertex_count());
  for (Vertex v = 0; v < app.before.vertex_count(); ++v)
    if (app.vertex_map[v] != kNone) app.coloring_after[app.vertex_map[v]] = app.coloring_before[v];
  for (Vertex v = 0; v < app.coloring_after.size(); ++v)
    if (app.coloring_after[v] == kUncolored) app.pending.push_back(v);
}

Color color_of(const Coloring& f, Vertex v) { return f.size() == 0 ? kUncolored : f[v]; }

// The rim of a wheel centered at x, in clockwise order, after checking that
// every face at x is a triangle.
std::vector<Vertex> wheel_rim(const PlaneGraph& g, Vertex x, int degree) {
  require_vertex(g, x);
  if (g.degree(x) != degree)
    throw PreconditionError("vertex " + std::to_string(x + 1) + " is not the center of a " +
                            std::to_string(degree) + "-wheel");
  std::vector<Vertex> rim;
  for (HalfEdge h : g.rotation(x)) {
    if (g.face(g.face_of(h)).size() != 3) throw PreconditionError("wheel faces must be triangles");
    rim.push_back(g.target(h));
  }
  return rim;
}

}  // namespace

OperatorApplication e2wo(const PlaneGraph& g, const Coloring& f, Vertex u, Vertex v) {
  auto app = start(WheelOp::e2wo, g, f, {u, v});
  const HalfEdge h = require_edge(g, u, v);
  RotationEditor ed(g);
  const HalfEdge t = ed.twin(h);
  const HalfEdge e = ed.add_edge(u, h, v, ed.prev_cw(t));
  const Vertex x = ed.add_vertex();
  const HalfEdge xu = ed.add_edge(x, kNone, u, h);
  ed.add_edge(x, xu, v, ed.twin(e));
  app.center = x;
  const Color cu = color_of(f, u), cv = color_of(f, v);
  finish_extension(app, ed, {all_colored({cu, cv}) ? least_free({cu, cv}) : kUncolored});
  return app;
}

OperatorApplication c2wo(const PlaneGraph& g, const Coloring& f, Vertex x) {
  auto app = start(WheelOp::c2wo, g, f, {x});
  const auto rim = wheel_rim(g, x, 2);
  if (rim[0] == rim[1]) throw PreconditionError("not a 2-wheel");
  const auto rot = g.rotation(x);
  // The face through x->u continues along one of the parallel u-v edges.
  const HalfEdge uv = g.face_next(rot[0]);
  if (g.target(uv) != rim[1]) throw PreconditionError("not a 2-wheel");
  RotationEditor ed(g);
  ed.remove_edge(rot[0]);
  ed.remove_edge(rot[1]);
  ed.remove_edge(uv);
  ed.remove_vertex(x);
  finish_contraction(app, ed, {rot[0], rot[1], uv}, g.face_next(rot[1]));
  return app;
}

OperatorApplication e3wo(const PlaneGraph& g, const Coloring& f, Vertex a, Vertex b, Vertex c) {
  auto app = start(WheelOp::e3wo, g, f, {a, b, c});
  for (Vertex v : {a, b, c}) require_vertex(g, v);
  const std::array<Vertex, 3> tri{a, b, c};
  const int face = g.find_face(tri);
  if (face == kNone || g.face(face).size() != 3) throw PreconditionError("site is not a triangular face");
  const auto& hs = g.face(face);  // p->q, q->r, r->p
  const Vertex p = g.origin(hs[0]), q = g.origin(hs[1]), r = g.origin(hs[2]);
  RotationEditor ed(g);
  const Vertex x = ed.add_vertex();
  const HalfEdge xp = ed.add_edge(x, kNone, p, ed.twin(hs[2]));
  const HalfEdge xr = ed.add_edge(x, xp, r, ed.twin(hs[1]));
  ed.add_edge(x, xr, q, ed.twin(hs[0]));
  app.center = x;
  const Color cp = color_of(f, p), cq = color_of(f, q), cr = color_of(f, r);
  finish_extension(app, ed, {all_colored({cp, cq, cr}) ? least_free({cp, cq, cr}) : kUncolored});
  return app;
}

OperatorApplication c3wo(const PlaneGraph& g, const Coloring& f, Vertex x) {
  auto app = start(WheelOp::c3wo, g, f, {x});
  wheel_rim(g, x, 3);
  const auto rot = g.rotation(x);
  RotationEditor ed(g);
  for (HalfEdge h : rot) ed.remove_edge(h);
  ed.remove_vertex(x);
  finish_contraction(app, ed, rot, g.face_next(rot[0]));
  return app;
}

OperatorApplication e4wo(const PlaneGraph& g, const Coloring& f, Vertex v1, Vertex v2, Vertex v3) {
  auto app = start(WheelOp::e4wo, g, f, {v1, v2, v3});
  if (v1 == v3) throw PreconditionError("2-path ends coincide");
  const HalfEdge h1 = require_edge(g, v2, v1);
  const HalfEdge h3 = require_edge(g, v2, v3);
  RotationEditor ed(g);
  // Edges clockwise between v2->v3 and v2->v1 lie right of the path and move.
  const auto right = between_cw(ed, h3, h1);
  const HalfEdge p3 = ed.prev_cw(ed.twin(h3));
  const Vertex split = ed.add_vertex();
  const Vertex x = ed.add_vertex();
  const HalfEdge last = move_all(ed, right, split, kNone);
  const HalfEdge a = ed.add_edge(split, last, v1, ed.twin(h1));
  const HalfEdge b = ed.add_edge(split, a, v3, p3);
  const HalfEdge x1 = ed.add_edge(x, kNone, v2, h3);
  const HalfEdge x2 = ed.add_edge(x, x1, v3, ed.twin(b));
  const HalfEdge x3 = ed.add_edge(x, x2, split, a);
  ed.add_edge(x, x3, v1, ed.twin(h1));
  app.center = x;
  app.contracted = std::pair{v2, split};
  const Color c1 = color_of(f, v1), c2 = color_of(f, v2), c3 = color_of(f, v3);
  finish_extension(app, ed, {c2, all_colored({c1, c2, c3}) ? least_free({c1, c2, c3}) : kUncolored});
  return app;
}

namespace {

struct Contraction {
  std::vector<Vertex> rim;
  int keep_at = 0, drop_at = 0;
};

Contraction locate_pair(const PlaneGraph& g, Vertex x, Vertex keep, Vertex drop, int degree) {
  Contraction c;
  c.rim = wheel_rim(g, x, degree);
  auto pos = [&](Vertex v) {
    auto it = std::find(c.rim.begin(), c.rim.end(), v);
    if (it == c.rim.end() || std::count(c.rim.begin(), c.rim.end(), v) != 1)
      throw PreconditionError("vertex " + std::to_string(v + 1) + " is not a simple rim vertex");
    return static_cast<int>(it - c.rim.begin());
  };
  c.keep_at = pos(keep);
  c.drop_at = pos(drop);
  if (g.adjacent(keep, drop)) throw PreconditionError("contracted vertices are adjacent");
  return c;
}

void require_same_color(const Coloring& f, Vertex keep, Vertex drop) {
  if (f.size() == 0) return;
  if (f[keep] != kUncolored && f[drop] != kUncolored && f[keep] != f[drop])
    throw PreconditionError("contracted vertices have different colors");
}

HalfEdge edge_to_center(const PlaneGraph& g, Vertex v, Vertex x) {
  for (HalfEdge h : g.rotation(v))
    if (g.target(h) == x) return h;
  return kNone;
}

}  // namespace

OperatorApplication c4wo(const PlaneGraph& g, const Coloring& f, Vertex x, Vertex keep, Vertex drop) {
  auto app = start(WheelOp::c4wo, g, f, {x, keep, drop});
  const auto c = locate_pair(g, x, keep, drop, 4);
  if ((c.drop_at - c.keep_at + 4) % 4 != 2) throw PreconditionError("contracted vertices are not opposite on the rim");
  require_same_color(f, keep, drop);
  const HalfEdge ek = edge_to_center(g, keep, x), edp = edge_to_center(g, drop, x);
  RotationEditor ed(g);
  const HalfEdge anchor = ed.prev_cw(ek);
  const HalfEdge d1 = ed.next_cw(edp), d2 = ed.prev_cw(edp);
  const auto moved = between_cw(ed, d1, d2);
  const auto spokes = g.rotation(x);
  for (HalfEdge h : spokes) ed.remove_edge(h);
  ed.remove_edge(d1);
  ed.remove_edge(d2);
  move_all(ed, moved, keep, anchor);
  ed.remove_vertex(x);
  ed.remove_vertex(drop);
  app.contracted = std::pair{keep, drop};
  auto removed = spokes;
  removed.push_back(d1);
  removed.push_back(d2);
  finish_contraction(app, ed, removed, anchor);
  return app;
}

OperatorApplication e5wo(const PlaneGraph& g, const Coloring& f, Vertex v1, Vertex v2, Vertex v3, Vertex v4) {
  auto app = start(WheelOp::e5wo, g, f, {v1, v2, v3, v4});
  if (v1 == v3 || v1 == v4 || v3 == v4) throw PreconditionError("funnel vertices must be distinct");
  const HalfEdge h1 = require_edge(g, v2, v1);
  const HalfEdge h3 = require_edge(g, v2, v3);
  const HalfEdge h4 = require_edge(g, v2, v4);
  if (g.next_cw(h4) != h3 || g.face(g.face_of(g.twin(h4))).size() != 3)
    throw PreconditionError("v2 v3 v4 is not a funnel face in the expected orientation");
  RotationEditor ed(g);
  const auto right = between_cw(ed, h3, h1);
  const HalfEdge h34 = ed.next_cw(ed.twin(h3));  // v3->v4
  const Vertex split = ed.add_vertex();
  const Vertex x = ed.add_vertex();
  std::vector<HalfEdge> moving{h3};
  moving.insert(moving.end(), right.begin(), right.end());
  const HalfEdge last = move_all(ed, moving, split, kNone);
  const HalfEdge a = ed.add_edge(split, last, v1, ed.twin(h1));
  const HalfEdge x1 = ed.add_edge(x, kNone, v1, ed.twin(h1));
  const HalfEdge x2 = ed.add_edge(x, x1, v2, h4);
  const HalfEdge x3 = ed.add_edge(x, x2, v4, ed.twin(h34));
  const HalfEdge x4 = ed.add_edge(x, x3, v3, ed.twin(h3));
  ed.add_edge(x, x4, split, a);
  app.center = x;
  app.contracted = std::pair{v2, split};
  const Color c1 = color_of(f, v1), c2 = color_of(f, v2), c3 = color_of(f, v3), c4 = color_of(f, v4);
  // The center is colorable only when its rim uses at most three colors.
  Color cx = kUncolored;
  if (all_colored({c1, c2, c3, c4})) cx = least_free({c1, c2, c3, c4});
  finish_extension(app, ed, {c2, cx});
  return app;
}

OperatorApplication c5wo(const PlaneGraph& g, const Coloring& f, Vertex x, Vertex keep, Vertex drop) {
  auto app = start(WheelOp::c5wo, g, f, {x, keep, drop});
  auto c = locate_pair(g, x, keep, drop, 5);
  const int gap = (c.drop_at - c.keep_at + 5) % 5;
  if (gap == 2) std::swap(keep, drop);
  else if (gap != 3) throw PreconditionError("contracted vertices are not at rim distance 2");
  require_same_color(f, keep, drop);
  const HalfEdge ek = edge_to_center(g, keep, x), edp = edge_to_center(g, drop, x);
  RotationEditor ed(g);
  const HalfEdge anchor = ed.prev_cw(ek);
  const HalfEdge first = ed.next_cw(edp), shared = ed.prev_cw(edp);
  std::vector<HalfEdge> moved{first};
  const auto rest = between_cw(ed, first, shared);
  moved.insert(moved.end(), rest.begin(), rest.end());
  const auto spokes = g.rotation(x);
  for (HalfEdge h : spokes) ed.remove_edge(h);
  ed.remove_edge(shared);
  move_all(ed, moved, keep, anchor);
  ed.remove_vertex(x);
  ed.remove_vertex(drop);
  app.contracted = std::pair{keep, drop};
  auto removed = spokes;
  removed.push_back(shared);
  finish_contraction(app, ed, removed, anchor);
  return app;
}

OperatorApplication apply_wheel_op(WheelOp op, const PlaneGraph& g, const Coloring& f,
                                   const std::vector<Vertex>& site) {
  static const std::array<std::size_t, 8> arity{2, 1, 3, 1, 3, 3, 4, 3};
  if (site.size() != arity[static_cast<std::size_t>(op)])
    throw PreconditionError(to_string(op) + " expects " + std::to_string(arity[static_cast<std::size_t>(op)]) +
                            " site vertices");
  const auto& s = site;
  switch (op) {
    case WheelOp::e2wo: return e2wo(g, f, s[0], s[1]);
    case WheelOp::c2wo: return c2wo(g, f, s[0]);
    case WheelOp::e3wo: return e3wo(g, f, s[0], s[1], s[2]);
    case WheelOp::c3wo: return c3wo(g, f, s[0]);
    case WheelOp::e4wo: return e4wo(g, f, s[0], s[1], s[2]);
    case WheelOp::c4wo: return c4wo(g, f, s[0], s[1], s[2]);
    case WheelOp::e5wo: return e5wo(g, f, s[0], s[1], s[2], s[3]);
    case WheelOp::c5wo: return c5wo(g, f, s[0], s[1], s[2]);
  }
  throw PreconditionError("unknown operator");
}

std::vector<std::vector<Vertex>> extension_sites(const PlaneGraph& g, WheelOp op) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.vertex_count();
  switch (op) {
    case WheelOp::e2wo:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.adjacency()[u])
          if (u < v) out.push_back({u, v});
      break;
    case WheelOp::e3wo:
      for (int f = 0; f < g.face_count(); ++f)
        if (g.face(f).size() == 3) out.push_back(g.face_vertices(f));
      break;
    case WheelOp::e4wo:
      for (Vertex v2 = 0; v2 < n; ++v2)
        for (Vertex v1 : g.adjacency()[v2])
          for (Vertex v3 : g.adjacency()[v2])
            if (v1 != v3) out.push_back({v1, v2, v3});
      break;
    case WheelOp::e5wo:
      for (Vertex v2 = 0; v2 < n; ++v2)
        for (HalfEdge h4 : g.rotation(v2)) {
          const HalfEdge h3 = g.next_cw(h4);
          const Vertex v3 = g.target(h3), v4 = g.target(h4);
          if (v3 == v4 || g.face(g.face_of(g.twin(h4))).size() != 3) continue;
          if (g.find_half_edge(v2, v3) != h3 || g.find_half_edge(v2, v4) != h4) continue;
          for (Vertex v1 : g.adjacency()[v2])
            if (v1 != v3 && v1 != v4) out.push_back({v1, v2, v3, v4});
        }
      break;
    default:
      throw PreconditionError("sites are enumerated for extending operators only");
  }
  return out;
}

std::vector<Vertex> inverse_site(const OperatorApplication& app) {
  switch (app.op) {
    case WheelOp::e2wo:
    case WheelOp::e3wo: return {app.center};
    case WheelOp::e4wo:
    case WheelOp::e5wo: return {app.center, app.contracted->first, app.contracted->second};
    default: throw PreconditionError("only extending operators have an inverse site");
  }
}

PlaneGraph split_vertex(const PlaneGraph& g, Vertex v, Vertex a, Vertex b) {
  if (a == b) throw PreconditionError("split needs two distinct neighbours");
  const HalfEdge ha = require_edge(g, v, a);
  const HalfEdge hb = require_edge(g, v, b);
  RotationEditor ed(g);
  const auto moving = between_cw(ed, ha, hb);
  const HalfEdge at_a = ed.prev_cw(ed.twin(ha));
  const Vertex w = ed.add_vertex();
  const HalfEdge last = move_all(ed, moving, w, kNone);
  const HalfEdge wa = ed.add_edge(w, last, a, at_a);
  const HalfEdge wb = ed.add_edge(w, last == kNone ? wa : last, b, ed.twin(hb));
  ed.add_edge(w, wb, v, ha);
  return ed.build(g.outer_face() == kNone ? kNone : g.face(g.outer_face()).front());
}

}  // namespace mpg
