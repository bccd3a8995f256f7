#include "doctest.h"
#include "mpg/ce_ops.hpp"
#include "mpg/errors.hpp"
#include "mpg/fixtures.hpp"
#include "oracles.hpp"

using namespace mpg;

namespace {

std::vector<PlaneGraph> corpus(int max_n) {
  std::vector<PlaneGraph> out;
  for (int n = 4; n <= max_n; ++n)
    for (const auto& faces : oracle::triangulations(n)) out.push_back(PlaneGraph::from_faces(n, faces));
  return out;
}

Coloring some_coloring(const PlaneGraph& g) { return enumerate_colorings(g).front(); }

}  // namespace

TEST_CASE("extending operators add the expected vertices and keep a triangulation") {
  const auto g = fixtures::icosahedron();
  const auto f = some_coloring(g);
  for (auto op : {WheelOp::e2wo, WheelOp::e3wo, WheelOp::e4wo, WheelOp::e5wo}) {
    const int added = (op == WheelOp::e4wo || op == WheelOp::e5wo) ? 2 : 1;
    for (const auto& site : extension_sites(g, op)) {
      const auto app = apply_wheel_op(op, g, f, site);
      CHECK(app.after.vertex_count() == g.vertex_count() + added);
      for (int fc = 0; fc < app.after.face_count(); ++fc) CHECK(app.after.face(fc).size() == 3);
      CHECK(app.after.degree(app.center) == (op == WheelOp::e2wo ? 2 : op == WheelOp::e3wo ? 3 : op == WheelOp::e4wo ? 4 : 5));
      if (op != WheelOp::e2wo) CHECK(validate_mpg(app.after).is_mpg);
      if (app.pending.empty()) CHECK(is_proper(app.after, app.coloring_after));
    }
  }
}

TEST_CASE("contracting undoes extending on every site of small triangulations") {
  for (const auto& g : corpus(7)) {
    const auto base = canonical_form(g);
    for (auto op : {WheelOp::e2wo, WheelOp::e3wo, WheelOp::e4wo, WheelOp::e5wo})
      for (const auto& site : extension_sites(g, op)) {
        const auto up = apply_wheel_op(op, g, {}, site);
        const auto down = apply_wheel_op(inverse_op(op), up.after, {}, inverse_site(up));
        CHECK(canonical_form(down.after) == base);
      }
  }
}

TEST_CASE("e2wo colors the center with the least free color") {
  const auto g = fixtures::k4();
  const Coloring f(std::vector<Color>{1, 2, 3, 4});
  const auto app = e2wo(g, f, 0, 1);
  CHECK(app.after.has_parallel_edges());
  CHECK(app.coloring_after[app.center] == 3);
  const auto back = c2wo(app.after, app.coloring_after, app.center);
  CHECK(canonical_form(back.after) == canonical_form(g));
  CHECK(back.coloring_after == f);
}

TEST_CASE("e3wo forces the fourth color") {
  const auto g = fixtures::k4();
  const Coloring f(std::vector<Color>{1, 2, 3, 4});
  const auto face = g.face_vertices(0);
  const auto app = e3wo(g, f, face[0], face[1], face[2]);
  std::vector<Color> used{f[face[0]], f[face[1]], f[face[2]]};
  CHECK(std::find(used.begin(), used.end(), app.coloring_after[app.center]) == used.end());
  CHECK(validate_mpg(app.after).is_mpg);
  CHECK(app.after.vertex_count() == 5);
}

TEST_CASE("wrong sites are rejected") {
  const auto g = fixtures::icosahedron();
  CHECK_THROWS_AS(c3wo(g, {}, 0), PreconditionError);
  CHECK_THROWS_AS(c2wo(g, {}, 0), PreconditionError);
  const auto up = e3wo(fixtures::k4(), {}, 0, 1, 2);
  CHECK_THROWS_AS(c2wo(up.after, {}, up.center), PreconditionError);
  CHECK_THROWS_AS(e4wo(g, {}, 1, 0, 1), PreconditionError);
}

TEST_CASE("e4wo copies the split color and c4wo demands equal colors") {
  const auto g = fixtures::octahedron();
  const auto f = some_coloring(g);
  const auto app = e4wo(g, f, 0, 4, 2);
  const auto [v2, v2b] = *app.contracted;
  CHECK(app.coloring_after[v2] == app.coloring_after[v2b]);
  CHECK(is_proper(app.after, app.coloring_after));
  Coloring bad = app.coloring_after;
  for (Color c = 1; c <= 4; ++c)
    if (c != bad[v2] && c != bad[app.center]) {
      bad[v2b] = c;
      break;
    }
  CHECK_THROWS_AS(c4wo(app.after, bad, app.center, v2, v2b), PreconditionError);
}

TEST_CASE("e4wo with an empty right side gives the copy degree 3") {
  const auto g = fixtures::icosahedron();
  const HalfEdge h = g.first_half_edge(0);
  const Vertex v3 = g.target(h), v1 = g.target(g.next_cw(h));
  const auto app = e4wo(g, {}, v1, 0, v3);
  CHECK(app.after.degree(app.contracted->second) == 3);
}

TEST_CASE("e5wo leaves the center pending when its rim uses four colors") {
  const auto g = fixtures::icosahedron();
  bool saw_pending = false, saw_colored = false;
  for (const auto& f : enumerate_colorings(g))
    for (const auto& s : extension_sites(g, WheelOp::e5wo)) {
      const auto app = e5wo(g, f, s[0], s[1], s[2], s[3]);
      CHECK(app.after.degree(app.center) == 5);
      if (app.pending.empty()) {
        saw_colored = true;
        CHECK(is_proper(app.after, app.coloring_after));
      } else {
        saw_pending = true;
        CHECK(app.pending == std::vector<Vertex>{app.center});
      }
    }
  CHECK(saw_pending);
  CHECK(saw_colored);
}

TEST_CASE("vertex split is the inverse of edge contraction") {
  const auto g = fixtures::octahedron();
  const auto out = split_vertex(g, 4, 0, 2);
  CHECK(validate_mpg(out).is_mpg);
  CHECK(out.vertex_count() == 7);
  CHECK(out.adjacent(4, 6));
  CHECK(out.adjacent(6, 0));
  CHECK(out.adjacent(6, 2));
}
