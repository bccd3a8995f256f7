#include <sstream>

#include "doctest.h"
#include "mpg/errors.hpp"
#include "mpg/fixtures.hpp"
#include "mpg/rot_io.hpp"
#include "oracles.hpp"

using namespace mpg;

TEST_CASE("fixtures are maximal planar") {
  for (const auto& g : {fixtures::k4(), fixtures::octahedron(), fixtures::icosahedron(), fixtures::ubc_order8()}) {
    const auto c = validate_mpg(g);
    CHECK(c.is_mpg);
    CHECK(g.edge_count() == 3 * g.vertex_count() - 6);
    CHECK(g.face_count() == 2 * g.vertex_count() - 4);
  }
  CHECK(validate_mpg(fixtures::icosahedron()).min_degree == 5);
  const auto o8 = fixtures::ubc_order8();
  int fours = 0, fives = 0;
  for (int v = 0; v < 8; ++v) (o8.degree(v) == 4 ? fours : fives) += 1;
  CHECK(fours == 4);
  CHECK(fives == 4);
}

TEST_CASE("every half-edge lies on exactly one face") {
  const auto g = fixtures::icosahedron();
  std::vector<int> hits(g.half_edge_count(), 0);
  for (int f = 0; f < g.face_count(); ++f)
    for (auto h : g.face(f)) ++hits[h];
  for (int x : hits) CHECK(x == 1);
  for (int h = 0; h < g.half_edge_count(); ++h) {
    CHECK(g.twin(g.twin(h)) == h);
    CHECK(g.prev_cw(g.next_cw(h)) == h);
    CHECK(g.origin(g.next_cw(h)) == g.origin(h));
  }
}

TEST_CASE("rot text round-trips") {
  const auto g = fixtures::ubc_order8();
  const auto text = format_rot(g);
  const auto back = parse_rot(text);
  CHECK(format_rot(back) == text);
  CHECK(canonical_form(back) == canonical_form(g));
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_rot("3\n1: 2 3\n2: 3 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_rot(""), ParseError);
}

TEST_CASE("a bare path is not an MPG") {
  const auto g = PlaneGraph::from_rotations({{1}, {0, 2}, {1}});
  CHECK_FALSE(validate_mpg(g).is_mpg);
}

TEST_CASE("SMPG view of the inner module") {
  const auto b4 = fixtures::b4_module();
  const auto view = smpg_view(b4);
  CHECK(view.outer_cycle.vertices.size() == 4);
  CHECK(view.outer_cycle.interior.size() == 2);
  CHECK(validate_smpg(b4, view.outer_cycle.vertices));
  CHECK_FALSE(validate_mpg(b4).is_mpg);
}

TEST_CASE("cycle sides of the separating 4-cycle") {
  const auto g = fixtures::ubc_order8();
  const std::vector<Vertex> c{0, 1, 2, 3};
  const auto s = cycle_sides(g, c);
  CHECK(s.interior.size() + s.exterior.size() == 4);
  CHECK(s.interior.size() == 2);
  CHECK_THROWS_AS(cycle_sides(g, std::vector<Vertex>{0, 2, 1, 4}), PreconditionError);
}

TEST_CASE("canonical form is invariant under relabelling, mirroring and outer face") {
  const auto g = fixtures::ubc_order8();
  const auto base = canonical_form(g);
  CHECK(canonical_form(g.mirrored()) == base);
  for (int f = 0; f < g.face_count(); ++f) CHECK(canonical_form(g.with_outer_face(f)) == base);
  // relabel by reversing ids
  std::vector<std::vector<Vertex>> rot(8);
  for (int v = 0; v < 8; ++v)
    for (auto w : g.cw_neighbors(v)) rot[7 - v].push_back(7 - w);
  CHECK(canonical_form(PlaneGraph::from_rotations(rot)) == base);
  CHECK(canonical_form(fixtures::icosahedron()) != base);
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
  for (int n = 4; n <= 8; ++n) {
    const auto reps = oracle::triangulations(n);
    std::set<std::string> forms;
    for (const auto& faces : reps) forms.insert(canonical_form(PlaneGraph::from_faces(n, faces)));
    CHECK(forms.size() == reps.size());
  }
}

TEST_CASE("parallel edges are paired into a sphere embedding") {
  // Two vertices joined by two edges, plus a vertex inside one digon.
  const auto g = PlaneGraph::from_rotations({{1, 2, 1}, {0, 0, 2}, {0, 1}});
  CHECK(g.has_parallel_edges());
  CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2);
}

TEST_CASE("rotation editor can subdivide an edge") {
  const auto g = fixtures::k4();
  RotationEditor ed(g);
  const Vertex x = ed.add_vertex();
  const HalfEdge h = ed.find(0, 1);
  const HalfEdge at0 = ed.prev_cw(h), at1 = ed.prev_cw(ed.twin(h));
  ed.remove_edge(h);
  CHECK(ed.find(0, 1) == kNone);
  const HalfEdge a = ed.add_edge(0, at0, x, kNone);
  ed.add_edge(1, at1, x, ed.twin(a));
  const auto out = ed.build(a);
  CHECK(out.vertex_count() == 5);
  CHECK(out.edge_count() == 7);
  CHECK(out.degree(4) == 2);
}

TEST_CASE("a misplaced edge end is rejected") {
  RotationEditor ed(fixtures::k4());
  const HalfEdge h = ed.find(0, 1);
  const HalfEdge wrong = ed.next_cw(ed.twin(h));
  ed.move_half_edge(ed.twin(h), 1, wrong);
  CHECK_THROWS_AS(ed.build(h), PreconditionError);
}

TEST_CASE("canonical graph is a fixed representative") {
  const auto g = fixtures::ubc_order8();
  const auto c = canonical_graph(g);
  CHECK(canonical_form(c) == canonical_form(g));
  CHECK(format_rot(canonical_graph(g.mirrored())) == format_rot(c));
  CHECK(format_rot(canonical_graph(c)) == format_rot(c));
}
