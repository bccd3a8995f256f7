#include "doctest.h"
#include "mpg/base_module.hpp"
#include "mpg/errors.hpp"
#include "mpg/fixtures.hpp"
#include "mpg/generator.hpp"
#include "mpg/rot_io.hpp"
#include "oracles.hpp"

using namespace mpg;

TEST_CASE("identity module is a tree-type base module shared on its 13 corners") {
  const auto s = smpg_view(fixtures::b4_module());
  const auto r = analyze_base_module(s);
  REQUIRE(r.is_4_base_module);
  const auto c = r.corners;
  CHECK(r.shared_pair == std::pair{c[0], c[2]});
  CHECK(r.kind == ModuleKind::tree);
  CHECK(r.path_kind == PathKind::none);
  for (const auto& f : r.module_colorings) {
    const auto p = endpoint_paths(s, f);
    CHECK(p[0].nonempty);
    CHECK(p[1].nonempty);
    CHECK_FALSE(p[2].nonempty);
    CHECK_FALSE(p[3].nonempty);
    CHECK(p[0].paths.size() == 1);
    CHECK(p[1].paths.size() == 1);
  }
}

TEST_CASE("F2 colorings are normalized and exactly two endpoint families are nonempty") {
  for (const auto& m : quad_smpg_corpus(9)) {
    const auto s = smpg_view(m);
    const auto c = quad_corners(s);
    for (const auto& f : f2_colorings(s)) {
      CHECK(f[c[0]] == 1);
      CHECK(f[c[2]] == 1);
      CHECK(f[c[1]] == 2);
      CHECK(f[c[3]] == 2);
      CHECK(is_proper(s.graph, f));
      const auto p = endpoint_paths(s, f, 0);
      const int nonempty = p[0].nonempty + p[1].nonempty + p[2].nonempty + p[3].nonempty;
      CHECK(nonempty == 2);
      // Planar duality: a 13-path blocks the 24-path and vice versa.
      CHECK(p[0].nonempty != p[3].nonempty);
      CHECK(p[1].nonempty != p[2].nonempty);
      CHECK_NOTHROW(classify_f2(s, f));
    }
  }
}

TEST_CASE("two identity modules glue to the order-8 UBCMPG") {
  const auto s = smpg_view(fixtures::b4_module());
  const auto r = is_4_base_module(s);
  const auto u = glue_identity_module(r);
  REQUIRE(u);
  CHECK(u->vertex_count() == 8);
  CHECK(oracle::isomorphic(oracle::adjacency(*u), oracle::adjacency(fixtures::ubc_order8())));
  const auto corners = quad_corners(s);
  CHECK(is_ubcmpg_wrt(*u, corners));
}

TEST_CASE("gluing with a chord on both sides fails") {
  // Two triangles split by the 0-2 chord on each side would double that edge.
  const auto chord = PlaneGraph::from_faces(4, {{0, 3, 2, 1}, {0, 1, 2}, {0, 2, 3}}, 0);
  const auto s = smpg_view(chord);
  CHECK_FALSE(glue(s, s, 0, false));
}

TEST_CASE("a module without a base coloring class has no report details") {
  const auto chord = PlaneGraph::from_faces(4, {{0, 3, 2, 1}, {0, 1, 2}, {0, 2, 3}}, 0);
  const auto s = smpg_view(chord);
  CHECK(f2_colorings(s).empty());
  const auto r = analyze_base_module(s);
  CHECK_FALSE(r.is_4_base_module);
  CHECK(r.kind == ModuleKind::none);
}

TEST_CASE("positive verdicts glue to UBCMPGs") {
  int positives = 0;
  for (const auto& m : quad_smpg_corpus(9, 4)) {
    const auto s = smpg_view(m);
    const auto r = is_4_base_module(s);
    if (!r.is_4_base_module) continue;
    ++positives;
    const auto u = glue_identity_module(r);
    REQUIRE(u);
    CHECK(is_ubcmpg_wrt(*u, quad_corners(s)));
  }
  CHECK(positives > 0);
}

TEST_CASE("a non-base module with a UBCMPG mate at 11 vertices") {
  // Every coloring of this module lies in one Kempe class that holds both a
  // cross and a shared coloring, yet gluing a 2-vertex mate gives a UBCMPG
  // with respect to the outer 4-cycle. Both facts are rechecked by the oracle.
  const auto g = parse_rot(R"(11
1: 2 3 4
2: 1 4 5 3
3: 1 2 5 6 7
4: 1 7 8 5 2
5: 2 4 8 9 6 3
6: 3 5 9 10 7
7: 3 6 10 11 8 4
8: 4 7 11 9 5
9: 5 8 11 10 6
10: 6 9 11 7
11: 7 10 9 8
outer: 1 4 7 3
)");
  const auto s = smpg_view(g);
  const auto c = quad_corners(s);
  CHECK_FALSE(is_4_base_module(s).is_4_base_module);
  CHECK(oracle::count_kempe_classes(oracle::adjacency(s.graph)) == 1);
  const auto u = find_mate(s, 2);
  REQUIRE(u);
  bool ub = false;
  for (const auto& cls : oracle::kempe_classes(oracle::adjacency(*u))) {
    bool all = true;
    for (const auto& f : cls) all &= f[c[0]] == f[c[2]] && f[c[1]] == f[c[3]];
    ub |= all;
  }
  CHECK(ub);
}
