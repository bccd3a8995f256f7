#include "doctest.h"
#include "mpg/errors.hpp"
#include "mpg/fixtures.hpp"
#include "mpg/generator.hpp"
#include "mpg/ubcycle.hpp"

using namespace mpg;

namespace {

const GenerationRun& delta4_run() {
  static const GenerationRun run = generate({.max_order = 11, .min_degree = 4});
  return run;
}

}  // namespace

TEST_CASE("order-8 fixture is a tree-type UBCMPG on its outer 4-cycle") {
  const auto g = fixtures::ubc_order8();
  const auto r = classify_ubcmpg(g);
  CHECK(r.colorings.size() == 3);
  CHECK(r.type == UbcType::tree);
  CHECK(r.count(ColoringClass::tree) == 1);
  CHECK(r.count(ColoringClass::ubc) == 2);
  const std::vector<Vertex> quad{0, 1, 2, 3};
  bool found = false;
  for (std::size_t i = 0; i < r.colorings.size(); ++i)
    if (r.coloring_class[i] == ColoringClass::ubc) {
      CHECK(is_ub_cycle(g, r.colorings[i], quad));
      for (const auto& c : r.ub_cycles[i]) found |= c.vertices == normalize_cycle(quad);
    }
  CHECK(found);
}

TEST_CASE("icosahedron and octahedron are not UBCMPGs") {
  CHECK(classify_ubcmpg(fixtures::icosahedron()).type == UbcType::not_ubcmpg);
  CHECK(classify_ubcmpg(fixtures::octahedron()).type == UbcType::not_ubcmpg);
  CHECK_THROWS_AS(classify_ubcmpg(fixtures::k4()), PreconditionError);
}

TEST_CASE("definition and criterion agree on every bichromatic cycle") {
  for (const auto& [order, graphs] : delta4_run().by_order)
    for (const auto& g : graphs)
      for (const auto& k : kempe_partition(g, true))
        for (const auto& m : k.members)
          for (const auto& c : bichromatic_cycles(g, m))
            CHECK(is_ub_cycle(g, k, c.vertices) == is_ub_cycle_by_criterion(g, k, c.vertices));
}

TEST_CASE("UB-cycles avoid vertices of degree below 5 and no pure type occurs") {
  for (const auto& [order, graphs] : delta4_run().by_order)
    for (const auto& g : graphs) {
      const auto r = classify_ubcmpg(g);
      CHECK(r.type != UbcType::pure);
      for (const auto& cs : r.ub_cycles)
        for (const auto& c : cs)
          for (Vertex v : c.vertices) CHECK(g.degree(v) >= 5);
    }
}

TEST_CASE("crossing cycles") {
  const auto g = fixtures::octahedron();
  // Octahedron: poles 4 and 5 around the equator 0-1-2-3.
  const auto equator = cycle_sides(g, std::vector<Vertex>{0, 1, 2, 3});
  const auto meridian = cycle_sides(g, std::vector<Vertex>{0, 4, 2, 5});
  const auto triangle = cycle_sides(g, std::vector<Vertex>{0, 1, 4});
  CHECK(cycles_intersect(equator, meridian));
  CHECK_FALSE(cycles_intersect(equator, triangle));
}
