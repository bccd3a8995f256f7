#include "doctest.h"
#include "mpg/errors.hpp"
#include "mpg/fixtures.hpp"
#include "mpg/kempe.hpp"
#include "oracles.hpp"

using namespace mpg;

namespace {

std::vector<int> as_ints(const Coloring& f) { return {f.colors.begin(), f.colors.end()}; }

std::vector<PlaneGraph> small_corpus() {
  std::vector<PlaneGraph> out;
  for (int n = 4; n <= 8; ++n)
    for (const auto& faces : oracle::triangulations(n)) out.push_back(PlaneGraph::from_faces(n, faces));
  out.push_back(fixtures::icosahedron());
  return out;
}

}  // namespace

TEST_CASE("coloring counts of named graphs") {
  CHECK(enumerate_colorings(fixtures::k4()).size() == 1);
  CHECK(enumerate_colorings(fixtures::octahedron()).size() == 4);
  CHECK(enumerate_colorings(fixtures::icosahedron()).size() == 10);
  CHECK(enumerate_colorings(fixtures::ubc_order8()).size() == 3);
}

TEST_CASE("enumeration matches brute force and every coloring is proper and canonical") {
  for (const auto& g : small_corpus()) {
    if (g.vertex_count() > 10) continue;
    const auto all = enumerate_colorings(g);
    CHECK(static_cast<long>(all.size()) == oracle::count_colorings(g.adjacency()));
    for (const auto& f : all) {
      CHECK(is_proper(g, f));
      CHECK(canonicalize(f) == f);
    }
  }
}

TEST_CASE("canonicalize picks the least of the 24 relabellings") {
  const auto g = fixtures::icosahedron();
  for (const auto& f : enumerate_colorings(g)) {
    std::vector<Color> perm{1, 2, 3, 4};
    do {
      Coloring p = f;
      for (auto& c : p.colors) c = perm[c - 1];
      CHECK(canonicalize(p) == f);
      CHECK_FALSE(p < f);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("ij-component counts agree with union-find") {
  for (const auto& g : small_corpus())
    for (const auto& f : enumerate_colorings(g))
      for (const auto& p : all_color_pairs())
        CHECK(omega(g, f, p.first, p.second) ==
              oracle::count_components(g.adjacency(), as_ints(f), p.first, p.second));
}

TEST_CASE("bichromatic cycles agree with edge-subset enumeration") {
  for (const auto& g : small_corpus())
    for (const auto& f : enumerate_colorings(g)) {
      std::set<std::vector<int>> ours;
      for (const auto& c : bichromatic_cycles(g, f)) {
        CHECK(colors_on(f, c.vertices).size() == 2);
        std::vector<int> s(c.vertices.begin(), c.vertices.end());
        std::sort(s.begin(), s.end());
        ours.insert(s);
      }
      CHECK(ours == oracle::bichromatic_cycle_sets(g.adjacency(), as_ints(f)));
    }
}

TEST_CASE("K-change keeps colorings proper and is an involution on the component") {
  for (const auto& g : small_corpus())
    for (const auto& f : enumerate_colorings(g))
      for (const auto& p : all_color_pairs()) {
        const auto comps = ij_components(g, f, p.first, p.second);
        for (const auto& c : comps) {
          if (comps.size() < 2) {
            CHECK_THROWS_AS(kempe_change(g, f, c), PreconditionError);
            continue;
          }
          const auto h = kempe_change(g, f, c);
          CHECK(is_proper(g, h));
          CHECK(swap_component(g, h, p.first, p.second, c.vertices.front()) == f);
        }
      }
}

TEST_CASE("sigma-operation swaps the complementary pair inside the cycle") {
  const auto g = fixtures::ubc_order8();
  for (const auto& f : enumerate_colorings(g))
    for (const auto& c : bichromatic_cycles(g, f)) {
      const auto h = sigma_operation(g, f, c.vertices);
      CHECK(is_proper(g, h));
      const auto sides = cycle_sides(g, c.vertices);
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!sides.has_in_interior(v)) CHECK(h[v] == f[v]);
    }
}

TEST_CASE("Kempe partition matches the union-find oracle") {
  for (const auto& g : small_corpus()) {
    const auto parts = kempe_partition(g);
    std::size_t total = 0;
    for (const auto& k : parts) total += k.members.size();
    CHECK(total == enumerate_colorings(g).size());
    CHECK(static_cast<int>(parts.size()) == oracle::count_kempe_classes(g.adjacency()));
  }
  CHECK(kempe_partition(fixtures::ubc_order8()).size() == 2);
}
