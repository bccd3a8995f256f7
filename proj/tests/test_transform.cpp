#include <set>

#include "doctest.h"
#include "mpg/base_module.hpp"
#include "mpg/errors.hpp"
#include "mpg/fixtures.hpp"
#include "mpg/generator.hpp"
#include "mpg/transform.hpp"
#include "oracles.hpp"

using namespace mpg;

namespace {

const GenerationRun& delta5_run() {
  static const GenerationRun run = generate({.max_order = 16, .min_degree = 5});
  return run;
}

}  // namespace

TEST_CASE("Wernicke and Borodin configurations") {
  const auto ico = fixtures::icosahedron();
  const auto cfg = find_wernicke_config(ico);
  CHECK(cfg.kind == 55);
  CHECK(cfg.center == 0);
  CHECK(borodin_config_scan(ico) == std::set<int>{555});
  CHECK_THROWS_AS(find_wernicke_config(fixtures::octahedron()), PreconditionError);
  CHECK_THROWS_AS(borodin_config_scan(fixtures::octahedron()), PreconditionError);
  for (const auto& g : delta5_run().all()) {
    const auto c = find_wernicke_config(g);
    CHECK(g.degree(c.center) == 5);
    CHECK(g.adjacent(c.center, c.neighbor));
    CHECK_FALSE(borodin_config_scan(g).empty());
  }
}

TEST_CASE("each rotation step frees a color or moves the 2-path center two places back") {
  std::vector<PlaneGraph> graphs{fixtures::icosahedron()};
  for (const auto& g : delta5_run().by_order.at(14)) graphs.push_back(g);
  int moved = 0, freed = 0;
  for (const auto& g : graphs) {
    const Vertex v = find_wernicke_config(g).center;
    const auto rim = link_cycle(g, v);
    auto adj = g.adjacency();
    for (auto& row : adj) std::erase(row, v);
    adj[v].clear();
    for_each_coloring(adj, Coloring(g.vertex_count()), [&](const Coloring& h) {
      Coloring f = h;
      f[v] = kUncolored;
      if (colors_on(f, rim).size() != kColors) return true;
      for (int k = 0; k < 5; ++k) {
        const Vertex c = *bichromatic_center(g, v, f);
        const auto step = rotation_step(g, v, f);
        CHECK(is_proper_partial(g, step.after));
        CHECK(step.after[v] == kUncolored);
        CHECK(oracle::count_components(oracle::adjacency(g), {f.colors.begin(), f.colors.end()},
                                       step.pair.first, step.pair.second) > 1);
        if (step.three_colored) {
          CHECK(colors_on(step.after, rim).size() == 3);
          ++freed;
          return true;
        }
        const auto i = std::find(rim.begin(), rim.end(), c) - rim.begin();
        CHECK(bichromatic_center(g, v, step.after) == rim[(i + 3) % 5]);
        ++moved;
        f = step.after;
      }
      return true;
    });
  }
  CHECK(freed > 0);
  CHECK(moved > 0);
}

TEST_CASE("decycle finds colorings with v2 and v4 apart") {
  std::set<DecycleRule> rules;
  for (const auto& m : quad_smpg_corpus(9)) {
    const auto s = smpg_view(m);
    const auto c = quad_corners(s);
    auto adj = oracle::adjacency(s.graph);
    adj[c[1]].push_back(c[3]);
    adj[c[3]].push_back(c[1]);
    const bool exists = oracle::count_colorings(adj) > 0;
    for (const auto& f : f2_colorings(s)) {
      const auto r = decycle(s, f, c[1], c[3]);
      CHECK(exists);
      CHECK(is_proper(s.graph, r.f));
      CHECK(r.f[c[1]] != r.f[c[3]]);
      if (classify_f2(s, f) != F2Class::shared_on_24) CHECK(r.rule == DecycleRule::swap);
      rules.insert(r.rule);
    }
  }
  CHECK(rules.count(DecycleRule::swap));
  CHECK(rules.size() > 1);
}

TEST_CASE("identity module has a decycle coloring") {
  const auto s = smpg_view(fixtures::b4_module());
  const auto c = quad_corners(s);
  for (const auto& f : f2_colorings(s)) {
    const auto r = decycle(s, f, c[1], c[3]);
    CHECK(r.f[c[1]] != r.f[c[3]]);
    const auto q = decycle(s, f, c[0], c[2]);
    CHECK(q.f[c[0]] != q.f[c[2]]);
  }
}

TEST_CASE("pipeline on the icosahedron") {
  const auto g = fixtures::icosahedron();
  const auto t = transform(g);
  CHECK(is_proper(g, t.output));
  CHECK(replay(t) == t.output);
  CHECK(t.steps.front().kind == "config_found");
  CHECK(t.steps.back().kind != "config_found");
}

TEST_CASE("extracted module has the expected degrees") {
  for (const auto& g : delta5_run().all()) {
    const auto t = transform(g);
    const auto cfg = find_wernicke_config(g);
    for (const auto& s : t.steps)
      if (s.kind == "module_extracted") {
        const auto c4 = s.payload["c4"].get<std::vector<Vertex>>();
        CHECK(c4[1] == cfg.center);
        CHECK(c4[2] == cfg.neighbor);
      }
  }
}

TEST_CASE("pipeline colors every minimum degree 5 MPG and traces replay") {
  for (const auto& g : delta5_run().all()) {
    const auto t = transform(g);
    CHECK(is_proper(g, t.output));
    const auto j = t.to_json();
    const auto back = TransformTrace::from_json(j);
    CHECK(back.to_json().dump() == j.dump());
    CHECK(replay(back) == t.output);
    CHECK(transform(g).to_json().dump() == j.dump());
  }
}

TEST_CASE("pipeline rejects minimum degree 4") {
  CHECK_THROWS_AS(transform(fixtures::octahedron()), PreconditionError);
}

TEST_CASE("malformed traces fail replay") {
  const auto t = transform(fixtures::icosahedron());
  auto j = t.to_json();
  j["steps"].push_back({{"kind", "bogus"}, {"payload", nlohmann::json::object()}});
  CHECK_THROWS_AS(replay(TransformTrace::from_json(j)), PreconditionError);
  j = t.to_json();
  j["steps"][0]["payload"]["coloring"][1] = j["steps"][0]["payload"]["coloring"][2];
  CHECK_THROWS(replay(TransformTrace::from_json(j)));
}
