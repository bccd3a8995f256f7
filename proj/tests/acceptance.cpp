// Runs the twelve acceptance checks and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "mpg/base_module.hpp"
#include "mpg/ce_ops.hpp"
#include "mpg/errors.hpp"
#include "mpg/fixtures.hpp"
#include "mpg/generator.hpp"
#include "mpg/transform.hpp"
#include "mpg/ubcycle.hpp"
#include "oracles.hpp"

using namespace mpg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void check(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const TheoremAlarm& e) {
    o = {false, std::string("alarm: ") + e.what()};
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s > limit_s) {
    o.pass = false;
    o.detail += "; over the time limit";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), s);
  std::fflush(stdout);
}

std::string str(std::size_t n) { return std::to_string(n); }

const GenerationRun& delta4_run() {
  static const GenerationRun run = generate({.max_order = 14, .min_degree = 4});
  return run;
}

const ScanResult& delta4_scan() {
  static const ScanResult scan = ubcmpg_scan(delta4_run());
  return scan;
}

const GenerationRun& delta5_run() {
  static const GenerationRun run = generate({.max_order = 16, .min_degree = 5});
  return run;
}

}  // namespace

int main() {
  check(1, "icosahedron coloring count", 1.0, [] {
    const auto n = enumerate_colorings(fixtures::icosahedron()).size();
    return Outcome{n == 10, str(n) + " colorings"};
  });

  check(2, "order-8 UBCMPG fixture", 1.0, [] {
    const auto g = fixtures::ubc_order8();
    const auto r = classify_ubcmpg(g);
    std::map<int, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < r.colorings.size(); ++i) classes[r.kempe_class_of[i]].push_back(i);
    std::multiset<std::size_t> sizes;
    bool ubc_together = true, quad_ub = true;
    for (const auto& [k, members] : classes) {
      sizes.insert(members.size());
      if (members.size() == 2)
        for (std::size_t i : members) {
          ubc_together &= r.coloring_class[i] == ColoringClass::ubc;
          quad_ub &= is_ub_cycle(g, r.colorings[i], std::vector<Vertex>{0, 1, 2, 3});
        }
    }
    const bool ok = r.colorings.size() == 3 && sizes == std::multiset<std::size_t>{1, 2} && ubc_together &&
                    quad_ub && r.type == UbcType::tree && r.count(ColoringClass::tree) == 1;
    return Outcome{ok, str(r.colorings.size()) + " colorings, class sizes 2+1, C4 unchanged in the pair, type " +
                           to_string(r.type) + ", " + str(r.count(ColoringClass::tree)) + " tree-coloring"};
  });

  check(3, "tree-type counting law at orders 8 and 12", 5.0, [] {
    const auto r8 = classify_ubcmpg(fixtures::ubc_order8());
    const bool ok8 = r8.type == UbcType::tree && r8.colorings.size() == 3 && r8.count(ColoringClass::tree) == 1;
    const auto run = generate({.max_order = 12, .min_degree = 4});
    int hits = 0;
    for (const auto& g : run.by_order.at(12)) {
      const auto r = classify_ubcmpg(g);
      hits += r.type == UbcType::tree && r.colorings.size() == 6 && r.count(ColoringClass::tree) == 2 &&
              r.count(ColoringClass::ubc) == 4;
    }
    return Outcome{ok8 && hits > 0, std::string("order 8: ") + (ok8 ? "3/1" : "mismatch") + "; order 12: " +
                                        std::to_string(hits) + " tree-type graphs with 6 colorings, 2 tree"};
  });

  check(4, "endpoint-path duality on quad SMPGs up to 12 vertices", 600.0, [] {
    const auto corpus = quad_smpg_corpus(12);
    std::size_t colorings = 0, bad = 0;
    for (const auto& m : corpus) {
      const auto s = smpg_view(m);
      for (const auto& f : f2_colorings(s)) {
        ++colorings;
        const auto p = endpoint_paths(s, f, 0);
        const int k = p[0].nonempty + p[1].nonempty + p[2].nonempty + p[3].nonempty;
        bad += k != 2 || p[0].nonempty == p[3].nonempty || p[1].nonempty == p[2].nonempty;
      }
    }
    return Outcome{bad == 0, str(corpus.size()) + " SMPGs, " + str(colorings) + " F2 colorings, " + str(bad) +
                                 " violations"};
  });

  check(5, "definition and criterion agree on UB-cycles up to order 12", 1800.0, [] {
    std::size_t cycles = 0, bad = 0, graphs = 0;
    for (const auto& [order, gs] : delta4_run().by_order) {
      if (order > 12) break;
      for (const auto& g : gs) {
        ++graphs;
        for (const auto& k : kempe_partition(g, true))
          for (const auto& m : k.members)
            for (const auto& c : bichromatic_cycles(g, m)) {
              ++cycles;
              bad += is_ub_cycle(g, k, c.vertices) != is_ub_cycle_by_criterion(g, k, c.vertices);
            }
      }
    }
    return Outcome{bad == 0, str(graphs) + " graphs, " + str(cycles) + " cycles, " + str(bad) + " disagreements"};
  });

  check(6, "UB-cycles avoid degree below 5", 0, [] {
    std::size_t cycles = 0, bad = 0;
    for (const auto& e : delta4_scan().ubcmpgs)
      for (const auto& cs : e.report.ub_cycles)
        for (const auto& c : cs) {
          ++cycles;
          for (Vertex v : c.vertices) bad += e.graph.degree(v) < 5;
        }
    return Outcome{bad == 0, str(delta4_scan().scanned) + " graphs to order 14, " + str(cycles) +
                                 " UB-cycle occurrences, " + str(bad) + " violations"};
  });

  auto base_module_consistency = [](int max_vertices, std::size_t& positives, std::size_t& negatives) {
    std::size_t bad = 0;
    for (const auto& m : quad_smpg_corpus(max_vertices, 4)) {
      const auto s = smpg_view(m);
      const auto r = is_4_base_module(s);
      if (r.is_4_base_module) {
        ++positives;
        const auto u = glue_identity_module(r);
        bad += !u || !is_ubcmpg_wrt(*u, quad_corners(s));
      } else {
        ++negatives;
        bad += find_mate(s, 2).has_value();
      }
    }
    return bad;
  };

  check(7, "base-module verdicts agree with gluing up to 10 vertices", 0, [&] {
    std::size_t pos = 0, neg = 0;
    const auto bad = base_module_consistency(10, pos, neg);
    return Outcome{bad == 0, str(pos) + " positive, " + str(neg) + " negative, " + str(bad) + " inconsistencies"};
  });
  {
    std::size_t pos = 0, neg = 0;
    const auto bad = base_module_consistency(11, pos, neg);
    std::printf("INFO    same check at 11 vertices: %zu positive, %zu negative, %zu inconsistencies\n", pos, neg, bad);
  }

  check(8, "wheel operator round trips up to order 9", 300.0, [] {
    const auto run = generate({.max_order = 9});
    std::size_t trips = 0, bad = 0;
    for (const auto& g : run.all()) {
      const auto form = canonical_form(g);
      for (WheelOp op : {WheelOp::e2wo, WheelOp::e3wo, WheelOp::e4wo, WheelOp::e5wo})
        for (const auto& site : extension_sites(g, op)) {
          ++trips;
          const auto app = apply_wheel_op(op, g, {}, site);
          const auto back = apply_wheel_op(inverse_op(op), app.after, {}, inverse_site(app));
          bad += canonical_form(back.after) != form;
        }
    }
    return Outcome{bad == 0, str(run.all().size()) + " graphs, " + str(trips) + " round trips, " + str(bad) +
                                 " failures"};
  });

  check(9, "Wernicke and Borodin configurations at minimum degree 5", 0, [] {
    std::size_t graphs = 0, bad = 0;
    for (const auto& g : delta5_run().all()) {
      ++graphs;
      const auto cfg = find_wernicke_config(g);
      bad += cfg.kind != 55 && cfg.kind != 56;
      bad += borodin_config_scan(g).empty();
    }
    return Outcome{bad == 0 && graphs > 0, str(graphs) + " graphs of order 12 to 16, " + str(bad) + " misses"};
  });

  check(10, "module-extraction pipeline colors minimum degree 5 MPGs", 3600.0, [] {
    std::size_t graphs = 0, bad = 0;
    std::map<std::string, int> rules;
    for (const auto& g : delta5_run().all()) {
      ++graphs;
      const auto t = transform(g);
      std::string rule = "direct";
      for (const auto& s : t.steps)
        if (s.kind == "decycle") rule = s.payload.at("rule").get<std::string>();
      ++rules[rule];
      bad += !is_proper(g, t.output) || replay(t) != t.output;
    }
    std::string detail = str(graphs) + " graphs, " + str(bad) + " failures, 0 alarms; endings:";
    for (const auto& [r, n] : rules) detail += " " + r + "=" + std::to_string(n);
    return Outcome{bad == 0 && graphs > 0, detail};
  });

  check(11, "wheel-operator generation matches the flip-graph oracle, orders 4 to 10", 0, [] {
    const auto run = generate({.max_order = 10, .method = GenMethod::ce});
    std::string detail;
    bool ok = run.complete;
    for (int n = 4; n <= 10; ++n) {
      const auto expected = oracle::triangulations(n);
      std::set<std::string> forms;
      for (const auto& faces : expected) forms.insert(canonical_form(PlaneGraph::from_faces(n, faces)));
      std::set<std::string> got;
      for (const auto& g : run.by_order.at(n)) got.insert(canonical_form(g));
      ok &= run.count(n) == expected.size() && got == forms;
      detail += (n > 4 ? " " : "") + str(run.count(n)) + "/" + str(expected.size());
    }
    return Outcome{ok, "generated/oracle per order: " + detail};
  });

  check(12, "no pure-type UBCMPG up to order 14", 0, [] {
    std::map<UbcType, std::size_t> totals;
    for (const auto& e : delta4_scan().ubcmpgs) ++totals[e.report.type];
    std::string detail = str(delta4_scan().scanned) + " graphs with minimum degree 4; UBCMPGs:";
    for (UbcType t : {UbcType::pure, UbcType::tree, UbcType::cycle, UbcType::hybrid})
      detail += " " + to_string(t) + "=" + str(totals[t]);
    return Outcome{totals[UbcType::pure] == 0, detail};
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
