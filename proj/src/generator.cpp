#include "mpg/generator.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <unordered_set>

#include "json.hpp"
#include "mpg/ce_ops.hpp"
#include "mpg/errors.hpp"
#include "mpg/fixtures.hpp"
#include "mpg/parallel.hpp"
#include "mpg/rot_io.hpp"

namespace mpg {

std::string to_string(GenMethod m) { return m == GenMethod::ce ? "ce" : "split"; }

std::size_t GenerationRun::count(int order) const {
  auto it = by_order.find(order);
  return it == by_order.end() ? 0 : it->second.size();
}

std::vector<PlaneGraph> GenerationRun::all() const {
  std::vector<PlaneGraph> out;
  for (const auto& [order, gs] : by_order) out.insert(out.end(), gs.begin(), gs.end());
  return out;
}

PlaneGraph graph_from_canonical_form(const std::string& form) {
  std::size_t pos = 0;
  auto get = [&] {
    if (pos + 2 > form.size()) throw PreconditionError("truncated canonical form");
    const int x = (static_cast<unsigned char>(form[pos]) << 8) | static_cast<unsigned char>(form[pos + 1]);
    pos += 2;
    return x;
  };
  const int n = get();
  get();  // edge count
  std::vector<std::vector<Vertex>> rot(n);
  for (int u = 0; u < n; ++u) {
    const int d = get();
    for (int k = 0; k < d; ++k) rot[u].push_back(get());
  }
  return PlaneGraph::from_rotations(rot);
}

namespace {

using FormSet = std::unordered_set<std::string>;

// Merges per-task results into one sorted, duplicate-free list.
std::vector<std::string> merge_sorted(std::vector<FormSet>& parts) {
  std::set<std::string> all;
  for (auto& p : parts) {
    all.insert(p.begin(), p.end());
    FormSet().swap(p);
  }
  return {all.begin(), all.end()};
}

int deficiency(const PlaneGraph& g, int k) {
  int d = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d += std::max(0, k - g.degree(v));
  return d;
}

// Children of g by vertex splitting, skipping those whose degree deficiency
// exceeds `budget` (k = 0 disables the check).
void split_children(const PlaneGraph& g, int k, int budget, FormSet& out) {
  const int base = k > 0 ? deficiency(g, k) : 0;
  auto def = [&](int deg) { return std::max(0, k - deg); };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto rot = g.rotation(v);
    const int d = static_cast<int>(rot.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        const Vertex a = g.target(rot[i]), b = g.target(rot[j]);
        if (k > 0) {
          const int moved = j - i - 1;
          const int dv = d - moved + 1, dw = moved + 3;
          const int child = base - def(g.degree(v)) - def(g.degree(a)) - def(g.degree(b)) + def(dv) +
                            def(g.degree(a) + 1) + def(g.degree(b) + 1) + def(dw);
          if (child > budget) continue;
        }
        out.insert(canonical_form(split_vertex(g, v, a, b)));
      }
  }
}

bool capped(const GenerationOptions& o, std::size_t n) { return o.max_graphs != 0 && n > o.max_graphs; }

std::map<int, std::vector<std::string>> run_split(const GenerationOptions& o, bool& complete) {
  const int k = o.min_degree && *o.min_degree > 3 ? *o.min_degree : 0;
  std::map<int, std::vector<std::string>> levels;
  levels[4] = {canonical_form(fixtures::k4())};
  for (int m = 4; m < o.max_order; ++m) {
    const auto& parents = levels[m];
    const int budget = 2 * (o.max_order - (m + 1));
    std::vector<FormSet> parts(parents.size());
    parallel_for(parents.size(), o.jobs, [&](std::size_t i) {
      split_children(graph_from_canonical_form(parents[i]), k, budget, parts[i]);
    });
    levels[m + 1] = merge_sorted(parts);
    if (capped(o, levels[m + 1].size())) {
      complete = false;
      break;
    }
  }
  return levels;
}

void ce_moves(const PlaneGraph& g, int bound, FormSet& out) {
  const int n = g.vertex_count();
  auto keep = [&](const PlaneGraph& h) {
    if (!h.has_parallel_edges()) out.insert(canonical_form(h));
  };
  if (n + 1 <= bound)
    for (const auto& s : extension_sites(g, WheelOp::e3wo)) keep(e3wo(g, {}, s[0], s[1], s[2]).after);
  if (n + 2 <= bound) {
    for (const auto& s : extension_sites(g, WheelOp::e4wo)) keep(e4wo(g, {}, s[0], s[1], s[2]).after);
    for (const auto& s : extension_sites(g, WheelOp::e5wo)) keep(e5wo(g, {}, s[0], s[1], s[2], s[3]).after);
  }
  for (Vertex x = 0; x < n; ++x) {
    const int d = g.degree(x);
    if (d == 3 && n - 1 >= 4) keep(c3wo(g, {}, x).after);
    if ((d != 4 && d != 5) || n - 2 < 4) continue;
    const auto rim = g.cw_neighbors(x);
    for (int i = 0; i < (d == 4 ? 2 : 5); ++i) {
      const Vertex a = rim[i], b = rim[(i + 2) % d];
      if (g.adjacent(a, b)) continue;
      keep(d == 4 ? c4wo(g, {}, x, a, b).after : c5wo(g, {}, x, a, b).after);
    }
  }
}

std::map<int, std::vector<std::string>> run_ce(const GenerationOptions& o, bool& complete) {
  const int bound = o.max_order + 2;
  FormSet seen{canonical_form(fixtures::k4())};
  std::vector<std::string> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<FormSet> parts(frontier.size());
    parallel_for(frontier.size(), o.jobs, [&](std::size_t i) {
      ce_moves(graph_from_canonical_form(frontier[i]), bound, parts[i]);
    });
    std::vector<std::string> next;
    for (const auto& s : merge_sorted(parts))
      if (seen.insert(s).second) next.push_back(s);
    frontier = std::move(next);
    if (capped(o, seen.size())) {
      complete = false;
      break;
    }
  }
  std::map<int, std::vector<std::string>> levels;
  for (const auto& s : seen) {
    const int n = (static_cast<unsigned char>(s[0]) << 8) | static_cast<unsigned char>(s[1]);
    if (n <= o.max_order) levels[n].push_back(s);
  }
  for (auto& [n, v] : levels) std::sort(v.begin(), v.end());
  return levels;
}

}  // namespace

GenerationRun generate(const GenerationOptions& opts) {
  if (opts.max_order < 4) throw PreconditionError("max_order must be at least 4");
  GenerationRun run;
  run.max_order = opts.max_order;
  run.min_degree = opts.min_degree;
  run.method = opts.method;
  const auto levels = opts.method == GenMethod::ce ? run_ce(opts, run.complete) : run_split(opts, run.complete);
  for (const auto& [n, forms] : levels) {
    if (n > opts.max_order) continue;
    auto& out = run.by_order[n];
    for (const auto& s : forms) {
      auto g = graph_from_canonical_form(s);
      if (!opts.min_degree || g.min_degree() >= *opts.min_degree) out.push_back(std::move(g));
    }
  }
  return run;
}

PlaneGraph delete_vertex(const PlaneGraph& g, Vertex w) {
  const auto spokes = g.rotation(w);
  if (spokes.empty()) throw PreconditionError("vertex has no edges");
  const HalfEdge outer = g.face_next(spokes.front());
  RotationEditor ed(g);
  for (HalfEdge h : spokes) ed.remove_edge(h);
  ed.remove_vertex(w);
  return ed.build(outer);
}

std::vector<PlaneGraph> quad_smpg_corpus(int max_vertices, int interior_min_degree, int jobs) {
  GenerationOptions o;
  o.max_order = max_vertices + 1;
  o.jobs = jobs;
  const auto run = generate(o);
  const auto graphs = run.all();
  std::vector<FormSet> parts(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    const auto& g = graphs[i];
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (g.degree(w) != 4 || g.vertex_count() < 6) continue;
      const auto s = delete_vertex(g, w);
      const auto outer = s.face_vertices(s.outer_face());
      bool ok = true;
      for (Vertex v = 0; v < s.vertex_count() && ok; ++v)
        if (std::find(outer.begin(), outer.end(), v) == outer.end() && s.degree(v) < interior_min_degree) ok = false;
      if (ok) parts[i].insert(canonical_form(s));
    }
  });
  std::vector<PlaneGraph> out;
  for (const auto& form : merge_sorted(parts)) {
    auto s = graph_from_canonical_form(form);
    for (int f = 0; f < s.face_count(); ++f)
      if (s.face(f).size() == 4) {
        s = s.with_outer_face(f);
        break;
      }
    out.push_back(std::move(s));
  }
  return out;
}

ScanResult ubcmpg_scan(const GenerationRun& run, int jobs) {
  if (!run.min_degree || *run.min_degree < 4) throw PreconditionError("scan needs a run with minimum degree >= 4");
  const auto graphs = run.all();
  std::vector<std::optional<UbReport>> reports(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) { reports[i] = classify_ubcmpg(graphs[i]); });
  ScanResult r;
  r.scanned = graphs.size();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    ++r.by_order[graphs[i].vertex_count()][reports[i]->type];
    if (reports[i]->type != UbcType::not_ubcmpg) r.ubcmpgs.push_back({graphs[i], std::move(*reports[i])});
  }
  return r;
}

void write_run(const GenerationRun& run, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json stats;
  stats["max_order"] = run.max_order;
  stats["min_degree"] = run.min_degree ? nlohmann::json(*run.min_degree) : nlohmann::json(nullptr);
  stats["method"] = to_string(run.method);
  stats["complete"] = run.complete;
  nlohmann::json counts = nlohmann::json::object(), files = nlohmann::json::array();
  int index = 0;
  for (const auto& [order, gs] : run.by_order) {
    counts[std::to_string(order)] = gs.size();
    for (const auto& g : gs) {
      char name[32];
      std::snprintf(name, sizeof name, "%06d.rot", ++index);
      std::ofstream(fs::path(dir) / name) << format_rot(g);
      files.push_back(name);
    }
  }
  stats["counts"] = counts;
  stats["files"] = files;
  std::ofstream(fs::path(dir) / "stats.json") << stats.dump(2) << "\n";
}

}  // namespace mpg
