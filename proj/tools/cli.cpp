#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mpg/base_module.hpp"
#include "mpg/ce_ops.hpp"
#include "mpg/errors.hpp"
#include "mpg/generator.hpp"
#include "mpg/kempe.hpp"
#include "mpg/parallel.hpp"
#include "mpg/rot_io.hpp"
#include "mpg/transform.hpp"
#include "mpg/ubcycle.hpp"

namespace mpgcli {

using nlohmann::json;
using namespace mpg;

namespace {

// User-facing vertex ids are 1-based, as in .rot files.
json vertices_json(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

json cycle_json(const BichromaticCycle& c) {
  return {{"vertices", vertices_json(c.vertices)}, {"colors", {c.pair.first, c.pair.second}}};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

std::vector<Vertex> parse_site(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item) - 1);
    } catch (const std::exception&) {
      throw PreconditionError("bad site entry '" + item + "'");
    }
  }
  return out;
}

// Text mode: one key=value line per top-level field, nested values compact.
void print_text(std::ostream& out, const json& j) {
  for (const auto& [key, value] : j.items()) {
    out << key << '=';
    if (value.is_string()) out << value.get<std::string>();
    else out << value.dump();
    out << '\n';
  }
}

std::string hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

json validate_cmd(const PlaneGraph& g) {
  const auto c = validate_mpg(g);
  return {{"is_mpg", c.is_mpg},       {"vertices", g.vertex_count()},  {"edges", g.edge_count()},
          {"faces", g.face_count()},  {"min_degree", c.min_degree},     {"max_degree", c.max_degree},
          {"simple", g.is_simple()},  {"canonical_form", hex(canonical_form(g))}};
}

json colorings_cmd(const PlaneGraph& g, bool list) {
  const auto cs = enumerate_colorings(g);
  json j{{"count", cs.size()}};
  if (list) {
    j["colorings"] = json::array();
    for (const auto& f : cs) j["colorings"].push_back(f.colors);
  }
  return j;
}

json kempe_cmd(const PlaneGraph& g) {
  const auto classes = kempe_partition(g);
  json sizes = json::array(), members = json::array();
  for (const auto& k : classes) {
    sizes.push_back(k.members.size());
    json m = json::array();
    for (const auto& f : k.members) m.push_back(f.colors);
    members.push_back(m);
  }
  return {{"classes", classes.size()}, {"sizes", sizes}, {"members", members}, {"kempe_graph", classes.size() <= 1}};
}

json ubc_cmd(const PlaneGraph& g) {
  const auto r = classify_ubcmpg(g);
  json per = json::array();
  for (std::size_t i = 0; i < r.colorings.size(); ++i) {
    json cycles = json::array();
    for (const auto& c : r.ub_cycles[i]) cycles.push_back(cycle_json(c));
    per.push_back({{"coloring", r.colorings[i].colors},
                   {"kempe_class", r.kempe_class_of[i]},
                   {"class", to_string(r.coloring_class[i])},
                   {"ub_cycles", cycles}});
  }
  return {{"type", to_string(r.type)},
          {"colorings", r.colorings.size()},
          {"ubc_colorings", r.count(ColoringClass::ubc)},
          {"tree_colorings", r.count(ColoringClass::tree)},
          {"cyclic_colorings", r.count(ColoringClass::cyclic)},
          {"details", per}};
}

json base_module_cmd(const PlaneGraph& g, int mate_bound) {
  const auto s = smpg_view(g);
  if (s.outer_cycle.vertices.size() != 4) throw PreconditionError("outer cycle must have length 4");
  const auto r = analyze_base_module(s, mate_bound);
  json j{{"corners", vertices_json({r.corners.begin(), r.corners.end()})},
         {"f2_colorings", r.f2.size()},
         {"is_4_base_module", r.is_4_base_module}};
  if (!r.is_4_base_module) return j;
  j["witness"] = r.witness->colors;
  j["shared_pair"] = vertices_json({r.shared_pair->first, r.shared_pair->second});
  j["module_colorings"] = r.module_colorings.size();
  j["kind"] = to_string(r.kind);
  j["kind_witnessed"] = r.kind_witnessed;
  j["mate_bound"] = mate_bound;
  j["path_kind"] = to_string(r.path_kind);
  json paths = json::array();
  for (const auto& fam : endpoint_paths(s, *r.witness)) {
    json ps = json::array();
    for (const auto& p : fam.paths) ps.push_back(vertices_json(p));
    paths.push_back({{"colors", {fam.colors.first, fam.colors.second}},
                     {"from", fam.from + 1},
                     {"to", fam.to + 1},
                     {"nonempty", fam.nonempty},
                     {"paths", ps},
                     {"truncated", fam.truncated}});
  }
  j["module_paths"] = paths;
  json shells = json::array();
  for (const auto& c : r.shells) shells.push_back(vertices_json(c.vertices));
  j["shells"] = shells;
  return j;
}

json apply_cmd(const PlaneGraph& g, const std::string& op_name, const std::string& site_text,
               const std::string& coloring_path, const std::string& out_path) {
  const auto op = parse_wheel_op(op_name);
  if (!op) throw PreconditionError("unknown operator '" + op_name + "'");
  Coloring f;
  if (!coloring_path.empty()) f = parse_coloring(read_text(coloring_path), g.vertex_count());
  const auto app = apply_wheel_op(*op, g, f, parse_site(site_text));
  if (!out_path.empty()) write_text(out_path, format_rot(app.after));
  json j{{"op", to_string(app.op)},
         {"site", vertices_json(app.site)},
         {"vertices", app.after.vertex_count()},
         {"rot", format_rot(app.after)}};
  if (app.center != kNone) j["center"] = app.center + 1;
  if (!app.coloring_after.colors.empty()) {
    j["coloring"] = app.coloring_after.colors;
    j["pending"] = vertices_json(app.pending);
  }
  return j;
}

json transform_cmd(const std::string& path, const std::string& trace_path, bool replay_mode) {
  if (replay_mode) {
    const auto t = TransformTrace::from_json(json::parse(read_text(path)));
    const auto f = replay(t);
    if (f != t.output) throw PreconditionError("replayed coloring differs from the recorded output");
    return {{"replayed", true}, {"steps", t.steps.size()}, {"proper", is_proper(t.input, f)}, {"coloring", f.colors}};
  }
  const auto g = read_rot_file(path);
  const auto t = transform(g);
  if (!trace_path.empty()) write_text(trace_path, t.to_json().dump(2) + "\n");
  std::string rule = "direct";
  for (const auto& s : t.steps)
    if (s.kind == "decycle") rule = s.payload.at("rule").get<std::string>();
  return {{"config", t.steps.front().payload.at("kind")},
          {"steps", t.steps.size()},
          {"decycle_rule", rule},
          {"proper", is_proper(g, t.output)},
          {"coloring", t.output.colors}};
}

GenMethod parse_method(const std::string& m) {
  if (m == "split") return GenMethod::split;
  if (m == "ce") return GenMethod::ce;
  throw PreconditionError("unknown method '" + m + "'");
}

json counts_json(const GenerationRun& run) {
  json counts = json::object();
  for (const auto& [order, gs] : run.by_order) counts[std::to_string(order)] = gs.size();
  return counts;
}

json generate_cmd(const GenerationOptions& opts, const std::string& out_dir) {
  const auto run = generate(opts);
  if (!out_dir.empty()) write_run(run, out_dir);
  return {{"method", to_string(run.method)}, {"complete", run.complete}, {"counts", counts_json(run)}};
}

json scan_cmd(const GenerationOptions& opts, const std::string& out_dir) {
  if (!opts.min_degree || *opts.min_degree < 4) throw PreconditionError("scan needs --min-degree 4 or more");
  const auto run = generate(opts);
  const auto scan = ubcmpg_scan(run, opts.jobs);
  json by_order = json::object();
  for (const auto& [order, types] : scan.by_order) {
    json t = json::object();
    for (const auto& [type, n] : types) t[to_string(type)] = n;
    by_order[std::to_string(order)] = t;
  }
  std::map<std::string, int> totals;
  for (const auto& e : scan.ubcmpgs) ++totals[to_string(e.report.type)];
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    int k = 0;
    for (const auto& e : scan.ubcmpgs) {
      char name[32];
      std::snprintf(name, sizeof name, "ubc_%04d.rot", ++k);
      write_text((std::filesystem::path(out_dir) / name).string(), format_rot(e.graph));
    }
  }
  return {{"scanned", scan.scanned}, {"ubcmpgs", scan.ubcmpgs.size()}, {"by_type", totals}, {"by_order", by_order}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal planar graph coloring toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  int jobs = default_jobs();
  app.add_flag("--json", as_json, "Emit JSON instead of key=value text");
  app.add_option("--jobs", jobs, "Worker threads (default: MPG_JOBS or the core count)");

  std::string file, op, site, coloring_path, out_path, trace_path, method = "split";
  bool list = false, replay_mode = false;
  int max_order = 0, mate_bound = 2;
  std::optional<int> min_degree;
  std::size_t max_graphs = 0;

  auto* validate = app.add_subcommand("validate", "Check that a .rot file is a maximal planar graph");
  validate->add_option("file", file)->required();
  auto* colorings = app.add_subcommand("colorings", "Count 4-colorings up to color permutation");
  colorings->add_option("file", file)->required();
  colorings->add_flag("--list", list, "Also list the colorings");
  auto* kempe = app.add_subcommand("kempe-classes", "Partition the colorings into Kempe classes");
  kempe->add_option("file", file)->required();
  auto* ubc = app.add_subcommand("ubc", "Find unchanged bichromatic cycles and the UBCMPG type");
  ubc->add_option("file", file)->required();
  auto* base = app.add_subcommand("base-module", "Analyse an SMPG whose outer face is a 4-cycle");
  base->add_option("file", file)->required();
  base->add_option("--mate-bound", mate_bound, "Interior vertices of mates tried in the cycle-type test");
  auto* apply = app.add_subcommand("apply", "Apply a wheel operator");
  apply->add_option("op", op, "e2wo c2wo e3wo c3wo e4wo c4wo e5wo c5wo")->required();
  apply->add_option("file", file)->required();
  apply->add_option("--site", site, "Comma-separated 1-based vertices")->required();
  apply->add_option("--coloring", coloring_path, "Coloring file to propagate");
  apply->add_option("--out", out_path, "Write the resulting .rot here");
  auto* transform_app = app.add_subcommand("transform", "Color a minimum degree 5 MPG through module extraction");
  transform_app->add_option("file", file, ".rot input, or a trace with --replay")->required();
  transform_app->add_option("--trace", trace_path, "Write the step trace as JSON");
  transform_app->add_flag("--replay", replay_mode, "Replay a trace file and check its output");
  auto* gen = app.add_subcommand("generate", "Enumerate MPGs up to an order");
  auto* scan = app.add_subcommand("scan", "Classify every generated MPG as UBCMPG or not");
  for (auto* sub : {gen, scan}) {
    sub->add_option("--max-order", max_order)->required();
    sub->add_option("--min-degree", min_degree);
    sub->add_option("--method", method, "split or ce");
    sub->add_option("--max-graphs", max_graphs, "Cap per order; the run is flagged incomplete");
    sub->add_option("--out", out_path);
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    json result;
    if (validate->parsed()) {
      result = validate_cmd(read_rot_file(file));
    } else if (colorings->parsed()) {
      result = colorings_cmd(read_rot_file(file), list);
      if (!as_json) {
        out << result["count"].get<std::size_t>() << '\n';
        if (list)
          for (const auto& f : result["colorings"]) out << f.dump() << '\n';
        return 0;
      }
    } else if (kempe->parsed()) {
      result = kempe_cmd(read_rot_file(file));
    } else if (ubc->parsed()) {
      result = ubc_cmd(read_rot_file(file));
    } else if (base->parsed()) {
      result = base_module_cmd(read_rot_file(file), mate_bound);
    } else if (apply->parsed()) {
      result = apply_cmd(read_rot_file(file), op, site, coloring_path, out_path);
    } else if (transform_app->parsed()) {
      result = transform_cmd(file, trace_path, replay_mode);
    } else {
      GenerationOptions opts{max_order, min_degree, parse_method(method), jobs, max_graphs};
      result = gen->parsed() ? generate_cmd(opts, out_path) : scan_cmd(opts, out_path);
    }
    if (as_json) out << result.dump(2) << '\n';
    else print_text(out, result);
    return 0;
  } catch (const TheoremAlarm& e) {
    err << "THEOREM ALARM: " << e.what() << '\n';
    return 3;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace mpgcli
