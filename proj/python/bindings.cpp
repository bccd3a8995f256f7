#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mpg/base_module.hpp"
#include "mpg/ce_ops.hpp"
#include "mpg/errors.hpp"
#include "mpg/fixtures.hpp"
#include "mpg/generator.hpp"
#include "mpg/kempe.hpp"
#include "mpg/rot_io.hpp"
#include "mpg/transform.hpp"
#include "mpg/ubcycle.hpp"

namespace py = pybind11;
using namespace mpg;

namespace {

std::vector<int> colors(const Coloring& f) { return {f.colors.begin(), f.colors.end()}; }

py::dict ubc_report(const PlaneGraph& g) {
  const auto r = classify_ubcmpg(g);
  py::list per;
  for (std::size_t i = 0; i < r.colorings.size(); ++i) {
    py::list cycles;
    for (const auto& c : r.ub_cycles[i]) cycles.append(c.vertices);
    py::dict d;
    d["coloring"] = colors(r.colorings[i]);
    d["kempe_class"] = r.kempe_class_of[i];
    d["class"] = to_string(r.coloring_class[i]);
    d["ub_cycles"] = cycles;
    per.append(d);
  }
  py::dict out;
  out["type"] = to_string(r.type);
  out["colorings"] = per;
  out["tree_colorings"] = r.count(ColoringClass::tree);
  out["ubc_colorings"] = r.count(ColoringClass::ubc);
  return out;
}

py::dict base_module_report(const PlaneGraph& g, int mate_bound) {
  const auto r = analyze_base_module(smpg_view(g), mate_bound);
  py::dict out;
  out["corners"] = std::vector<Vertex>(r.corners.begin(), r.corners.end());
  out["is_4_base_module"] = r.is_4_base_module;
  out["kind"] = to_string(r.kind);
  out["path_kind"] = to_string(r.path_kind);
  if (r.witness) out["witness"] = colors(*r.witness);
  if (r.shared_pair) out["shared_pair"] = std::vector<Vertex>{r.shared_pair->first, r.shared_pair->second};
  py::list shells;
  for (const auto& c : r.shells) shells.append(c.vertices);
  out["shells"] = shells;
  return out;
}

}  // namespace

PYBIND11_MODULE(_mpg, m) {
  m.doc() = "Maximal planar graphs: colorings, Kempe classes, unchanged bichromatic cycles";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<TheoremAlarm>(m, "TheoremAlarm", PyExc_RuntimeError);

  py::class_<PlaneGraph>(m, "PlaneGraph")
      .def_static("from_rot", &parse_rot, py::arg("text"))
      .def_static("from_faces", &PlaneGraph::from_faces, py::arg("vertex_count"), py::arg("faces"),
                  py::arg("outer") = 0)
      .def("to_rot", [](const PlaneGraph& g) { return format_rot(g); })
      .def_property_readonly("vertex_count", &PlaneGraph::vertex_count)
      .def_property_readonly("edge_count", &PlaneGraph::edge_count)
      .def_property_readonly("face_count", &PlaneGraph::face_count)
      .def("degree", &PlaneGraph::degree)
      .def("min_degree", &PlaneGraph::min_degree)
      .def("cw_neighbors", &PlaneGraph::cw_neighbors)
      .def("faces",
           [](const PlaneGraph& g) {
             std::vector<std::vector<Vertex>> out;
             for (int f = 0; f < g.face_count(); ++f) out.push_back(g.face_vertices(f));
             return out;
           })
      .def("is_mpg", [](const PlaneGraph& g) { return validate_mpg(g).is_mpg; })
      .def("canonical_form", [](const PlaneGraph& g) { return py::bytes(canonical_form(g)); })
      .def("__repr__", [](const PlaneGraph& g) {
        return "<PlaneGraph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("icosahedron", &fixtures::icosahedron);
  m.def("octahedron", &fixtures::octahedron);
  m.def("k4", &fixtures::k4);
  m.def("ubc_order8", &fixtures::ubc_order8);
  m.def("identity_module", &fixtures::b4_module);

  m.def("colorings", [](const PlaneGraph& g) {
    std::vector<std::vector<int>> out;
    for (const auto& f : enumerate_colorings(g)) out.push_back(colors(f));
    return out;
  }, "One 4-coloring per color-permutation class.");
  m.def("is_proper", [](const PlaneGraph& g, const std::vector<Color>& c) { return is_proper(g, Coloring(c)); });
  m.def("kempe_classes", [](const PlaneGraph& g) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& k : kempe_partition(g)) {
      std::vector<std::vector<int>> members;
      for (const auto& f : k.members) members.push_back(colors(f));
      out.push_back(std::move(members));
    }
    return out;
  });
  m.def("classify_ubcmpg", &ubc_report);
  m.def("base_module", &base_module_report, py::arg("smpg"), py::arg("mate_bound") = 2);
  m.def("apply", [](const std::string& op, const PlaneGraph& g, const std::vector<Vertex>& site) {
    const auto parsed = parse_wheel_op(op);
    if (!parsed) throw PreconditionError("unknown operator '" + op + "'");
    return apply_wheel_op(*parsed, g, {}, site).after;
  }, py::arg("op"), py::arg("graph"), py::arg("site"));
  m.def("transform", [](const PlaneGraph& g) {
    const auto t = transform(g);
    return py::make_tuple(colors(t.output), t.to_json().dump());
  }, "Colors a minimum degree 5 MPG; returns (coloring, trace JSON).");
  m.def("replay", [](const std::string& trace) {
    return colors(replay(TransformTrace::from_json(nlohmann::json::parse(trace))));
  });
  m.def("generate", [](int max_order, std::optional<int> min_degree, const std::string& method) {
    GenerationOptions opts;
    opts.max_order = max_order;
    opts.min_degree = min_degree;
    opts.method = method == "ce" ? GenMethod::ce : GenMethod::split;
    return generate(opts).all();
  }, py::arg("max_order"), py::arg("min_degree") = py::none(), py::arg("method") = "split");
}
