#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpg/coloring.hpp"
#include "mpg/plane_graph.hpp"

namespace mpg {

enum class WheelOp { e2wo, c2wo, e3wo, c3wo, e4wo, c4wo, e5wo, c5wo };
std::string to_string(WheelOp op);
std::optional<WheelOp> parse_wheel_op(const std::string& name);

/// Result of one extending or contracting wheel operator.
///
/// Sites, by operator:
///   e2wo  {u, v}             an edge
///   c2wo  {x}                center of a 2-wheel
///   e3wo  {a, b, c}          a triangular face
///   c3wo  {x}                a degree-3 vertex
///   e4wo  {v1, v2, v3}       a 2-path; v2 is split
///   c4wo  {x, keep, drop}    center and two opposite rim vertices
///   e5wo  {v1, v2, v3, v4}   funnel: v2v3v4 a face, v1 another neighbour of v2
///   c5wo  {x, keep, drop}    center and two rim vertices at rim distance 2
///
/// Extending operators append new vertices after the old ids (split copy
/// first, then the center). Contracting operators delete vertices and shift
/// higher ids down; `vertex_map` records old -> new ids.
struct OperatorApplication {
  WheelOp op = WheelOp::e3wo;
  std::vector<Vertex> site;
  PlaneGraph before, after;
  Coloring coloring_before, coloring_after;  // empty when no coloring was given
  std::vector<Vertex> pending;               // uncolored vertices of coloring_after
  Vertex center = kNone;                     // new center (extending ops)
  std::optional<std::pair<Vertex, Vertex>> contracted;  // split pair or identified pair
  std::vector<Vertex> vertex_map;
};

OperatorApplication e2wo(const PlaneGraph& g, const Coloring& f, Vertex u, Vertex v);
OperatorApplication c2wo(const PlaneGraph& g, const Coloring& f, Vertex x);
OperatorApplication e3wo(const PlaneGraph& g, const Coloring& f, Vertex a, Vertex b, Vertex c);
OperatorApplication c3wo(const PlaneGraph& g, const Coloring& f, Vertex x);
OperatorApplication e4wo(const PlaneGraph& g, const Coloring& f, Vertex v1, Vertex v2, Vertex v3);
OperatorApplication c4wo(const PlaneGraph& g, const Coloring& f, Vertex x, Vertex keep, Vertex drop);
OperatorApplication e5wo(const PlaneGraph& g, const Coloring& f, Vertex v1, Vertex v2, Vertex v3, Vertex v4);
OperatorApplication c5wo(const PlaneGraph& g, const Coloring& f, Vertex x, Vertex keep, Vertex drop);

/// Dispatch by operator with the site layout documented above.
OperatorApplication apply_wheel_op(WheelOp op, const PlaneGraph& g, const Coloring& f,
                                   const std::vector<Vertex>& site);

/// All sites where an extending operator applies (e2wo..e5wo).
std::vector<std::vector<Vertex>> extension_sites(const PlaneGraph& g, WheelOp op);

/// Site of the contracting operator that undoes `app`.
std::vector<Vertex> inverse_site(const OperatorApplication& app);
WheelOp inverse_op(WheelOp op);

/// Vertex split: v keeps the edges clockwise from b to a, a new last vertex
/// takes those from a to b, and both become adjacent to a, b and each other.
/// The inverse of contracting an edge.
PlaneGraph split_vertex(const PlaneGraph& g, Vertex v, Vertex a, Vertex b);

}  // namespace mpg
