#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mpg {

using Vertex = int;
using HalfEdge = int;
inline constexpr int kNone = -1;

/// A connected plane multigraph stored as a rotation system.
///
/// Every undirected edge is a pair of half-edges related by `twin`. Around each
/// vertex the outgoing half-edges form a cyclic clockwise order (`next_cw`).
/// Faces are traced with `face_next(h) = next_cw(twin(h))`. One face is
/// designated as the outer face. Loops are rejected; parallel edges are kept.
///
/// Values are immutable once built; all operators return new graphs.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// Builds from clockwise neighbour lists (0-based). Twins of parallel edges
  /// are paired so that the result is a sphere embedding.
  static PlaneGraph from_rotations(const std::vector<std::vector<Vertex>>& cw_neighbors,
                                   std::optional<std::vector<Vertex>> outer_cycle = std::nullopt);

  /// Builds from consistently oriented face boundaries (every directed edge
  /// appears in exactly one face). `outer` indexes the outer face.
  static PlaneGraph from_faces(int vertex_count, const std::vector<std::vector<Vertex>>& faces, int outer = 0);

  /// Builds from raw half-edge arrays. `outer` is any half-edge of the outer face.
  static PlaneGraph from_half_edges(int vertex_count, std::vector<Vertex> origin,
                                    std::vector<HalfEdge> twin, std::vector<HalfEdge> next_cw,
                                    HalfEdge outer);

  int vertex_count() const noexcept { return n_; }
  int half_edge_count() const noexcept { return static_cast<int>(origin_.size()); }
  int edge_count() const noexcept { return half_edge_count() / 2; }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }

  Vertex origin(HalfEdge h) const { return origin_[h]; }
  Vertex target(HalfEdge h) const { return origin_[twin_[h]]; }
  HalfEdge twin(HalfEdge h) const { return twin_[h]; }
  HalfEdge next_cw(HalfEdge h) const { return next_[h]; }
  HalfEdge prev_cw(HalfEdge h) const { return prev_[h]; }
  HalfEdge face_next(HalfEdge h) const { return next_[twin_[h]]; }
  HalfEdge first_half_edge(Vertex v) const { return first_[v]; }

  /// Multigraph degree (number of incident edge ends).
  int degree(Vertex v) const { return degree_[v]; }
  int min_degree() const;
  int max_degree() const;

  /// Outgoing half-edges of v in clockwise order, starting at first_half_edge(v).
  std::vector<HalfEdge> rotation(Vertex v) const;
  /// Clockwise neighbour list (repeats for parallel edges).
  std::vector<Vertex> cw_neighbors(Vertex v) const;
  /// Sorted, de-duplicated neighbour sets.
  const std::vector<std::vector<Vertex>>& adjacency() const noexcept { return adj_; }
  bool adjacent(Vertex u, Vertex v) const;
  /// Some half-edge u->v, or kNone.
  HalfEdge find_half_edge(Vertex u, Vertex v) const;

  int face_of(HalfEdge h) const { return face_of_[h]; }
  const std::vector<HalfEdge>& face(int f) const { return faces_[f]; }
  std::vector<Vertex> face_vertices(int f) const;
  int outer_face() const noexcept { return outer_face_; }
  /// Face whose boundary is the given closed vertex sequence (either direction,
  /// any rotation), or kNone.
  int find_face(std::span<const Vertex> cycle) const;

  bool is_connected() const;
  bool has_parallel_edges() const;
  bool is_simple() const { return !has_parallel_edges(); }

  PlaneGraph with_outer_face(int face) const;
  /// Orientation-reversed copy (same outer face).
  PlaneGraph mirrored() const;

 private:
  void finalize(HalfEdge outer);

  int n_ = 0;
  std::vector<Vertex> origin_;
  std::vector<HalfEdge> twin_, next_, prev_;
  std::vector<HalfEdge> first_;
  std::vector<int> degree_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> face_of_;
  std::vector<std::vector<HalfEdge>> faces_;
  int outer_face_ = kNone;
};

/// A simple cycle split into the vertices strictly inside (the side not
/// containing the outer face) and strictly outside.
struct Cycle {
  std::vector<Vertex> vertices;  // closed implicitly: last connects to first
  std::vector<Vertex> interior;  // sorted
  std::vector<Vertex> exterior;  // sorted

  bool contains(Vertex v) const;
  bool has_in_interior(Vertex v) const;
};

/// An SMPG together with its outer cycle.
struct SmpgView {
  PlaneGraph graph;
  Cycle outer_cycle;
};

struct MpgCheck {
  bool is_mpg = false;
  int min_degree = 0;
  int max_degree = 0;
};

/// Throws PreconditionError on disconnected input or when parallel edges are present.
MpgCheck validate_mpg(const PlaneGraph& g);

/// True iff `outer` bounds the outer face, has length >= 4 and every other face
/// is a triangle. Throws if `outer` is not a face boundary.
bool validate_smpg(const PlaneGraph& g, std::span<const Vertex> outer);

/// Splits the vertex set by a simple cycle. Throws if `cycle` is not one.
Cycle cycle_sides(const PlaneGraph& g, std::span<const Vertex> cycle);

/// SMPG view of g with its outer face boundary as the outer cycle.
SmpgView smpg_view(const PlaneGraph& g);

/// Isomorphism invariant of the embedded graph up to reflection and choice of
/// root. Equal strings iff isomorphic plane graphs.
std::string canonical_form(const PlaneGraph& g);

/// Relabelled copy whose vertex and half-edge numbering follow the canonical
/// form, so isomorphic inputs give identical graphs. The outer face is the one
/// left of half-edge 0.
PlaneGraph canonical_graph(const PlaneGraph& g);

/// Mutable half-edge structure used by the operators that rewrite embeddings.
class RotationEditor {
 public:
  explicit RotationEditor(const PlaneGraph& g);

  int vertex_count() const { return static_cast<int>(first_.size()); }
  Vertex add_vertex();
  /// Inserts edge u-v. The new u->v half-edge is placed clockwise right after
  /// `after_u` at u (kNone if u has no edges); likewise for v. Returns u->v.
  HalfEdge add_edge(Vertex u, HalfEdge after_u, Vertex v, HalfEdge after_v);
  void remove_edge(HalfEdge h);
  /// Detaches h from its origin and reinserts it clockwise after `after` at `w`.
  void move_half_edge(HalfEdge h, Vertex w, HalfEdge after);
  /// Marks an isolated vertex for deletion; ids above it shift down in build().
  void remove_vertex(Vertex v);

  Vertex origin(HalfEdge h) const { return origin_[h]; }
  Vertex target(HalfEdge h) const { return origin_[twin_[h]]; }
  HalfEdge twin(HalfEdge h) const { return twin_[h]; }
  HalfEdge next_cw(HalfEdge h) const { return next_[h]; }
  HalfEdge prev_cw(HalfEdge h) const { return prev_[h]; }
  HalfEdge first(Vertex v) const { return first_[v]; }
  std::vector<HalfEdge> rotation(Vertex v) const;
  HalfEdge find(Vertex u, Vertex v) const;

  /// `outer` must be a live half-edge on the intended outer face.
  PlaneGraph build(HalfEdge outer) const;
  /// Maps old vertex ids to ids in the built graph (kNone for removed).
  std::vector<Vertex> vertex_map() const;

 private:
  void unlink(HalfEdge h);
  void link_after(HalfEdge h, Vertex w, HalfEdge after);

  std::vector<Vertex> origin_;
  std::vector<HalfEdge> twin_, next_, prev_;
  std::vector<bool> alive_;
  std::vector<HalfEdge> first_;
  std::vector<bool> removed_;
};

}  // namespace mpg
