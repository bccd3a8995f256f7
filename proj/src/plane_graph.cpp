#include "mpg/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "mpg/errors.hpp"

namespace mpg {

namespace {

int count_faces(const std::vector<HalfEdge>& twin, const std::vector<HalfEdge>& next) {
  std::vector<bool> seen(twin.size(), false);
  int faces = 0;
  for (std::size_t h = 0; h < twin.size(); ++h) {
    if (seen[h]) continue;
    ++faces;
    for (HalfEdge e = static_cast<HalfEdge>(h); !seen[e]; e = next[twin[e]]) seen[e] = true;
  }
  return faces;
}

}  // namespace

PlaneGraph PlaneGraph::from_rotations(const std::vector<std::vector<Vertex>>& cw_neighbors,
                                      std::optional<std::vector<Vertex>> outer_cycle) {
  const int n = static_cast<int>(cw_neighbors.size());
  std::vector<Vertex> origin;
  std::vector<HalfEdge> next;
  std::vector<Vertex> target;
  for (Vertex u = 0; u < n; ++u) {
    const auto& nb = cw_neighbors[u];
    const int base = static_cast<int>(origin.size());
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const Vertex v = nb[k];
      if (v < 0 || v >= n) throw PreconditionError("neighbour out of range at vertex " + std::to_string(u + 1));
      if (v == u) throw PreconditionError("loop at vertex " + std::to_string(u + 1));
      origin.push_back(u);
      target.push_back(v);
      next.push_back(base + static_cast<int>((k + 1) % nb.size()));
    }
  }

  // Occurrences of each ordered pair, in rotation order.
  std::map<std::pair<Vertex, Vertex>, std::vector<HalfEdge>> occ;
  for (HalfEdge h = 0; h < static_cast<HalfEdge>(origin.size()); ++h) occ[{origin[h], target[h]}].push_back(h);

  std::vector<HalfEdge> twin(origin.size(), kNone);
  struct Group {
    std::vector<HalfEdge> fwd, back;
  };
  std::vector<Group> multi;
  for (const auto& [key, hs] : occ) {
    const auto [u, v] = key;
    if (u > v) continue;
    auto it = occ.find({v, u});
    if (it == occ.end() || it->second.size() != hs.size())
      throw PreconditionError("edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                              " is not listed symmetrically");
    if (hs.size() == 1) {
      twin[hs[0]] = it->second[0];
      twin[it->second[0]] = hs[0];
    } else {
      multi.push_back({hs, it->second});
    }
  }

  if (!multi.empty()) {
    // Parallel edges: search twin pairings until the embedding is spherical.
    const int edges = static_cast<int>(origin.size()) / 2;
    const int want_faces = 2 - n + edges;
    std::vector<std::vector<int>> perm(multi.size());
    for (std::size_t i = 0; i < multi.size(); ++i) {
      perm[i].resize(multi[i].fwd.size());
      std::iota(perm[i].begin(), perm[i].end(), 0);
    }
    long budget = 200000;
    bool found = false;
    while (budget-- > 0) {
      for (std::size_t i = 0; i < multi.size(); ++i)
        for (std::size_t k = 0; k < perm[i].size(); ++k) {
          twin[multi[i].fwd[k]] = multi[i].back[perm[i][k]];
          twin[multi[i].back[perm[i][k]]] = multi[i].fwd[k];
        }
      if (count_faces(twin, next) == want_faces) {
        found = true;
        break;
      }
      std::size_t i = 0;
      while (i < perm.size() && !std::next_permutation(perm[i].begin(), perm[i].end())) ++i;
      if (i == perm.size()) break;
    }
    if (!found) throw PreconditionError("rotation system is not a sphere embedding");
  }

  PlaneGraph g = from_half_edges(n, std::move(origin), std::move(twin), std::move(next), 0);
  if (outer_cycle) {
    const int f = g.find_face(*outer_cycle);
    if (f == kNone) throw PreconditionError("outer cycle is not a face boundary");
    g = g.with_outer_face(f);
  }
  return g;
}

PlaneGraph PlaneGraph::from_faces(int vertex_count, const std::vector<std::vector<Vertex>>& faces, int outer) {
  std::map<std::pair<Vertex, Vertex>, HalfEdge> id;
  std::vector<Vertex> origin;
  auto half = [&](Vertex a, Vertex b) {
    auto [it, fresh] = id.try_emplace({a, b}, static_cast<HalfEdge>(origin.size()));
    if (fresh) origin.push_back(a);
    return it->second;
  };
  for (const auto& f : faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      half(f[i], f[(i + 1) % f.size()]);
      half(f[(i + 1) % f.size()], f[i]);
    }
  const auto m = origin.size();
  std::vector<HalfEdge> twin(m), next(m, kNone);
  for (const auto& [key, h] : id) twin[h] = id.at({key.second, key.first});
  // A face walk a->b->c means next_cw(b->a) = b->c.
  for (const auto& f : faces) {
    const std::size_t k = f.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex a = f[i], b = f[(i + 1) % k], c = f[(i + 2) % k];
      HalfEdge& slot = next[id.at({b, a})];
      if (slot != kNone) throw PreconditionError("faces are not consistently oriented");
      slot = id.at({b, c});
    }
  }
  if (std::find(next.begin(), next.end(), kNone) != next.end()) throw PreconditionError("face list has a boundary");
  const auto& of = faces.at(static_cast<std::size_t>(outer));
  return from_half_edges(vertex_count, std::move(origin), std::move(twin), std::move(next), id.at({of[0], of[1]}));
}

PlaneGraph PlaneGraph::from_half_edges(int vertex_count, std::vector<Vertex> origin,
                                       std::vector<HalfEdge> twin, std::vector<HalfEdge> next_cw,
                                       HalfEdge outer) {
  const auto m = origin.size();
  if (twin.size() != m || next_cw.size() != m) throw PreconditionError("half-edge arrays differ in length");
  for (std::size_t h = 0; h < m; ++h) {
    const HalfEdge t = twin[h];
    if (t < 0 || static_cast<std::size_t>(t) >= m || t == static_cast<HalfEdge>(h) || twin[t] != static_cast<HalfEdge>(h))
      throw PreconditionError("twin is not a fixed-point-free involution");
    if (origin[t] == origin[h]) throw PreconditionError("loops are not allowed");
    const HalfEdge nx = next_cw[h];
    if (nx < 0 || static_cast<std::size_t>(nx) >= m || origin[nx] != origin[h])
      throw PreconditionError("rotation leaves its vertex");
  }
  PlaneGraph g;
  g.n_ = vertex_count;
  g.origin_ = std::move(origin);
  g.twin_ = std::move(twin);
  g.next_ = std::move(next_cw);
  g.finalize(m == 0 ? kNone : outer);
  if (g.is_connected() && g.vertex_count() - g.edge_count() + g.face_count() != 2)
    throw PreconditionError("rotation system is not a sphere embedding (Euler check failed)");
  return g;
}

void PlaneGraph::finalize(HalfEdge outer) {
  const int m = half_edge_count();
  prev_.assign(m, kNone);
  for (HalfEdge h = 0; h < m; ++h) {
    if (prev_[next_[h]] != kNone) throw PreconditionError("rotation is not a permutation");
    prev_[next_[h]] = h;
  }
  first_.assign(n_, kNone);
  degree_.assign(n_, 0);
  for (HalfEdge h = 0; h < m; ++h) {
    if (first_[origin_[h]] == kNone) first_[origin_[h]] = h;
    ++degree_[origin_[h]];
  }
  for (Vertex v = 0; v < n_; ++v) {
    if (first_[v] == kNone) continue;
    int len = 0;
    HalfEdge h = first_[v];
    do {
      ++len;
      h = next_[h];
    } while (h != first_[v]);
    if (len != degree_[v]) throw PreconditionError("rotation at a vertex is not a single cycle");
  }
  adj_.assign(n_, {});
  for (HalfEdge h = 0; h < m; ++h) adj_[origin_[h]].push_back(target(h));
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  face_of_.assign(m, kNone);
  faces_.clear();
  for (HalfEdge h = 0; h < m; ++h) {
    if (face_of_[h] != kNone) continue;
    const int f = static_cast<int>(faces_.size());
    faces_.emplace_back();
    for (HalfEdge e = h; face_of_[e] == kNone; e = face_next(e)) {
      face_of_[e] = f;
      faces_.back().push_back(e);
    }
  }
  outer_face_ = outer == kNone ? kNone : face_of_[outer];
}

int PlaneGraph::min_degree() const {
  return n_ == 0 ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

int PlaneGraph::max_degree() const {
  return n_ == 0 ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

std::vector<HalfEdge> PlaneGraph::rotation(Vertex v) const {
  std::vector<HalfEdge> out;
  if (first_[v] == kNone) return out;
  HalfEdge h = first_[v];
  do {
    out.push_back(h);
    h = next_[h];
  } while (h != first_[v]);
  return out;
}

std::vector<Vertex> PlaneGraph::cw_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (HalfEdge h : rotation(v)) out.push_back(target(h));
  return out;
}

bool PlaneGraph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

HalfEdge PlaneGraph::find_half_edge(Vertex u, Vertex v) const {
  if (first_[u] == kNone) return kNone;
  HalfEdge h = first_[u];
  do {
    if (target(h) == v) return h;
    h = next_[h];
  } while (h != first_[u]);
  return kNone;
}

std::vector<Vertex> PlaneGraph::face_vertices(int f) const {
  std::vector<Vertex> out;
  for (HalfEdge h : faces_[f]) out.push_back(origin_[h]);
  return out;
}

int PlaneGraph::find_face(std::span<const Vertex> cycle) const {
  const std::size_t k = cycle.size();
  for (int f = 0; f < face_count(); ++f) {
    if (faces_[f].size() != k) continue;
    const auto fv = face_vertices(f);
    for (std::size_t s = 0; s < k; ++s)
      for (int dir : {1, -1}) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
          const long kk = static_cast<long>(k);
          const long j = ((static_cast<long>(s) + dir * static_cast<long>(i)) % kk + kk) % kk;
          ok = fv[j] == cycle[i];
        }
        if (ok) return f;
      }
  }
  return kNone;
}

bool PlaneGraph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[u])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

bool PlaneGraph::has_parallel_edges() const {
  for (Vertex v = 0; v < n_; ++v)
    if (static_cast<int>(adj_[v].size()) != degree_[v]) return true;
  return false;
}

PlaneGraph PlaneGraph::with_outer_face(int face) const {
  PlaneGraph g = *this;
  g.outer_face_ = face;
  return g;
}

PlaneGraph PlaneGraph::mirrored() const {
  // Reversing every rotation turns each face walk around; the old outer face
  // corresponds to the face traced through the twin of its half-edges.
  HalfEdge outer = outer_face_ == kNone ? kNone : twin_[faces_[outer_face_].front()];
  return from_half_edges(n_, origin_, twin_, prev_, outer);
}

// --- cycles ----------------------------------------------------------------

bool Cycle::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Cycle::has_in_interior(Vertex v) const {
  return std::binary_search(interior.begin(), interior.end(), v);
}

Cycle cycle_sides(const PlaneGraph& g, std::span<const Vertex> cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) throw PreconditionError("a cycle needs at least three vertices");
  std::vector<bool> on(g.vertex_count(), false);
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("cycle vertex out of range");
    if (on[v]) throw PreconditionError("cycle repeats a vertex");
    on[v] = true;
  }
  std::vector<bool> cut(g.half_edge_count(), false);
  for (int i = 0; i < k; ++i) {
    const HalfEdge h = g.find_half_edge(cycle[i], cycle[(i + 1) % k]);
    if (h == kNone) throw PreconditionError("consecutive cycle vertices are not adjacent");
    cut[h] = cut[g.twin(h)] = true;
  }
  // Faces on the same side are joined across every edge not on the cycle.
  std::vector<int> parent(g.face_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (HalfEdge h = 0; h < g.half_edge_count(); ++h)
    if (!cut[h]) parent[find(g.face_of(h))] = find(g.face_of(g.twin(h)));
  const int outer_root = find(g.outer_face() == kNone ? 0 : g.outer_face());

  Cycle c;
  c.vertices.assign(cycle.begin(), cycle.end());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (on[v]) continue;
    const HalfEdge h = g.first_half_edge(v);
    if (h == kNone || find(g.face_of(h)) == outer_root)
      c.exterior.push_back(v);
    else
      c.interior.push_back(v);
  }
  return c;
}

MpgCheck validate_mpg(const PlaneGraph& g) {
  if (!g.is_connected()) throw PreconditionError("graph is disconnected");
  if (g.has_parallel_edges()) throw PreconditionError("graph has parallel edges");
  MpgCheck r;
  r.min_degree = g.min_degree();
  r.max_degree = g.max_degree();
  r.is_mpg = g.vertex_count() >= 3 && g.edge_count() == 3 * g.vertex_count() - 6;
  for (int f = 0; f < g.face_count() && r.is_mpg; ++f) r.is_mpg = g.face(f).size() == 3;
  return r;
}

bool validate_smpg(const PlaneGraph& g, std::span<const Vertex> outer) {
  const int f = g.find_face(outer);
  if (f == kNone) throw PreconditionError("outer cycle is not a face boundary");
  if (outer.size() < 4) return false;
  std::vector<Vertex> sorted(outer.begin(), outer.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int h = 0; h < g.face_count(); ++h)
    if (h != f && g.face(h).size() != 3) return false;
  return true;
}

SmpgView smpg_view(const PlaneGraph& g) {
  if (g.outer_face() == kNone) throw PreconditionError("graph has no outer face");
  const auto outer = g.face_vertices(g.outer_face());
  if (!validate_smpg(g, outer)) throw PreconditionError("graph is not an SMPG with respect to its outer face");
  return {g, cycle_sides(g, outer)};
}

// --- canonical form --------------------------------------------------------

namespace {

struct CanonicalCode {
  std::vector<int> code;
  HalfEdge root = kNone;
  int dir = 0;
};

CanonicalCode best_code(const PlaneGraph& g) {
  const int n = g.vertex_count();
  const int m = g.half_edge_count();
  const bool multi = g.has_parallel_edges();
  const int dmin = g.min_degree();

  CanonicalCode best;
  std::vector<int> code;
  std::vector<int> label(n), entry(n), order;
  order.reserve(n);
  code.reserve(3 * m + n);

  for (int dir = 0; dir < 2; ++dir) {
    auto step = [&](HalfEdge h) { return dir == 0 ? g.next_cw(h) : g.prev_cw(h); };
    for (HalfEdge root = 0; root < m; ++root) {
      if (g.degree(g.origin(root)) != dmin) continue;
      std::fill(label.begin(), label.end(), -1);
      order.clear();
      code.clear();
      int cmp = best.code.empty() ? -1 : 0;  // <0 better, 0 equal so far
      auto emit = [&](int x) {
        if (cmp == 0) {
          const int b = best.code[code.size()];
          if (x < b) cmp = -1;
          else if (x > b) cmp = 1;
        }
        code.push_back(x);
      };
      label[g.origin(root)] = 0;
      entry[g.origin(root)] = root;
      order.push_back(g.origin(root));
      for (std::size_t qi = 0; qi < order.size() && cmp <= 0; ++qi) {
        const Vertex u = order[qi];
        emit(g.degree(u));
        HalfEdge e = entry[u];
        do {
          const Vertex t = g.target(e);
          if (label[t] < 0) {
            label[t] = static_cast<int>(order.size());
            entry[t] = g.twin(e);
            order.push_back(t);
          }
          emit(label[t]);
          if (multi) {
            int pos = 0;
            for (HalfEdge f = entry[t]; f != g.twin(e); f = step(f)) ++pos;
            emit(pos);
          }
          e = step(e);
        } while (e != entry[u] && cmp <= 0);
      }
      if (cmp < 0) best = {code, root, dir};
    }
  }
  return best;
}

}  // namespace

std::string canonical_form(const PlaneGraph& g) {
  const auto best = best_code(g);
  std::string out;
  out.reserve(2 * best.code.size() + 4);
  auto put = [&](int x) {
    out.push_back(static_cast<char>((x >> 8) & 0xff));
    out.push_back(static_cast<char>(x & 0xff));
  };
  put(g.vertex_count());
  put(g.edge_count());
  for (int x : best.code) put(x);
  return out;
}

PlaneGraph canonical_graph(const PlaneGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return g;
  const auto best = best_code(g);
  auto step = [&](HalfEdge h) { return best.dir == 0 ? g.next_cw(h) : g.prev_cw(h); };
  std::vector<int> label(n, -1);
  std::vector<HalfEdge> entry(n, kNone);
  std::vector<Vertex> order{g.origin(best.root)};
  label[order[0]] = 0;
  entry[order[0]] = best.root;
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    HalfEdge e = entry[order[qi]];
    do {
      const Vertex t = g.target(e);
      if (label[t] < 0) {
        label[t] = static_cast<int>(order.size());
        entry[t] = g.twin(e);
        order.push_back(t);
      }
      e = step(e);
    } while (e != entry[order[qi]]);
  }
  // Half-edge k of the new graph is the k-th outgoing edge in BFS order.
  std::vector<HalfEdge> new_id(g.half_edge_count(), kNone);
  std::vector<HalfEdge> old_of;
  for (Vertex u : order) {
    HalfEdge e = entry[u];
    do {
      new_id[e] = static_cast<HalfEdge>(old_of.size());
      old_of.push_back(e);
      e = step(e);
    } while (e != entry[u]);
  }
  const auto m = old_of.size();
  std::vector<Vertex> origin(m);
  std::vector<HalfEdge> twin(m), next(m);
  for (std::size_t k = 0; k < m; ++k) {
    const HalfEdge e = old_of[k];
    origin[k] = label[g.origin(e)];
    twin[k] = new_id[g.twin(e)];
    next[k] = new_id[step(e)];
  }
  return PlaneGraph::from_half_edges(n, std::move(origin), std::move(twin), std::move(next), 0);
}

// --- editor ----------------------------------------------------------------

RotationEditor::RotationEditor(const PlaneGraph& g) {
  const int m = g.half_edge_count();
  for (HalfEdge h = 0; h < m; ++h) {
    origin_.push_back(g.origin(h));
    twin_.push_back(g.twin(h));
    next_.push_back(g.next_cw(h));
    prev_.push_back(g.prev_cw(h));
  }
  alive_.assign(m, true);
  for (Vertex v = 0; v < g.vertex_count(); ++v) first_.push_back(g.first_half_edge(v));
  removed_.assign(g.vertex_count(), false);
}

Vertex RotationEditor::add_vertex() {
  first_.push_back(kNone);
  removed_.push_back(false);
  return static_cast<Vertex>(first_.size()) - 1;
}

void RotationEditor::link_after(HalfEdge h, Vertex w, HalfEdge after) {
  origin_[h] = w;
  if (after == kNone) {
    if (first_[w] != kNone) throw PreconditionError("insertion point required at a non-isolated vertex");
    next_[h] = prev_[h] = h;
    first_[w] = h;
    return;
  }
  if (origin_[after] != w || !alive_[after]) throw PreconditionError("insertion point is not at the vertex");
  next_[h] = next_[after];
  prev_[h] = after;
  prev_[next_[after]] = h;
  next_[after] = h;
}

void RotationEditor::unlink(HalfEdge h) {
  const Vertex w = origin_[h];
  if (next_[h] == h) {
    first_[w] = kNone;
  } else {
    prev_[next_[h]] = prev_[h];
    next_[prev_[h]] = next_[h];
    if (first_[w] == h) first_[w] = next_[h];
  }
  next_[h] = prev_[h] = h;
}

HalfEdge RotationEditor::add_edge(Vertex u, HalfEdge after_u, Vertex v, HalfEdge after_v) {
  if (u == v) throw PreconditionError("loops are not allowed");
  const HalfEdge a = static_cast<HalfEdge>(origin_.size());
  const HalfEdge b = a + 1;
  for (int i = 0; i < 2; ++i) {
    origin_.push_back(kNone);
    next_.push_back(kNone);
    prev_.push_back(kNone);
    alive_.push_back(true);
  }
  twin_.push_back(b);
  twin_.push_back(a);
  link_after(a, u, after_u);
  link_after(b, v, after_v);
  return a;
}

void RotationEditor::remove_edge(HalfEdge h) {
  const HalfEdge t = twin_[h];
  unlink(h);
  unlink(t);
  alive_[h] = alive_[t] = false;
}

void RotationEditor::move_half_edge(HalfEdge h, Vertex w, HalfEdge after) {
  unlink(h);
  link_after(h, w, after);
}

void RotationEditor::remove_vertex(Vertex v) {
  if (first_[v] != kNone) throw PreconditionError("only isolated vertices can be removed");
  removed_[v] = true;
}

std::vector<HalfEdge> RotationEditor::rotation(Vertex v) const {
  std::vector<HalfEdge> out;
  if (first_[v] == kNone) return out;
  HalfEdge h = first_[v];
  do {
    out.push_back(h);
    h = next_[h];
  } while (h != first_[v]);
  return out;
}

HalfEdge RotationEditor::find(Vertex u, Vertex v) const {
  for (HalfEdge h : rotation(u))
    if (target(h) == v) return h;
  return kNone;
}

std::vector<Vertex> RotationEditor::vertex_map() const {
  std::vector<Vertex> map(first_.size(), kNone);
  Vertex next_id = 0;
  for (std::size_t v = 0; v < first_.size(); ++v)
    if (!removed_[v]) map[v] = next_id++;
  return map;
}

PlaneGraph RotationEditor::build(HalfEdge outer) const {
  const auto vmap = vertex_map();
  std::vector<HalfEdge> hmap(origin_.size(), kNone);
  HalfEdge next_id = 0;
  for (std::size_t h = 0; h < origin_.size(); ++h)
    if (alive_[h]) hmap[h] = next_id++;
  std::vector<Vertex> origin(next_id);
  std::vector<HalfEdge> twin(next_id), next(next_id);
  for (std::size_t h = 0; h < origin_.size(); ++h) {
    if (!alive_[h]) continue;
    const HalfEdge k = hmap[h];
    origin[k] = vmap[origin_[h]];
    if (origin[k] == kNone) throw PreconditionError("removed vertex still has edges");
    twin[k] = hmap[twin_[h]];
    next[k] = hmap[next_[h]];
  }
  const int n = static_cast<int>(std::count(removed_.begin(), removed_.end(), false));
  if (outer != kNone && !alive_[outer]) throw PreconditionError("outer half-edge was removed");
  return PlaneGraph::from_half_edges(n, std::move(origin), std::move(twin), std::move(next),
                                     outer == kNone ? kNone : hmap[outer]);
}

}  // namespace mpg
