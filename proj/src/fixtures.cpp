#include "mpg/fixtures.hpp"

namespace mpg::fixtures {

PlaneGraph k4() { return PlaneGraph::from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}); }

PlaneGraph octahedron() { return bipyramid(4); }

PlaneGraph bipyramid(int k) {
  const int top = k, bottom = k + 1;
  std::vector<std::vector<Vertex>> faces;
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    faces.push_back({top, i, j});
    faces.push_back({bottom, j, i});
  }
  return PlaneGraph::from_faces(k + 2, faces);
}

PlaneGraph icosahedron() {
  std::vector<std::vector<Vertex>> faces;
  for (int i = 0; i < 5; ++i) {
    const int u = 1 + i, u1 = 1 + (i + 1) % 5;
    const int l = 6 + i, l1 = 6 + (i + 1) % 5;
    faces.push_back({0, u, u1});
    faces.push_back({u, l, u1});
    faces.push_back({l, l1, u1});
    faces.push_back({11, l1, l});
  }
  return PlaneGraph::from_faces(12, faces);
}

namespace {
constexpr int v1 = 0, v2 = 1, v3 = 2, v4 = 3, a = 4, b = 5, c = 6, d = 7;
const std::vector<std::vector<Vertex>> kInner{{v1, v2, a}, {v2, v3, a}, {a, v3, b},
                                              {a, b, v1},  {b, v3, v4}, {b, v4, v1}};
}  // namespace

PlaneGraph ubc_order8() {
  auto faces = kInner;
  for (auto f : std::vector<std::vector<Vertex>>{
           {v3, v2, c}, {v4, v3, c}, {v1, v4, d}, {v2, v1, d}, {c, v2, d}, {d, v4, c}})
    faces.push_back(f);
  return PlaneGraph::from_faces(8, faces);
}

PlaneGraph b4_module() {
  std::vector<std::vector<Vertex>> faces{{v1, v4, v3, v2}};
  for (const auto& f : kInner) faces.push_back(f);
  return PlaneGraph::from_faces(6, faces, 0);
}

}  // namespace mpg::fixtures
