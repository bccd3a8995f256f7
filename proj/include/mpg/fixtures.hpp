#pragma once

#include "mpg/plane_graph.hpp"

namespace mpg::fixtures {

PlaneGraph k4();
PlaneGraph octahedron();
PlaneGraph icosahedron();
/// Smallest graph with an unchanged bichromatic cycle: order 8, degrees 4^4 5^4.
/// Vertices 0..3 form the separating 4-cycle.
PlaneGraph ubc_order8();
/// Inner side of ubc_order8 with outer face 0 3 2 1.
PlaneGraph b4_module();
/// Double wheel: cycle of length k (vertices 0..k-1) plus two poles k, k+1.
PlaneGraph bipyramid(int k);

}  // namespace mpg::fixtures
