#pragma once

#include <iosfwd>
#include <string>

#include "mpg/coloring.hpp"
#include "mpg/plane_graph.hpp"

namespace mpg {

/// Reads the `.rot` text format:
///
///     # comment
///     n
///     v: w1 w2 ... wk      (clockwise neighbours, 1-based, repeats = parallel edges)
///     outer: va vb vc ...  (optional; default is the face traced from the
///                           first listed half-edge)
PlaneGraph read_rot(std::istream& in);
PlaneGraph read_rot_file(const std::string& path);
PlaneGraph parse_rot(const std::string& text);

void write_rot(std::ostream& out, const PlaneGraph& g);
std::string format_rot(const PlaneGraph& g);

/// Coloring text: one `v:color` pair per line (1-based vertex ids).
Coloring parse_coloring(const std::string& text, int vertex_count);
std::string format_coloring(const Coloring& f);

}  // namespace mpg
