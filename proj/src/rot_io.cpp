#include "mpg/rot_io.hpp"

#include <fstream>
#include <sstream>

#include "mpg/errors.hpp"

namespace mpg {

namespace {

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

int parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

PlaneGraph read_rot(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<std::vector<Vertex>> rot;
  std::vector<bool> seen;
  std::optional<std::vector<Vertex>> outer;
  int outer_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    if (n < 0) {
      std::istringstream ss(line);
      std::string tok, extra;
      ss >> tok;
      if (ss >> extra) throw ParseError(line_no, "first line must hold only the vertex count");
      n = parse_int(tok, line_no);
      if (n < 1) throw ParseError(line_no, "vertex count must be positive");
      rot.assign(n, {});
      seen.assign(n, false);
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'v: neighbours' or 'outer: cycle'");
    std::string head = line.substr(0, colon);
    head.erase(0, head.find_first_not_of(" \t"));
    head.erase(head.find_last_not_of(" \t") + 1);
    std::istringstream ss(line.substr(colon + 1));
    std::vector<Vertex> list;
    std::string tok;
    while (ss >> tok) {
      const int w = parse_int(tok, line_no);
      if (w < 1 || w > n) throw ParseError(line_no, "vertex " + tok + " out of range 1.." + std::to_string(n));
      list.push_back(w - 1);
    }
    if (head == "outer") {
      outer = std::move(list);
      outer_line = line_no;
      continue;
    }
    const int v = parse_int(head, line_no);
    if (v < 1 || v > n) throw ParseError(line_no, "vertex " + head + " out of range");
    if (seen[v - 1]) throw ParseError(line_no, "vertex " + head + " listed twice");
    seen[v - 1] = true;
    for (Vertex w : list)
      if (w == v - 1) throw ParseError(line_no, "loop at vertex " + head);
    rot[v - 1] = std::move(list);
  }
  if (n < 0) throw ParseError(line_no, "empty input");
  try {
    PlaneGraph g = PlaneGraph::from_rotations(rot, outer);
    return g;
  } catch (const ParseError&) {
    throw;
  } catch (const PreconditionError& e) {
    throw ParseError(outer && std::string(e.what()).find("outer") != std::string::npos ? outer_line : line_no,
                     e.what());
  }
}

PlaneGraph read_rot_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  return read_rot(in);
}

PlaneGraph parse_rot(const std::string& text) {
  std::istringstream in(text);
  return read_rot(in);
}

void write_rot(std::ostream& out, const PlaneGraph& g) {
  out << g.vertex_count() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << v + 1 << ':';
    for (Vertex w : g.cw_neighbors(v)) out << ' ' << w + 1;
    out << '\n';
  }
  if (g.outer_face() != kNone) {
    out << "outer:";
    for (Vertex v : g.face_vertices(g.outer_face())) out << ' ' << v + 1;
    out << '\n';
  }
}

std::string format_rot(const PlaneGraph& g) {
  std::ostringstream out;
  write_rot(out, g);
  return out.str();
}

Coloring parse_coloring(const std::string& text, int vertex_count) {
  Coloring f(vertex_count);
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'v:color'");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    const int v = parse_int(trim(line.substr(0, colon)), line_no);
    const int c = parse_int(trim(line.substr(colon + 1)), line_no);
    if (v < 1 || v > vertex_count) throw ParseError(line_no, "vertex out of range");
    if (c < 1 || c > kColors) throw ParseError(line_no, "color must be 1..4");
    f[v - 1] = static_cast<Color>(c);
  }
  return f;
}

std::string format_coloring(const Coloring& f) {
  std::ostringstream out;
  for (Vertex v = 0; v < f.size(); ++v) out << v + 1 << ':' << static_cast<int>(f[v]) << '\n';
  return out.str();
}

}  // namespace mpg
