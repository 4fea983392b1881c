#include "shadows/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace shadows {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ShadowError(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string strip(const std::string& s) {
  const auto hash = s.find('#');
  std::string t = hash == std::string::npos ? s : s.substr(0, hash);
  const auto a = t.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = t.find_last_not_of(" \t\r");
  return t.substr(a, b - a + 1);
}

template <class F>
void for_lines(const std::string& text, F&& f) {
  std::istringstream is(text);
  std::string raw;
  int n = 0;
  while (std::getline(is, raw)) {
    ++n;
    const std::string line = strip(raw);
    if (!line.empty()) f(n, line);
  }
}

int to_int(int line, const std::string& s) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) fail(line, "not an integer: " + s);
    return v;
  } catch (const std::logic_error&) {
    fail(line, "not an integer: " + s);
  }
}

}  // namespace

std::string format_gleam(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

int parse_gleam(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return 2 * to_int(0, text);
  if (text.substr(slash + 1) != "2") throw ShadowError(ErrorCode::ParseError, "gleam denominator must be 2: " + text);
  return to_int(0, text.substr(0, slash));
}

ShadowDocument parse_document(const std::string& text) {
  static const std::regex vertices_re(R"(vertices\s*:\s*(-?\d+))");
  static const std::regex edge_re(R"(edge\s+(\d+)\s*:\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  static const std::regex wings_re(R"(wings\s+(\d+)\s*:\s*(\d)\s+(\d)\s+(\d)\s*\|?\s*(\d)\s+(\d)\s+(\d))");
  static const std::regex gleam_re(R"(gleam\s+(\d+)\s*:\s*(-?\d+(?:/2)?))");
  static const std::regex orient_re(R"(orient\s+(\d+)\s*:\s*([+-]))");
  static const std::regex point_re(R"(point\s+(\d+)\s+([+-])\s+([+-]?\d+))");
  ShadowDocument doc;
  bool have_vertices = false;
  std::vector<int> edge_line, wings_line;
  std::vector<std::pair<int, std::pair<int, int>>> gleams, orients;  // line, (region, value)
  for_lines(text, [&](int n, const std::string& line) {
    std::smatch m;
    if (std::regex_match(line, m, vertices_re)) {
      if (have_vertices) fail(n, "vertices given twice");
      doc.poly.vertex_count = to_int(n, m[1]);
      have_vertices = true;
    } else if (std::regex_match(line, m, edge_re)) {
      const int id = to_int(n, m[1]);
      if (id >= static_cast<int>(doc.poly.edges.size())) {
        doc.poly.edges.resize(id + 1);
        edge_line.resize(id + 1, 0);
        wings_line.resize(id + 1, 0);
      }
      if (edge_line[id]) fail(n, "edge " + std::to_string(id) + " given twice");
      edge_line[id] = n;
      doc.poly.edges[id].ends[0] = {to_int(n, m[2]), to_int(n, m[3])};
      doc.poly.edges[id].ends[1] = {to_int(n, m[4]), to_int(n, m[5])};
    } else if (std::regex_match(line, m, wings_re)) {
      const int id = to_int(n, m[1]);
      if (id >= static_cast<int>(doc.poly.edges.size())) {
        doc.poly.edges.resize(id + 1);
        edge_line.resize(id + 1, 0);
        wings_line.resize(id + 1, 0);
      }
      if (wings_line[id]) fail(n, "wings of edge " + std::to_string(id) + " given twice");
      wings_line[id] = n;
      for (int w = 0; w < 3; ++w) {
        doc.poly.edges[id].wings[0][w] = to_int(n, m[2 + w]);
        doc.poly.edges[id].wings[1][w] = to_int(n, m[5 + w]);
      }
    } else if (std::regex_match(line, m, gleam_re)) {
      try {
        gleams.push_back({n, {to_int(n, m[1]), parse_gleam(m[2])}});
      } catch (const ShadowError& e) {
        fail(n, e.what());
      }
    } else if (std::regex_match(line, m, orient_re)) {
      orients.push_back({n, {to_int(n, m[1]), m[2] == "+" ? 1 : -1}});
    } else if (std::regex_match(line, m, point_re)) {
      const int idx = to_int(n, m[3]);
      if (idx == 0) fail(n, "complex point of index 0");
      doc.points.push_back({to_int(n, m[1]), {m[2] == "+" ? PointSign::Positive : PointSign::Negative, idx}});
    } else {
      fail(n, "unrecognized line: " + line);
    }
  });
  if (!have_vertices) fail(0, "missing `vertices:` section");
  for (std::size_t e = 0; e < doc.poly.edges.size(); ++e) {
    if (!edge_line[e]) fail(wings_line[e], "edge " + std::to_string(e) + " has wings but no ends");
    if (!wings_line[e]) fail(edge_line[e], "edge " + std::to_string(e) + " has no wings");
  }
  // Region ids need the traced polyhedron; sizes are checked against it.
  int regions = -1;
  if (!gleams.empty() || !orients.empty() || !doc.points.empty()) {
    try {
      regions = static_cast<int>(trace_regions(doc.poly).size());
    } catch (const ShadowError& e) {
      throw ShadowError(e.code(), std::string("polyhedron section does not trace: ") + e.what());
    }
  }
  if (!gleams.empty()) {
    doc.gleam2 = std::vector<int>(regions, 0);
    std::vector<int> seen(regions, 0);
    for (const auto& [n, rv] : gleams) {
      if (rv.first >= regions) fail(n, "region " + std::to_string(rv.first) + " does not exist");
      if (seen[rv.first]++) fail(n, "gleam of region " + std::to_string(rv.first) + " given twice");
      (*doc.gleam2)[rv.first] = rv.second;
    }
  }
  if (!orients.empty()) {
    doc.orientation = std::vector<int>(regions, 0);
    for (const auto& [n, rv] : orients) {
      if (rv.first >= regions) fail(n, "region " + std::to_string(rv.first) + " does not exist");
      if ((*doc.orientation)[rv.first] != 0) fail(n, "orientation of region " + std::to_string(rv.first) + " given twice");
      (*doc.orientation)[rv.first] = rv.second;
    }
    for (int r = 0; r < regions; ++r)
      if ((*doc.orientation)[r] == 0) fail(orients.back().first, "region " + std::to_string(r) + " has no orientation");
  }
  for (const auto& pt : doc.points)
    if (pt.first >= regions) fail(0, "point in missing region " + std::to_string(pt.first));
  return doc;
}

std::string print_document(const ShadowDocument& doc) {
  std::ostringstream os;
  os << "vertices: " << doc.poly.vertex_count << '\n';
  for (std::size_t e = 0; e < doc.poly.edges.size(); ++e) {
    const Edge& ed = doc.poly.edges[e];
    os << "edge " << e << ": (" << ed.ends[0].vertex << ',' << ed.ends[0].slot << ") (" << ed.ends[1].vertex << ','
       << ed.ends[1].slot << ")\n";
  }
  for (std::size_t e = 0; e < doc.poly.edges.size(); ++e) {
    const Edge& ed = doc.poly.edges[e];
    os << "wings " << e << ": " << ed.wings[0][0] << ' ' << ed.wings[0][1] << ' ' << ed.wings[0][2] << " | "
       << ed.wings[1][0] << ' ' << ed.wings[1][1] << ' ' << ed.wings[1][2] << '\n';
  }
  if (doc.gleam2)
    for (std::size_t r = 0; r < doc.gleam2->size(); ++r) os << "gleam " << r << ": " << format_gleam((*doc.gleam2)[r]) << '\n';
  if (doc.orientation)
    for (std::size_t r = 0; r < doc.orientation->size(); ++r)
      os << "orient " << r << ": " << ((*doc.orientation)[r] > 0 ? '+' : '-') << '\n';
  auto pts = doc.points;
  std::sort(pts.begin(), pts.end());
  for (const auto& [r, p] : pts) os << "point " << r << ' ' << sign_char(p.sign) << ' ' << p.index << '\n';
  return os.str();
}

ShadowDocument document_of(const Polyhedron& p) { return ShadowDocument{p.data(), std::nullopt, std::nullopt, {}}; }

ShadowDocument document_of(const Shadow& s) {
  ShadowDocument d = document_of(s.poly);
  d.gleam2 = s.gleam.doubled;
  return d;
}

ShadowDocument document_of(const BranchedShadow& s) {
  ShadowDocument d = document_of(s.shadow());
  d.orientation = s.branching.orientation;
  return d;
}

ShadowDocument document_of(const DecoratedShadow& dec) {
  ShadowDocument d = document_of(dec.shadow);
  for (std::size_t r = 0; r < dec.points.size(); ++r)
    for (const ComplexPoint& p : dec.points[r]) d.points.push_back({static_cast<int>(r), p});
  return d;
}

Shadow shadow_of(const ShadowDocument& doc) {
  Polyhedron p(doc.poly);
  Gleam g = doc.gleam2 ? Gleam{*doc.gleam2} : minimal_gleam(p);
  return Shadow(std::move(p), std::move(g));
}

BranchedShadow branched_of(const ShadowDocument& doc) {
  if (!doc.orientation) throw ShadowError(ErrorCode::InvalidArgument, "document has no orient section");
  Shadow s = shadow_of(doc);
  return BranchedShadow(std::move(s.poly), std::move(s.gleam), Branching{*doc.orientation});
}

DecoratedShadow decorated_of(const ShadowDocument& doc) {
  DecoratedShadow d(branched_of(doc));
  for (const auto& [r, p] : doc.points) d.add(r, p);
  return d;
}

std::vector<MoveInstance> parse_script(const std::string& text) {
  std::vector<MoveInstance> out;
  for_lines(text, [&](int n, const std::string& line) {
    try {
      out.push_back(parse_move(line));
    } catch (const ShadowError& e) {
      fail(n, e.what());
    }
  });
  return out;
}

std::string print_script(const std::vector<MoveInstance>& moves) {
  std::string s;
  for (const MoveInstance& m : moves) s += format_move(m) + '\n';
  return s;
}

std::vector<CxRewrite> parse_rewrite_script(const std::string& text) {
  std::vector<CxRewrite> out;
  for_lines(text, [&](int n, const std::string& line) {
    try {
      out.push_back(parse_rewrite(line));
    } catch (const ShadowError& e) {
      fail(n, e.what());
    }
  });
  return out;
}

std::string print_rewrite_script(const std::vector<CxRewrite>& steps) {
  std::string s;
  for (const CxRewrite& r : steps) s += format_rewrite(r) + '\n';
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ShadowError(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace shadows
