#include "shadows/tables.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "shadows/fixtures.hpp"
#include "shadows/blowup.hpp"
#include "shadows/invariants.hpp"

namespace shadows {

namespace {

constexpr const char* kGoldenOneTwo =
    "case  R1..R6  r7  [dEul]  [dgl]  [dc1]\n"
    "1     ++++++  +   0       0      0\n"
    "2a    +++++-  +   -R6     -R6    -2R6\n"
    "2b    +++++-  -   -R5     -R5    -2R5\n"
    "3a    ++++-+  +   -R5     -R5    -2R5\n"
    "3b    ++++-+  -   -R6     -R6    -2R6\n"
    "4     ++++--  -   0       0      0\n"
    "5     +++-++  +   +R4     -R4    0\n"
    "6     ++--++  +   +R5     -R5    0\n"
    "7a    ++-+-+  +   -R4     -R4    -2R4\n"
    "7b    ++-+-+  -   -R2     -R2    -2R2\n"
    "8     +-++--  -   +R2     -R2    0\n"
    "9     ++---+  +   0       0      0\n"
    "10    +--+--  -   +R6     -R6    0\n"
    "11    +--+-+  -   0       0      0\n"
    "12a   +----+  +   -R2     -R2    -2R2\n"
    "12b   +----+  -   -R4     -R4    -2R4\n"
    "\n"
    "R1..R6  r7\n"
    "++++++  +\n"
    "+++++-  ±\n"
    "++++-+  ±\n"
    "++++--  -\n"
    "+++-++  +\n"
    "++--++  +\n"
    "++-+-+  ±\n"
    "+-++--  -\n"
    "++---+  +\n"
    "+--+--  -\n"
    "+--+-+  -\n"
    "+----+  ±\n";

constexpr const char* kGoldenLune =
    "lune branched versions: 3 sliding, 1 bumping\n"
    "sliding: [dEul] = 0, [dgl] = 0\n"
    "bumping: [dEul] = -2[Delta], [dgl] = 0\n";

constexpr const char* kGoldenMp23 =
    "2-3 branched versions: 5 sliding, 1 bumping\n"
    "sliding: [dEul] = 0, [dgl] = 0\n"
    "bumping: [dEul] = -2[Delta], [dgl] = 0\n";

std::vector<int> violating_edges_among(const Polyhedron& p, const std::vector<int>& o, const std::vector<int>& edges) {
  std::vector<int> bad;
  for (int e : edges) {
    const int a = induced_direction(p, o, e, 0);
    if (a == induced_direction(p, o, e, 1) && a == induced_direction(p, o, e, 2)) bad.push_back(e);
  }
  return bad;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string term(int c, int k) {
  if (c == 0) return "0";
  std::string s = c < 0 ? "-" : "+";
  if (std::abs(c) != 1) s += std::to_string(std::abs(c));
  return s + "R" + std::to_string(k);
}

// Expresses a class as c * R_k with |c| <= 2, or "?".
std::string identify(const CochainClass& x, const std::array<int, 7>& regions) {
  if (is_zero_class(x)) return "0";
  for (int c : {-1, 1, -2, 2})
    for (int k = 1; k <= 6; ++k) {
      CochainClass t = unit_class(x.pres, regions[k], c);
      if (x.scale == 2) t = t.doubled();
      if (class_equal(x, t)) return term(c, k);
    }
  return "?";
}

std::vector<Polyhedron> census_corpus() {
  std::vector<Polyhedron> c = enumerate_polyhedra(1);
  for (Polyhedron& p : enumerate_polyhedra(2)) c.push_back(std::move(p));
  return c;
}

std::string flavor_table(MoveKind kind) {
  const std::vector<Polyhedron> corpus = census_corpus();
  const VersionCensus vc = version_census(kind, corpus);
  long slide_bad = 0, bump_bad = 0;
  for (const Polyhedron& p : corpus) {
    if (p.region_count() > 12) continue;
    const Gleam g = minimal_gleam(p);
    const auto sites = enumerate_sites(p, g, kind, Direction::Forward);
    for (const Branching& b : enumerate_branchings(p, 12)) {
      const BranchedShadow s(p, g, b);
      for (const Site& s0 : sites)
        for (int side = 0; side < (kind == MoveKind::Lune ? 2 : 1); ++side)
          for (int version = 1; version <= 2; ++version) {
            Site site = s0;
            site.side = side;
            std::optional<MoveDeltas> d;
            try {
              d = move_deltas(s, {kind, Direction::Forward, site, version});
            } catch (const ShadowError& e) {
              if (e.code() == ErrorCode::SiteMismatch) continue;
              throw;
            }
            const FlavorInfo fi = classify_flavor(d->outcome);
            if (fi.flavor == Flavor::Bumping) {
              bump_bad += !(class_equal(d->eul, unit_class(d->eul.pres, fi.delta, -2)) && is_zero_class(d->gl));
            } else {
              slide_bad += !(is_zero_class(d->eul) && is_zero_class(d->gl));
            }
          }
    }
  }
  std::ostringstream os;
  os << (kind == MoveKind::Lune ? "lune" : "2-3") << " branched versions: " << vc.sliding << " sliding, " << vc.bumping
     << " bumping\n";
  os << "sliding: [dEul] = 0, [dgl] = 0";
  if (slide_bad) os << " FAILS for " << slide_bad << " versions";
  os << "\nbumping: [dEul] = -2[Delta], [dgl] = 0";
  if (bump_bad) os << " FAILS for " << bump_bad << " versions";
  os << '\n';
  return os.str();
}

}  // namespace

std::vector<std::string> table_names() { return {"one_two", "lune", "mp23"}; }

std::string golden_table(const std::string& which) {
  if (which == "one_two") return kGoldenOneTwo;
  if (which == "lune") return kGoldenLune;
  if (which == "mp23") return kGoldenMp23;
  throw ShadowError(ErrorCode::InvalidArgument, "unknown table: " + which);
}

std::vector<OneTwoRowResult> one_two_pipeline() {
  const Polyhedron p(one_two_model_data());
  const int U = kOneTwoModelVertex;
  MoveInstance m{MoveKind::OneTwo, Direction::Forward, Site{}, 1};
  m.site.vertex = U;
  m.site.germ = {0, 1};
  const Gleam g0 = minimal_gleam(p);
  std::vector<int> u_edges;
  for (int sl = 0; sl < 4; ++sl) u_edges.push_back(p.end_at(U, sl).edge);
  std::map<std::pair<std::string, char>, OneTwoRowResult> rows;
  for (int mask = 0; mask < (1 << p.region_count()); ++mask) {
    std::vector<int> op(p.region_count());
    for (int r = 0; r < p.region_count(); ++r) op[r] = (mask >> r & 1) ? -1 : 1;
    if (!violating_edges_among(p, op, u_edges).empty()) continue;
    for (int version = 1; version <= 2; ++version) {
      MoveOutcome out = apply_move(p, g0, nullptr, m);
      out.orientation = carry_orientation(out, op, version);
      std::vector<int> ball_edges, ball_vertices;
      for (const BallTet& bt : out.ball.tets) {
        ball_vertices.push_back(bt.vertex);
        for (int sl = 0; sl < 4; ++sl) ball_edges.push_back(out.poly.end_at(bt.vertex, sl).edge);
      }
      std::sort(ball_edges.begin(), ball_edges.end());
      ball_edges.erase(std::unique(ball_edges.begin(), ball_edges.end()), ball_edges.end());
      if (!violating_edges_among(out.poly, out.orientation, ball_edges).empty()) continue;
      const OneTwoLabels lab = one_two_labels(p, op, m, out);
      // Every region of the model passes through the ball.
      std::vector<int> regions(out.poly.region_count());
      std::iota(regions.begin(), regions.end(), 0);
      auto pres = std::make_shared<const Presentation>(
          local_presentation(partial_boundary(out.poly, out.orientation, ball_edges), regions, ball_edges));
      const IntVector de = local_euler_delta(p, op, {U}, out, ball_vertices);
      IntVector dg(out.poly.region_count(), 0);
      for (int r = 0; r < out.poly.region_count(); ++r) dg[r] = out.gleam.doubled[r];
      for (int r = 0; r < p.region_count(); ++r) dg[out.region_map[r]] -= g0.doubled[r];
      IntVector dc(out.poly.region_count());
      for (int r = 0; r < out.poly.region_count(); ++r) dc[r] = 2 * de[r] + dg[r];
      const std::string e = identify(make_class(pres, de, 1), lab.regions);
      const std::string gl = identify(make_class(pres, dg, 2), lab.regions);
      const std::string c1 = identify(make_class(pres, dc, 2), lab.regions);
      auto key = std::make_pair(lab.signs, lab.r7);
      auto it = rows.find(key);
      if (it == rows.end()) {
        OneTwoRowResult row;
        row.label = lab.row ? lab.row->label : "?";
        row.signs = lab.signs;
        row.r7 = lab.r7;
        row.eul = e;
        row.gl = gl;
        row.c1 = c1;
        row.versions = 1;
        rows.emplace(key, row);
      } else {
        ++it->second.versions;
        if (it->second.eul != e || it->second.gl != gl || it->second.c1 != c1) it->second.consistent = false;
      }
    }
  }
  std::vector<OneTwoRowResult> out;
  for (const OneTwoCase& c : one_two_case_table()) {
    auto it = rows.find({c.signs, c.r7});
    if (it == rows.end()) continue;
    out.push_back(it->second);
    rows.erase(it);
  }
  for (auto& [k, row] : rows) out.push_back(row);
  return out;
}

std::string regenerate_table(const std::string& which) {
  if (which == "lune") return flavor_table(MoveKind::Lune);
  if (which == "mp23") return flavor_table(MoveKind::MP23);
  if (which != "one_two") throw ShadowError(ErrorCode::InvalidArgument, "unknown table: " + which);
  std::ostringstream os;
  os << "case  R1..R6  r7  [dEul]  [dgl]  [dc1]\n";
  for (const OneTwoRowResult& r : one_two_pipeline()) {
    std::string line = pad(r.label, 6) + pad(r.signs, 8) + pad(std::string(1, r.r7), 4) + pad(r.eul, 8) + pad(r.gl, 7) + r.c1;
    if (!r.consistent) line += "  INCONSISTENT";
    os << line << '\n';
  }
  os << "\nR1..R6  r7\n";
  for (const OneTwoCaseRow& r : enumerate_one_two_cases().rows) os << pad(r.signs, 8) << r.r7 << '\n';
  return os.str();
}

TableReport table_report(const std::string& which) {
  TableReport rep;
  rep.which = which;
  rep.golden = golden_table(which);
  rep.generated = regenerate_table(which);
  rep.match = rep.generated == rep.golden;
  std::istringstream g(rep.generated), e(rep.golden);
  std::string a, b;
  for (int n = 1;; ++n) {
    const bool ga = static_cast<bool>(std::getline(g, a));
    const bool gb = static_cast<bool>(std::getline(e, b));
    if (!ga && !gb) break;
    if (!ga) a = "<missing>";
    if (!gb) b = "<missing>";
    if (a != b) rep.differences.push_back("line " + std::to_string(n) + ": got `" + a + "` expected `" + b + "`");
  }
  return rep;
}

}  // namespace shadows
