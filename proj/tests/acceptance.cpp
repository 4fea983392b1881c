// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shadows/blowup.hpp"
#include "shadows/cxpoints.hpp"
#include "shadows/tables.hpp"
#include "support.hpp"

using namespace shadows;
using namespace shadows::testing;

namespace {

// Pinned sample sizes and tolerances.
constexpr int kSequences = 200;          // criterion 5
constexpr int kSequenceLength = 5;
constexpr int kMovesPerFixture = 500;    // criterion 7
constexpr int kVertexCeiling = 10;       // criterion 7: inverse moves only above this
constexpr int kRewriteSequences = 1000;  // criterion 8
constexpr int kRewriteLength = 8;
constexpr int kDecorations = 120;
constexpr int kBishopTuples = 1000;
constexpr int kMatrices = 1000;          // criterion 9
constexpr int kMatrixMax = 12;
constexpr int kRegionBound = 12;         // criterion 10
constexpr int kBlowupBudget = 50;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts checks and keeps the first failure message.
struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << "; " << checks << " checks";
    if (failures) os << ", " << failures << " failed, first: " << first;
    return {failures == 0, os.str()};
  }
};

std::vector<BranchedShadow> fixture_shadows() {
  std::vector<BranchedShadow> out;
  for (const Fixture& f : catalog()) out.push_back(branched_of(f.doc));
  return out;
}

// Every branching of every catalog fixture with few regions.
std::vector<std::pair<std::string, BranchedShadow>> all_branched_fixtures() {
  std::vector<std::pair<std::string, BranchedShadow>> out;
  for (const Fixture& f : catalog()) {
    const Shadow s = shadow_of(f.doc);
    if (s.poly.region_count() > kRegionBound) continue;
    for (const Branching& b : enumerate_branchings(s.poly)) out.emplace_back(f.name, BranchedShadow(s.poly, s.gleam, b));
  }
  return out;
}

std::vector<std::string> table_lines(const std::string& text, bool admissibility) {
  const std::string marker = "\nR1..R6  r7\n";
  const std::size_t at = text.find(marker);
  const std::string part = at == std::string::npos ? text : admissibility ? text.substr(at + 1) : text.substr(0, at);
  std::vector<std::string> lines;
  std::istringstream is(part);
  for (std::string l; std::getline(is, l);)
    if (!l.empty()) lines.push_back(l);
  return lines;
}

Outcome criterion1() {
  const std::string gen = regenerate_table("one_two"), gold = golden_table("one_two");
  const auto g = table_lines(gen, false), r = table_lines(gold, false);
  Tally t;
  t.check(g == r, "16-case table differs from the reference");
  const auto rows = one_two_pipeline();
  t.check(rows.size() == 16, "row count " + std::to_string(rows.size()));
  for (const OneTwoRowResult& row : rows) t.check(row.consistent && row.label != "?", "row " + row.label);
  return t.outcome("1-2 table, " + std::to_string(rows.size()) + " rows, exact");
}

Outcome criterion2() {
  const auto g = table_lines(regenerate_table("one_two"), true), r = table_lines(golden_table("one_two"), true);
  Tally t;
  t.check(g == r, "admissibility table differs from the reference");
  const OneTwoEnumeration en = enumerate_one_two_cases();
  int both = 0;
  for (const OneTwoCaseRow& row : en.rows) both += row.r7 == "±";
  t.check(en.rows.size() == 12, "rows " + std::to_string(en.rows.size()));
  t.check(both == 4, "both-orientation rows " + std::to_string(both));
  return t.outcome(std::to_string(en.rows.size()) + " rows, " + std::to_string(both) + " with both r7 orientations");
}

Outcome criterion3() {
  std::vector<Polyhedron> corpus = enumerate_polyhedra(1);
  for (Polyhedron& p : enumerate_polyhedra(2)) corpus.push_back(std::move(p));
  const VersionCensus lune = version_census(MoveKind::Lune, corpus);
  const VersionCensus mp = version_census(MoveKind::MP23, corpus);
  const std::size_t raw12 = enumerate_one_two_cases().raw.size();
  Tally t;
  t.check(lune.sliding == 3 && lune.bumping == 1, "lune census");
  t.check(mp.sliding == 5 && mp.bumping == 1, "2-3 census");
  t.check(raw12 == 32, "1-2 raw count");
  std::ostringstream os;
  os << "lune " << lune.sliding << "+" << lune.bumping << " (group " << lune.automorphisms << "), 2-3 " << mp.sliding
     << "+" << mp.bumping << " (group " << mp.automorphisms << "), 1-2 raw " << raw12 << ", corpus " << corpus.size();
  return t.outcome(os.str());
}

Outcome criterion4(const std::vector<std::pair<std::string, BranchedShadow>>& fx) {
  Tally t;
  long sliding = 0, bumping = 0;
  for (const auto& [name, s] : fx)
    for (const MoveInstance& m : branched_forward_moves(s)) {
      if (m.kind == MoveKind::OneTwo) continue;
      const MoveDeltas d = move_deltas(s, m);
      const FlavorInfo fi = classify_flavor(d.outcome);
      const std::string where = name + " " + format_move(m);
      t.check(is_zero_class(d.gl), where + ": [dgl] != 0");
      if (fi.flavor == Flavor::Bumping) {
        ++bumping;
        t.check(class_equal(d.eul, unit_class(d.eul.pres, fi.delta, -2)), where + ": [dEul] != -2[Delta]");
      } else {
        ++sliding;
        t.check(fi.flavor == Flavor::Sliding && is_zero_class(d.eul), where + ": sliding [dEul] != 0");
      }
    }
  return t.outcome(std::to_string(sliding) + " sliding, " + std::to_string(bumping) + " bumping versions");
}

Outcome criterion5(const std::vector<std::pair<std::string, BranchedShadow>>& fx) {
  Tally t;
  long triples = 0;
  for (const auto& [name, s] : fx)
    for (const MoveInstance& m : branched_forward_moves(s)) {
      ++triples;
      const MoveDeltas d = move_deltas(s, m);
      t.check(class_equal((2 * alpha_of_move(s, m)).doubled(), d.c1), name + " " + format_move(m));
    }
  std::mt19937_64 rng(20240501);
  const std::vector<BranchedShadow> bases = fixture_shadows();
  int sequences = 0;
  for (int k = 0; k < kSequences; ++k) {
    const BranchedShadow& s = bases[k % bases.size()];
    const Walk w = random_walk(s, rng, kSequenceLength);
    if (w.moves.size() < 2) continue;
    ++sequences;
    const std::string tag = "sequence " + std::to_string(k);
    const SequenceAlpha all = alpha_of_sequence(s, w.moves);
    t.check(class_equal((2 * all.alpha).doubled(), all.delta_c1), tag + ": 2 alpha != dc1");
    const std::size_t cut = 1 + rng() % (w.moves.size() - 1);
    const std::vector<MoveInstance> head(w.moves.begin(), w.moves.begin() + cut), tail(w.moves.begin() + cut, w.moves.end());
    const SequenceAlpha a1 = alpha_of_sequence(s, head);
    const SequenceAlpha a2 = alpha_of_sequence(a1.final_shadow, tail);
    t.check(class_equal(all.alpha, push_along(a1.final_shadow, tail, a1.alpha) + a2.alpha), tag + ": additivity");
    const std::vector<MoveInstance> back = undo_walk(w);
    t.check(back.size() == w.moves.size(), tag + ": no inverse sequence");
    if (back.size() != w.moves.size()) continue;
    const BranchedShadow& end = w.states.back();
    const SequenceAlpha rev = alpha_of_sequence(end, back);
    t.check(decorated_code(rev.final_shadow) == decorated_code(s), tag + ": inverse walk does not return");
    t.check(is_zero_class(push_along(end, back, all.alpha) + rev.alpha),
            tag + ": antisymmetry");
    std::vector<MoveInstance> loop = w.moves;
    loop.insert(loop.end(), back.begin(), back.end());
    t.check(is_zero_class(alpha_of_sequence(s, loop).alpha), tag + ": walk and its inverse have alpha != 0");
  }
  return t.outcome(std::to_string(triples) + " (fixture, site, version) triples, " + std::to_string(sequences) +
                   " random sequences");
}

Outcome criterion6(const std::vector<std::pair<std::string, BranchedShadow>>& fx) {
  Tally t;
  long balls[3] = {0, 0, 0};
  for (const auto& [name, s] : fx)
    for (const MoveInstance& m : branched_forward_moves(s)) {
      const MoveOutcome out = apply_move(s.poly, s.gleam, &s.branching.orientation, m);
      const auto pres = move_ball_presentation(s, m, out);
      ++balls[static_cast<int>(m.kind)];
      const std::string where = name + " " + format_move(m);
      t.check(pres->torsion().empty(), where + ": torsion");
      if (m.kind == MoveKind::OneTwo) t.check(pres->free_rank() == 3, where + ": 1-2 ball not Z^3");
    }
  std::ostringstream os;
  os << "1-2 balls Z^3: " << balls[2] << ", torsion-free lune " << balls[0] << ", 2-3 " << balls[1];
  return t.outcome(os.str());
}

Outcome criterion7() {
  Tally t;
  std::mt19937_64 rng(77);
  long applied = 0;
  const std::vector<Fixture> cat = catalog();
  for (const Fixture& f : cat) {
    Shadow s = shadow_of(f.doc);
    const int chi = euler_characteristic(s.poly);
    for (int k = 0; k < kMovesPerFixture; ++k) {
      const bool shrink = s.poly.vertex_count() > kVertexCeiling;
      std::vector<MoveInstance> cands;
      for (MoveKind kind : {MoveKind::Lune, MoveKind::MP23, MoveKind::OneTwo})
        for (Direction dir : {Direction::Forward, Direction::Inverse}) {
          if (shrink && dir == Direction::Forward) continue;
          for (const Site& site : enumerate_sites(s.poly, s.gleam, kind, dir)) cands.push_back({kind, dir, site, 0});
        }
      if (cands.empty()) break;
      const MoveInstance m = cands[rng() % cands.size()];
      s = apply(s, m);
      ++applied;
      const std::string where = f.name + " step " + std::to_string(k) + " " + format_move(m);
      t.check(euler_characteristic(s.poly) == chi, where + ": chi");
      t.check(s.poly.edge_count() == 2 * s.poly.vertex_count(), where + ": E != 2V");
      t.check(validate(s.poly.data()).ok(), where + ": not standard");
      t.check(gleam_integrality_holds(s.poly, s.gleam), where + ": gleam parity");
    }
  }
  return t.outcome(std::to_string(applied) + " moves over " + std::to_string(cat.size()) + " fixtures");
}

DecoratedShadow random_decoration(const BranchedShadow& s, std::mt19937_64& rng, int points) {
  DecoratedShadow d(s);
  for (int k = 0; k < points; ++k)
    d.add(static_cast<int>(rng() % s.poly.region_count()),
          {rng() & 1 ? PointSign::Positive : PointSign::Negative, rng() & 1 ? 1 : -1});
  return d;
}

Outcome criterion8() {
  Tally t;
  std::mt19937_64 rng(88);
  const std::vector<BranchedShadow> bases = fixture_shadows();
  for (int k = 0; k < kRewriteSequences; ++k) {
    DecoratedShadow d = random_decoration(bases[k % bases.size()], rng, 4);
    const IndexCochains before = index_cochains(d);
    for (int i = 0; i < kRewriteLength; ++i) {
      const PointSign sg = rng() & 1 ? PointSign::Positive : PointSign::Negative;
      CxRewrite r{RewriteKind::Push, static_cast<int>(rng() % d.shadow.poly.edge_count()), sg, rng() & 1 ? 1 : -1};
      if (rng() % 3 == 0) r = {RewriteKind::Create, static_cast<int>(rng() % d.shadow.poly.region_count()), sg, 1};
      for (int reg = 0; reg < d.shadow.poly.region_count() && rng() % 3 == 0; ++reg) {
        const auto& v = d.points[reg];
        if (std::count(v.begin(), v.end(), ComplexPoint{sg, 1}) && std::count(v.begin(), v.end(), ComplexPoint{sg, -1}))
          r = {RewriteKind::Annihilate, reg, sg, 1};
      }
      d = apply_rewrite(d, r);
    }
    const IndexCochains after = index_cochains(d);
    t.check(class_equal(before.plus, after.plus) && class_equal(before.minus, after.minus),
            "rewrite sequence " + std::to_string(k));
  }
  int solved = 0, blocked = 0;
  for (int k = 0; k < kDecorations; ++k) {
    const DecoratedShadow d = random_decoration(bases[k % bases.size()], rng, 2 + k % 5);
    const bool zero = is_zero_class(index_cochains(d).minus);
    const Elimination el = eliminate_negative(d, 500);
    const std::string tag = "decoration " + std::to_string(k);
    t.check(el.obstructed != zero, tag + ": verdict");
    if (el.obstructed) {
      ++blocked;
      continue;
    }
    ++solved;
    t.check(el.result && el.result->count(PointSign::Negative) == 0, tag + ": negative points left");
  }
  int perturbed = 0;
  for (int k = 0; k < kBishopTuples; ++k) {
    RegionGeometry g;
    g.chi = 1 - 2 * static_cast<int>(rng() % 3);
    g.nu = static_cast<int>(rng() % 9) - 4;
    g.c1 = static_cast<int>(rng() % 9) - 4;
    if ((g.chi + g.nu + g.c1) % 2 != 0) g.c1 += 1;
    const int ip = (g.chi + g.nu + g.c1) / 2, im = (g.chi + g.nu - g.c1) / 2;
    std::vector<ComplexPoint> pts;
    auto fill = [&](PointSign sg, int total) {
      const int extra = static_cast<int>(rng() % 3);
      for (int i = 0; i < std::abs(total) + extra; ++i) pts.push_back({sg, total >= 0 ? 1 : -1});
      for (int i = 0; i < extra; ++i) pts.push_back({sg, total >= 0 ? -1 : 1});
    };
    fill(PointSign::Positive, ip);
    fill(PointSign::Negative, im);
    t.check(bishop_check(pts, g).pass, "bishop tuple " + std::to_string(k));
    for (PointSign sg : {PointSign::Positive, PointSign::Negative})
      for (int idx : {1, -1}) {
        std::vector<ComplexPoint> q = pts;
        q.push_back({sg, idx});
        ++perturbed;
        t.check(!bishop_check(q, g).pass, "perturbed bishop tuple " + std::to_string(k));
      }
  }
  std::ostringstream os;
  os << kRewriteSequences << " rewrite sequences, " << kDecorations << " decorations (" << solved << " cleared, "
     << blocked << " obstructed), " << kBishopTuples << " Bishop tuples, " << perturbed << " perturbations";
  return t.outcome(os.str());
}

Outcome criterion9() {
  Tally t;
  std::mt19937_64 rng(99);
  for (int k = 0; k < kMatrices; ++k) {
    const int rows = 1 + static_cast<int>(rng() % kMatrixMax), cols = 1 + static_cast<int>(rng() % kMatrixMax);
    const int bound = k % 4 == 0 ? 1000000 : 9;
    IntMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    if (k % 5 == 0 && rows > 1)  // force a dependent row
      for (int j = 0; j < cols; ++j) a(rows - 1, j) = 3 * a(0, j) - a(rows / 2, j);
    const SmithForm s = smith_normal_form(a);
    bool ok = s.U * a * s.V == s.D && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
    for (int i = 0; i < rows && ok; ++i)
      for (int j = 0; j < cols && ok; ++j)
        if (i != j || i >= s.rank) ok = s.D(i, j) == 0;
    for (int i = 0; i < s.rank && ok; ++i) ok = s.D(i, i) > 0 && (i == 0 || s.D(i, i) % s.D(i - 1, i - 1) == 0);
    t.check(ok, "matrix " + std::to_string(k) + " " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  return t.outcome(std::to_string(kMatrices) + " matrices up to " + std::to_string(kMatrixMax) + "x" +
                   std::to_string(kMatrixMax) + ", GMP exact");
}

Outcome criterion10() {
  Tally t;
  std::vector<std::pair<std::string, Shadow>> corpus;
  for (const Fixture& f : catalog()) corpus.emplace_back(f.name, shadow_of(f.doc));
  for (int n = 1; n <= 2; ++n) {
    int k = 0;
    for (const Polyhedron& p : enumerate_polyhedra(n))
      corpus.emplace_back("v" + std::to_string(n) + "#" + std::to_string(k++), Shadow(p, minimal_gleam(p)));
  }
  int checked = 0, branchable = 0, repaired = 0;
  std::mt19937_64 rng(1010);
  for (const auto& [name, s] : corpus) {
    if (s.poly.region_count() > kRegionBound) continue;
    ++checked;
    const bool exhaustive = !enumerate_branchings(s.poly).empty();
    branchable += exhaustive;
    const BlowupResult direct = branch_by_blowup(s, descend_orientation(s.poly), kBlowupBudget);
    t.check(direct.moves.empty() == exhaustive, name + ": modes disagree");
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> o(s.poly.region_count());
      for (int& x : o) x = rng() & 1 ? 1 : -1;
      const std::uint64_t seed = trial;
      const BlowupResult r = branch_by_blowup(s, o, kBlowupBudget, seed);
      repaired += !r.moves.empty();
      t.check(is_branching(r.result.poly, r.result.branching.orientation), name + ": result not branched");
      t.check(decorated_code(replay_blowup(s, o, r.moves)) == decorated_code(r.result), name + ": replay differs");
      t.check(branch_by_blowup(s, o, kBlowupBudget, seed).moves == r.moves, name + ": log not deterministic");
      t.check(euler_characteristic(r.result.poly) == euler_characteristic(s.poly), name + ": chi");
    }
  }
  std::ostringstream os;
  os << checked << " shadows (" << branchable << " branchable), " << repaired << " repaired runs";
  return t.outcome(os.str());
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto fx = all_branched_fixtures();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 one-two table", criterion1},
      {"2 r7 admissibility", criterion2},
      {"3 version counts", criterion3},
      {"4 Delta-lemma", [&] { return criterion4(fx); }},
      {"5 alpha calculus", [&] { return criterion5(fx); }},
      {"6 local torsion", [&] { return criterion6(fx); }},
      {"7 structural invariants", criterion7},
      {"8 complex points", criterion8},
      {"9 Smith normal form", criterion9},
      {"10 branching modes", criterion10},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const auto s = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - s).count();
    std::printf("%s  criterion %-24s %s  (%.2fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  total %.2fs\n", all ? "ALL PASS" : "SOME FAILED", total);
  return all ? 0 : 1;
}
