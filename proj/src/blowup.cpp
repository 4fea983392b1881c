#include "shadows/blowup.hpp"

#include <algorithm>
#include <random>

namespace shadows {

std::vector<int> violating_edges(const Polyhedron& p, const std::vector<int>& orientation) {
  std::vector<int> out;
  for (int e = 0; e < p.edge_count(); ++e) {
    const int a = induced_direction(p, orientation, e, 0);
    if (a == induced_direction(p, orientation, e, 1) && a == induced_direction(p, orientation, e, 2)) out.push_back(e);
  }
  return out;
}

namespace {

std::vector<int> descend_once(const Polyhedron& p, std::uint64_t seed) {
  std::vector<int> o(p.region_count(), 1);
  std::mt19937_64 rng(seed);
  if (seed != 0)
    for (int& x : o) x = (rng() & 1) ? 1 : -1;
  std::size_t bad = violating_edges(p, o).size();
  while (bad > 0) {
    int best = -1;
    std::size_t best_bad = bad;
    for (int r = 0; r < p.region_count(); ++r) {
      o[r] = -o[r];
      const std::size_t n = violating_edges(p, o).size();
      o[r] = -o[r];
      if (n < best_bad) {
        best = r;
        best_bad = n;
      }
    }
    if (best < 0) break;
    o[best] = -o[best];
    bad = best_bad;
  }
  return o;
}

}  // namespace

std::vector<int> descend_orientation(const Polyhedron& p, std::uint64_t seed, int restarts) {
  std::vector<int> best = descend_once(p, seed);
  std::size_t best_bad = violating_edges(p, best).size();
  for (int k = 1; k < restarts && best_bad > 0; ++k) {
    std::vector<int> o = descend_once(p, seed + k);
    if (const std::size_t n = violating_edges(p, o).size(); n < best_bad) {
      best = std::move(o);
      best_bad = n;
    }
  }
  return best;
}

namespace {

struct BlowStep {
  MoveInstance move;
  MoveOutcome outcome;
  std::vector<int> orientation;
};

// Applies a forward move and picks the version leaving the fewest violations.
std::optional<BlowStep> best_version(const Polyhedron& p, const Gleam& g, const std::vector<int>& o, MoveKind kind,
                                 const Site& site) {
  MoveInstance m{kind, Direction::Forward, site, 1};
  std::optional<MoveOutcome> out;
  try {
    out = apply_move(p, g, nullptr, m);
  } catch (const ShadowError& e) {
    if (e.code() == ErrorCode::SiteMismatch) return std::nullopt;
    throw;
  }
  std::optional<BlowStep> best;
  std::size_t best_count = 0;
  for (int version = 1; version <= 2; ++version) {
    std::vector<int> oq = carry_orientation(*out, o, version);
    const std::size_t n = violating_edges(out->poly, oq).size();
    if (!best || n < best_count) {
      m.version = version;
      best = BlowStep{m, *out, std::move(oq)};
      best_count = n;
    }
  }
  return best;
}

}  // namespace

namespace {

// Repair candidates at the violating edges, in scan order: a 2->3 move when
// the edge has distinct endpoints, then the lunes on its wings.
std::vector<BlowStep> candidates(const Polyhedron& p, const Gleam& g, const std::vector<int>& o,
                                 const std::vector<int>& bad) {
  std::vector<BlowStep> out;
  for (int e : bad) {
    const Edge& ed = p.edge(e);
    if (ed.ends[0].vertex != ed.ends[1].vertex)
      if (auto c = best_version(p, g, o, MoveKind::MP23, Site{e, 0, 0, -1, {0, 1}})) out.push_back(std::move(*c));
    for (int wing = 0; wing < 3; ++wing)
      for (int side = 0; side < 2; ++side)
        if (auto c = best_version(p, g, o, MoveKind::Lune, Site{e, wing, side, -1, {0, 1}})) out.push_back(std::move(*c));
  }
  return out;
}

std::size_t violations(const BlowStep& s) { return violating_edges(s.outcome.poly, s.orientation).size(); }

}  // namespace

BlowupResult branch_by_blowup(const Shadow& s, const std::vector<int>& orientation, int max_steps,
                              std::uint64_t seed) {
  if (static_cast<int>(orientation.size()) != s.poly.region_count())
    throw ShadowError(ErrorCode::InvalidArgument, "orientation size differs from region count");
  Polyhedron p = s.poly;
  Gleam g = s.gleam;
  std::vector<int> o = orientation;
  std::vector<MoveInstance> log;
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<int> bad = violating_edges(p, o);
    if (bad.empty()) return {std::move(log), BranchedShadow(std::move(p), std::move(g), Branching{std::move(o)})};
    if (static_cast<int>(log.size()) >= max_steps)
      throw ShadowError(ErrorCode::StepBudgetExceeded,
                        std::to_string(bad.size()) + " violating edges left after " + std::to_string(max_steps) +
                            " moves");
    if (seed != 0) std::shuffle(bad.begin(), bad.end(), rng);
    std::vector<BlowStep> cands = candidates(p, g, o, bad);
    if (cands.empty()) throw ShadowError(ErrorCode::StepBudgetExceeded, "no move applies at a violating edge");
    std::size_t pick = 0, pick_n = violations(cands[0]);
    for (std::size_t k = 1; k < cands.size(); ++k)
      if (const std::size_t n = violations(cands[k]); n < pick_n) {
        pick = k;
        pick_n = n;
      }
    if (pick_n >= bad.size()) {
      // No single move helps: take the first move of the best pair.
      std::size_t pair_n = pick_n;
      for (std::size_t k = 0; k < cands.size(); ++k) {
        const BlowStep& c = cands[k];
        for (const BlowStep& d :
             candidates(c.outcome.poly, c.outcome.gleam, c.orientation, violating_edges(c.outcome.poly, c.orientation)))
          if (const std::size_t n = violations(d); n < pair_n) {
            pair_n = n;
            pick = k;
          }
      }
    }
    BlowStep& step = cands[pick];
    log.push_back(step.move);
    p = step.outcome.poly;
    g = step.outcome.gleam;
    o = std::move(step.orientation);
  }
}

BranchedShadow replay_blowup(const Shadow& s, const std::vector<int>& orientation,
                             const std::vector<MoveInstance>& moves) {
  Polyhedron p = s.poly;
  Gleam g = s.gleam;
  std::vector<int> o = orientation;
  for (const MoveInstance& m : moves) {
    MoveOutcome out = apply_move(p, g, nullptr, m);
    o = carry_orientation(out, o, m.version);
    p = out.poly;
    g = out.gleam;
  }
  return BranchedShadow(std::move(p), std::move(g), Branching{std::move(o)});
}

}  // namespace shadows
