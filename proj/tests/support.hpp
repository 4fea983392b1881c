#pragma once

// Helpers shared by the unit tests and the acceptance binary.

#include <random>
#include <string>
#include <vector>

#include "shadows/fixtures.hpp"
#include "shadows/gluing.hpp"
#include "shadows/invariants.hpp"
#include "shadows/moves.hpp"

namespace shadows::testing {

// Every forward branched move at s: all sites, both lune sides, both versions
// when both give a branching.
inline std::vector<MoveInstance> branched_forward_moves(const BranchedShadow& s) {
  std::vector<MoveInstance> out;
  for (MoveKind k : {MoveKind::Lune, MoveKind::MP23, MoveKind::OneTwo})
    for (const Site& site0 : enumerate_sites(s.poly, s.gleam, k, Direction::Forward))
      for (int side = 0; side < (k == MoveKind::Lune ? 2 : 1); ++side) {
        Site site = site0;
        site.side = side;
        for (const BranchedVersion& bv : branched_versions(s, k, site))
          out.push_back({k, Direction::Forward, site, bv.version});
      }
  return out;
}

// The inverse move that removes the region created by a forward move.
inline MoveInstance inverse_of(const MoveInstance& m, const MoveOutcome& out) {
  const Step& st = out.poly.region(versioned_region(out)).boundary.steps.front();
  return {m.kind, Direction::Inverse, Site{st.edge, st.wing, 0, -1, {0, 1}}, 0};
}

struct Walk {
  std::vector<MoveInstance> moves;
  std::vector<BranchedShadow> states;  // states[k] before moves[k]; one more at the end
};

// Random forward walk; stops early when the region count would pass the bound.
inline Walk random_walk(const BranchedShadow& s, std::mt19937_64& rng, int steps, int region_bound = 40) {
  Walk w;
  w.states.push_back(s);
  for (int i = 0; i < steps; ++i) {
    const BranchedShadow& cur = w.states.back();
    if (cur.poly.region_count() + 2 > region_bound) break;
    const auto cands = branched_forward_moves(cur);
    if (cands.empty()) break;
    const MoveInstance m = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
    w.moves.push_back(m);
    w.states.push_back(apply(cur, m));
  }
  return w;
}

inline std::vector<int> decorated_code(const BranchedShadow& s) {
  return canonical_code(s.poly, s.gleam.doubled, s.branching.orientation);
}

// Inverse moves undoing a walk from its last state, found by matching each
// intermediate state up to isomorphism. Empty when some step has no inverse.
inline std::vector<MoveInstance> undo_walk(const Walk& w) {
  std::vector<MoveInstance> back;
  BranchedShadow cur = w.states.back();
  for (std::size_t i = w.moves.size(); i-- > 0;) {
    const std::vector<int> want = decorated_code(w.states[i]);
    bool found = false;
    for (const Site& site : enumerate_sites(cur.poly, cur.gleam, w.moves[i].kind, Direction::Inverse)) {
      const MoveInstance m{w.moves[i].kind, Direction::Inverse, site, 0};
      try {
        BranchedShadow next = apply(cur, m);
        if (decorated_code(next) != want) continue;
        back.push_back(m);
        cur = std::move(next);
        found = true;
        break;
      } catch (const ShadowError&) {
      }
    }
    if (!found) return {};
  }
  return back;
}

// Carries a class of s across a replayable sequence.
inline CochainClass push_along(const BranchedShadow& s, const std::vector<MoveInstance>& moves, CochainClass x) {
  BranchedShadow cur = s;
  for (const MoveInstance& m : moves) {
    const MoveOutcome out = apply_move(cur.poly, cur.gleam, &cur.branching.orientation, m);
    BranchedShadow next(out.poly, out.gleam, Branching{out.orientation});
    x = pushforward(cur, out, x, branched_presentation(next));
    cur = std::move(next);
  }
  return x;
}


inline const std::vector<std::string>& base_fixtures() {
  static const std::vector<std::string> names = {"abalone", "bing", "s2xs1", "mono3", "mono4"};
  return names;
}

}  // namespace shadows::testing
