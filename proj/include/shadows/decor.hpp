#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shadows/polyhedron.hpp"

namespace shadows {

// doubled[r] = 2 * gl(r).
struct Gleam {
  std::vector<int> doubled;
  bool operator==(const Gleam&) const = default;
};

Gleam zero_gleam(const Polyhedron& p);
// Half-integer gleams on the regions with nonzero Z2-gleam, zero elsewhere.
Gleam minimal_gleam(const Polyhedron& p);

bool gleam_integrality_holds(const Polyhedron& p, const Gleam& g);

struct Shadow {
  Polyhedron poly;
  Gleam gleam;

  Shadow(Polyhedron p, Gleam g);
};

// orientation[r] is the sign of region r relative to its stored circuit.
struct Branching {
  std::vector<int> orientation;
  bool operator==(const Branching&) const = default;
  Branching flipped() const;
};

struct BranchedShadow {
  Polyhedron poly;
  Gleam gleam;
  Branching branching;

  BranchedShadow(Polyhedron p, Gleam g, Branching b);
  Shadow shadow() const { return Shadow(poly, gleam); }
};

// Direction (+1 along end0 -> end1) the oriented region through (edge, wing) induces on the edge.
int induced_direction(const Polyhedron& p, const std::vector<int>& orientation, int edge, int wing);

bool is_branching(const Polyhedron& p, const std::vector<int>& orientation);

constexpr int kDefaultBranchingRegionBound = 24;

// Every branching, in lexicographic order of sign vectors with -1 < +1.
std::vector<Branching> enumerate_branchings(const Polyhedron& p, int region_bound = kDefaultBranchingRegionBound);

struct PreferredWing {
  int wing;
  int region;
};

PreferredWing preferred_wing(const Polyhedron& p, const std::vector<int>& orientation, int edge);
PreferredWing preferred_wing(const BranchedShadow& s, int edge);

}  // namespace shadows
