#pragma once

#include <cstdint>
#include <vector>

#include "shadows/decor.hpp"
#include "shadows/moves.hpp"

namespace shadows {

// Edges on which the three wings induce the same direction.
std::vector<int> violating_edges(const Polyhedron& p, const std::vector<int>& orientation);

// Local search for an orientation with few violating edges: from all +1
// (seed 0) or a seeded random vector, flips the region that removes the most
// violations until no flip helps. Restarts use seeds seed+1, seed+2, ... and
// stop at the first branching; the best local minimum is returned.
std::vector<int> descend_orientation(const Polyhedron& p, std::uint64_t seed = 0, int restarts = 32);

struct BlowupResult {
  std::vector<MoveInstance> moves;  // forward moves, version = orientation of the new region
  BranchedShadow result;
};

// Greedy repair of an arbitrary orientation. Candidates at each violating
// edge (2->3 when its endpoints differ, then the six lunes on its wings) are
// scored by the violations left, the new region taking the better of its two
// orientations (ties: +1). The first best candidate wins; when none lowers
// the count, the first move of the best two-move sequence is taken. seed 0
// scans edges in id order, other seeds shuffle the scan. StepBudgetExceeded
// after max_steps moves.
BlowupResult branch_by_blowup(const Shadow& s, const std::vector<int>& orientation, int max_steps,
                              std::uint64_t seed = 0);

// Replays a blow-up log on the unbranched shadow, carrying the orientation.
BranchedShadow replay_blowup(const Shadow& s, const std::vector<int>& orientation,
                             const std::vector<MoveInstance>& moves);

}  // namespace shadows
