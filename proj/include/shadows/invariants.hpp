#pragma once

#include <memory>
#include <string>
#include <vector>

#include "shadows/decor.hpp"
#include "shadows/homology.hpp"
#include "shadows/moves.hpp"

namespace shadows {

// One traversal of a region's stored circuit: whether the maw points into the
// region there, and the doubled turning of the maw against the boundary
// tangent at the vertex passage that follows.
struct MawPassage {
  bool inward = false;
  int turn2 = 0;
};

struct MawProfile {
  std::vector<std::vector<MawPassage>> regions;
  // 1 + total turning along the boundary.
  int index(int region) const;
};

MawProfile maw_profile(const BranchedShadow& s);

// H^2 presentation with one generator per region oriented by the branching
// and one relation -R_pref + R_j + R_k per edge.
std::shared_ptr<const Presentation> branched_presentation(const BranchedShadow& s);

// Boundary map over regions oriented by the branching; its kernel is H_2.
IntMatrix branched_boundary(const BranchedShadow& s);
std::vector<IntVector> h2_basis(const BranchedShadow& s);

CochainClass euler_cochain(const BranchedShadow& s);
CochainClass gleam_cochain(const BranchedShadow& s);

struct ChernData {
  CochainClass eul;  // scale 1
  CochainClass gl;   // scale 2
  CochainClass c1;   // scale 2
};
ChernData chern_class(const BranchedShadow& s);

// Carries a region cochain of `before` across a branched move. Inverse moves
// first trade the vanished region for its neighbours through an edge relation.
IntVector pushforward(const BranchedShadow& before, const MoveOutcome& out, const IntVector& x);
CochainClass pushforward(const BranchedShadow& before, const MoveOutcome& out, const CochainClass& x,
                         std::shared_ptr<const Presentation> after);

// The module generated by the corners of the given tetrahedra (corners
// joined across internal faces count once) with one relation per edge end:
// the presentation of H^2 seen by a move ball. internal[k] marks local
// labels whose faces are glued inside the ball.
std::shared_ptr<const Presentation> ball_presentation(const Polyhedron& p, const std::vector<int>& orientation,
                                                      const std::vector<BallTet>& tets,
                                                      const std::array<bool, 4>& internal);

// Ball of a branched move: the after-picture of a lune or 2->3, the single
// vertex of a 1->2.
std::shared_ptr<const Presentation> move_ball_presentation(const BranchedShadow& s, const MoveInstance& m,
                                                           const MoveOutcome& out);

// Euler change across a forward move computed from the vertex passages at
// the move's vertices only: edges away from the ball may be unbranched.
// before_vertices / after_vertices list the vertices of the two pictures.
IntVector local_euler_delta(const Polyhedron& before, const std::vector<int>& before_orientation,
                            const std::vector<int>& before_vertices, const MoveOutcome& out,
                            const std::vector<int>& after_vertices);

// Boundary rows of the given edges over all regions (other rows zero).
IntMatrix partial_boundary(const Polyhedron& p, const std::vector<int>& orientation, const std::vector<int>& edges);

struct MoveDeltas {
  BranchedShadow after;
  MoveOutcome outcome;
  CochainClass eul;  // scale 1, presentation of `after`
  CochainClass gl;   // scale 2
  CochainClass c1;   // scale 2
};
MoveDeltas move_deltas(const BranchedShadow& s, const MoveInstance& m);

// alpha(J_after, J_before) as a class over the after presentation.
CochainClass alpha_of_move(const BranchedShadow& s, const MoveInstance& m);

struct SequenceAlpha {
  BranchedShadow final_shadow;
  CochainClass alpha;  // over the final presentation
  CochainClass delta_c1;
};
SequenceAlpha alpha_of_sequence(const BranchedShadow& s, const std::vector<MoveInstance>& moves);

struct RealizeResult {
  bool complete = false;
  std::vector<MoveInstance> moves;
  BranchedShadow final_shadow;
  CochainClass residual;  // target minus what was realized, over the final presentation
};

// Target is a class over s's presentation (scale 1).
RealizeResult realize_class(const BranchedShadow& s, const CochainClass& target, int budget);

// Spin^c structures relative to a base: only differences are recorded.
class SpincLedger {
 public:
  explicit SpincLedger(BranchedShadow base);

  const BranchedShadow& base() const { return base_; }
  const BranchedShadow& current() const { return current_; }
  // offset of current from base, over the current presentation
  const CochainClass& offset() const { return offset_; }
  CochainClass c1_difference() const { return 2 * offset_; }

  void apply(const MoveInstance& m);
  void twist(const CochainClass& l);  // s -> s (x) l

 private:
  BranchedShadow base_;
  BranchedShadow current_;
  CochainClass offset_;
};

}  // namespace shadows
