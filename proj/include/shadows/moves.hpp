#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "shadows/decor.hpp"
#include "shadows/gluing.hpp"
#include "shadows/polyhedron.hpp"

namespace shadows {

enum class MoveKind { Lune, MP23, OneTwo };
enum class Direction { Forward, Inverse };

const char* move_kind_name(MoveKind k);

// Forward lune: the finger runs inside region_of(edge, wing) from that
// traversal to the next one along the stored circuit (side 0) or the
// previous one (side 1). Forward MP23: the edge; wing is kept for script
// compatibility and does not affect the result. Forward OneTwo: the vertex
// and the germ that slides. Inverse moves: edge and wing name a traversal of
// the region that disappears.
struct Site {
  int edge = -1;
  int wing = 0;
  int side = 0;
  int vertex = -1;
  std::array<int, 2> germ{0, 1};
  bool operator==(const Site&) const = default;
};

// version 0 means "no orientation choice"; on branched shadows versions 1
// and 2 give the created region orientation +1 and -1 relative to its
// stored circuit. For the lune the created region is the bigon; the disc cut
// from the pushed region keeps that region's orientation.
struct MoveInstance {
  MoveKind kind = MoveKind::Lune;
  Direction direction = Direction::Forward;
  Site site;
  int version = 0;
  bool operator==(const MoveInstance&) const = default;
};

std::string format_move(const MoveInstance& m);
MoveInstance parse_move(const std::string& line);

// Tetrahedra of the after-picture of a move, inside the polyhedron that
// contains it. label[k] is the slot carrying local label k.
struct BallTet {
  int vertex = 0;
  Perm4 label{};
};

struct LocalBall {
  MoveKind kind = MoveKind::Lune;
  std::vector<BallTet> tets;
  // OneTwo only: the vertex before the move and the face arrangement used.
  BallTet before{};
  Perm4 arrangement{};
};

struct MoveOutcome {
  Polyhedron poly;
  Gleam gleam;
  std::vector<int> orientation;  // empty for unbranched input
  std::vector<int> region_map;   // old region -> new region, -1 when it vanished
  std::vector<int> region_sign;  // +1 when the new stored circuit runs along the old one
  std::vector<int> created;      // new regions with no preimage
  int vanished = -1;             // old region removed by an inverse move
  std::vector<int> vertex_map;   // old vertex -> new vertex, -1 when removed
  LocalBall ball;                // after-picture, located in the larger polyhedron
};

// Applies a move to raw data. orientation may be null. Forward moves on a
// branched input need version 1 or 2 unless the created region's
// orientation is forced, in which case version 0 picks the first valid one.
MoveOutcome apply_move(const Polyhedron& p, const Gleam& gleam, const std::vector<int>* orientation,
                       const MoveInstance& m);

// The combinatorial rewrite alone: no gleam, no orientation, and no gleam
// preconditions on inverse moves.
MoveOutcome rewrite(const Polyhedron& p, const MoveInstance& m);

Shadow apply(const Shadow& s, const MoveInstance& m);
BranchedShadow apply(const BranchedShadow& s, const MoveInstance& m);

// Carries an arbitrary (not necessarily branching) orientation across a
// forward rewrite: surviving regions keep their sign along the new circuits,
// the lune's disc continues the pushed region, and the versioned region gets
// +1 for version 1 and -1 for version 2.
std::vector<int> carry_orientation(const MoveOutcome& out, const std::vector<int>& orientation, int version);

// Canonical form of a site (lexicographic; see Site).
Site canonical_site(const Polyhedron& p, MoveKind kind, Direction dir, const Site& site);

// Sites at which a move of this kind and direction applies (gleam conditions
// of inverse moves included), canonical and sorted.
std::vector<Site> enumerate_sites(const Polyhedron& p, const Gleam& gleam, MoveKind kind, Direction dir);

enum class Flavor { Sliding, Bumping, NotApplicable };
const char* flavor_name(Flavor f);

struct BranchedVersion {
  int version = 0;
  int orientation = 0;  // created region, relative to its stored circuit
  Flavor flavor = Flavor::NotApplicable;
  int delta = -1;          // bumping only: the region Delta of the after shadow
  std::string case_label;  // OneTwo only
};

// Region created by a forward move whose orientation is the version choice
// (the bigon of a lune, the triangle of a 2->3, the new region of a 1->2).
int versioned_region(const MoveOutcome& out);

// Flavor of a forward branched lune or 2->3 (out.orientation must be set).
// Bumping: the versioned region is preferred for none of its edges and at
// each new vertex the preferred wings of its two edges lie toward a common
// third slot. Delta is then read off the corner pattern at those vertices.
struct FlavorInfo {
  Flavor flavor = Flavor::NotApplicable;
  int delta = -1;
};
FlavorInfo classify_flavor(const MoveOutcome& out);

// One row of the 1->2 table. Signs are those of R1..R6 normalised so that
// R1 is positive; each delta is coef * R_k, k = 0 meaning the zero class.
struct OneTwoCase {
  const char* label;
  const char* signs;
  char r7;
  int eul_coef, eul_region;
  int gl_coef, gl_region;
  int c1_coef, c1_region;
};
const std::vector<OneTwoCase>& one_two_case_table();

// Labelling of a branched 1->2: signs of R1..R6 and r7 relative to the
// reference branching of the vertex, and the regions carrying R1..R6 in the
// after shadow.
struct OneTwoLabels {
  std::string signs;  // normalised, R1 = '+'
  char r7 = '+';
  std::array<int, 7> regions{};  // regions[k] for R_k, k = 1..6; regions[0] unused
  const OneTwoCase* row = nullptr;
};
OneTwoLabels one_two_labels(const Polyhedron& before, const std::vector<int>& before_orientation,
                            const MoveInstance& m, const MoveOutcome& out);

std::vector<BranchedVersion> branched_versions(const BranchedShadow& s, MoveKind kind, const Site& site);

// Local model of the 1->2 move on a vertex whose six corners lie in six
// distinct regions: every local branching of the vertex, each admissible
// orientation of r7, with signs relative to the reference branching.
struct OneTwoRaw {
  std::string signs;   // six signs, not normalised
  char r7 = '+';
};
struct OneTwoCaseRow {
  std::string signs;   // normalised, R1 = '+'
  std::string r7;      // "+", "-" or "±"
};
struct OneTwoEnumeration {
  int local_branchings = 0;
  std::vector<OneTwoRaw> raw;
  std::vector<OneTwoCaseRow> rows;  // in the order of one_two_case_table
};
OneTwoEnumeration enumerate_one_two_cases();

// The local model used above: 5 vertices, 6 regions, and a vertex whose six
// corners lie in six distinct regions.
inline constexpr int kOneTwoModelVertex = 3;
PolyhedronData one_two_model_data();

// Orbits of branched forward versions of a lune or 2->3 over a corpus,
// counted up to the automorphisms of the move ball and global reversal.
struct VersionCensus {
  int sliding = 0;
  int bumping = 0;
  long raw_versions = 0;
  int automorphisms = 0;
};
VersionCensus version_census(MoveKind kind, const std::vector<Polyhedron>& corpus, int region_bound = 12);

// Gleam (doubled) given to the region created by a forward 1->2 move.
int one_two_new_region_gleam2();

// Doubled gleam change of the six old regions through the vertex, indexed by
// the germ of the before-vertex in arrangement labels.
std::array<int, 6> one_two_gleam_shift2();

// Arrangement of the faces of the old vertex used for a given sliding germ.
Perm4 one_two_arrangement(const std::array<int, 2>& germ);

bool isomorphic(const Polyhedron& a, const Gleam& ga, const Polyhedron& b, const Gleam& gb);

}  // namespace shadows
