#pragma once

#include <random>
#include <vector>

#include "shadows/common.hpp"
#include "shadows/polyhedron.hpp"

namespace shadows {

// The dual view of a standard polyhedron: one tetrahedron per vertex, one
// face per slot (face f is opposite label f), and one face pairing per edge.
// A region is a class of tetrahedron edges; the germ {i,j} at a vertex is the
// tetrahedron edge spanned by the two labels outside {i,j}.
struct FaceGluing {
  int tet = -1;
  int face = -1;
  Perm4 perm{};  // labels of this tetrahedron -> labels of the partner

  bool glued() const { return tet >= 0; }
};

class Gluing {
 public:
  explicit Gluing(int tets = 0) : faces_(tets) {}

  static Gluing from_polyhedron(const PolyhedronData& data);
  // Edges are emitted in lexicographic face order, end 0 wings sorted ascending.
  PolyhedronData to_polyhedron() const;

  int size() const { return static_cast<int>(faces_.size()); }
  int add_tet() {
    faces_.emplace_back();
    return size() - 1;
  }
  const FaceGluing& at(int tet, int face) const { return faces_.at(tet)[face]; }
  void glue(int tet, int face, int other, const Perm4& perm);
  bool complete() const;

 private:
  std::vector<std::array<FaceGluing, 4>> faces_;
};

// Germ index of the unordered slot pair {i,j}: {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}.
int germ_index(int i, int j);
std::array<int, 2> germ_slots(int g);

// For every (vertex, germ) the region through that corner, and the slot the
// stored circuit enters that corner by.
struct CornerTable {
  std::vector<int> region;    // index vertex*6 + germ
  std::vector<int> in_slot;   // index vertex*6 + germ
};
CornerTable corner_table(const Polyhedron& p);

// Canonical code of a polyhedron, optionally decorated with doubled gleams and
// orientations (empty vectors mean "absent"). Two decorated polyhedra are
// isomorphic iff their codes agree.
std::vector<int> canonical_code(const Polyhedron& p, const std::vector<int>& gleam2 = {},
                                const std::vector<int>& orientation = {});

// Relabels vertices, slots, edges, edge ends and wing order at random.
// region_map[old region] gives the region id in the relabeled polyhedron.
struct Relabeling {
  PolyhedronData data;
  std::vector<int> region_map;
  std::vector<int> orientation_factor;  // +1 if the stored circuit keeps its direction
};
Relabeling random_relabel(const Polyhedron& p, std::mt19937_64& rng);

}  // namespace shadows
