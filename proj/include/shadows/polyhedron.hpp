#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "shadows/common.hpp"

namespace shadows {

struct VertexSlot {
  int vertex = 0;
  int slot = 0;
  auto operator<=>(const VertexSlot&) const = default;
};

struct EdgeEnd {
  int edge = 0;
  int end = 0;
  auto operator<=>(const EdgeEnd&) const = default;
};

// wings[end][w] is the slot at that end's vertex to which wing w is attached.
struct Edge {
  std::array<VertexSlot, 2> ends{};
  std::array<std::array<int, 3>, 2> wings{};
  bool operator==(const Edge&) const = default;
};

// Raw, unchecked gluing data as read from a file or produced by a rewrite.
struct PolyhedronData {
  int vertex_count = 0;
  std::vector<Edge> edges;
  bool operator==(const PolyhedronData&) const = default;
};

// One directed traversal of a wing; dir is +1 along end 0 -> end 1.
struct Step {
  int edge = 0;
  int wing = 0;
  int dir = 1;
  auto operator<=>(const Step&) const = default;
};

struct Circuit {
  std::vector<Step> steps;
  Circuit reversed() const;
};

struct Region {
  int id = 0;
  Circuit boundary;
};

// The corner a circuit turns through between two consecutive steps.
struct Corner {
  int vertex = 0;
  int in_slot = 0;
  int out_slot = 0;
};

struct Violation {
  ErrorCode code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const PolyhedronData& data);

// Successor in the region-tracing dynamics. Requires bijective attachments.
Step next_step(const PolyhedronData& data, const std::vector<EdgeEnd>& slot_owner, const Step& s);

// Throws TraceIncomplete when some wing is missed or a circuit folds back on itself.
std::vector<Region> trace_regions(const PolyhedronData& data);

// A validated standard polyhedron with its traced regions. Immutable.
class Polyhedron {
 public:
  explicit Polyhedron(PolyhedronData data);

  const PolyhedronData& data() const { return data_; }
  int vertex_count() const { return data_.vertex_count; }
  int edge_count() const { return static_cast<int>(data_.edges.size()); }
  int region_count() const { return static_cast<int>(regions_.size()); }

  const Edge& edge(int e) const { return data_.edges.at(e); }
  EdgeEnd end_at(int vertex, int slot) const { return slot_owner_.at(vertex * 4 + slot); }
  const std::vector<EdgeEnd>& slot_owner() const { return slot_owner_; }

  const std::vector<Region>& regions() const { return regions_; }
  const Region& region(int r) const { return regions_.at(r); }
  int region_of(int edge, int wing) const { return wing_region_.at(edge * 3 + wing); }
  // Index of the (edge, wing) traversal within its region's stored circuit.
  int position_of(int edge, int wing) const { return wing_position_.at(edge * 3 + wing); }
  // Direction in which the stored circuit of region_of(edge, wing) traverses that wing.
  int stored_dir(int edge, int wing) const;

  int wing_of_slot(int edge, int end, int slot) const;

  // corners(r)[k] is the vertex passage between steps k and k+1 of r's circuit.
  std::vector<Corner> corners(int region) const;

 private:
  PolyhedronData data_;
  std::vector<EdgeEnd> slot_owner_;
  std::vector<Region> regions_;
  std::vector<int> wing_region_;
  std::vector<int> wing_position_;
};

int euler_characteristic(const Polyhedron& p);

int z2_gleam(const Polyhedron& p, int region);

std::vector<int> z2_gleams(const Polyhedron& p);

}  // namespace shadows
