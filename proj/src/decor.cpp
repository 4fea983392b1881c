#include "shadows/decor.hpp"

#include <sstream>

namespace shadows {

Gleam zero_gleam(const Polyhedron& p) { return Gleam{std::vector<int>(p.region_count(), 0)}; }

Gleam minimal_gleam(const Polyhedron& p) { return Gleam{z2_gleams(p)}; }

bool gleam_integrality_holds(const Polyhedron& p, const Gleam& g) {
  if (static_cast<int>(g.doubled.size()) != p.region_count()) return false;
  for (int r = 0; r < p.region_count(); ++r) {
    if (((g.doubled[r] % 2) + 2) % 2 != z2_gleam(p, r)) return false;
  }
  return true;
}

Shadow::Shadow(Polyhedron p, Gleam g) : poly(std::move(p)), gleam(std::move(g)) {
  if (!gleam_integrality_holds(poly, gleam)) {
    throw ShadowError(ErrorCode::InvalidArgument, "gleam parity disagrees with the Z2-gleam");
  }
}

Branching Branching::flipped() const {
  Branching b = *this;
  for (int& o : b.orientation) o = -o;
  return b;
}

BranchedShadow::BranchedShadow(Polyhedron p, Gleam g, Branching b)
    : poly(std::move(p)), gleam(std::move(g)), branching(std::move(b)) {
  if (!gleam_integrality_holds(poly, gleam)) {
    throw ShadowError(ErrorCode::InvalidArgument, "gleam parity disagrees with the Z2-gleam");
  }
  if (static_cast<int>(branching.orientation.size()) != poly.region_count() ||
      !is_branching(poly, branching.orientation)) {
    throw ShadowError(ErrorCode::InvalidArgument, "orientation is not a branching");
  }
}

int induced_direction(const Polyhedron& p, const std::vector<int>& orientation, int edge, int wing) {
  return orientation.at(p.region_of(edge, wing)) * p.stored_dir(edge, wing);
}

bool is_branching(const Polyhedron& p, const std::vector<int>& orientation) {
  if (static_cast<int>(orientation.size()) != p.region_count()) return false;
  for (int e = 0; e < p.edge_count(); ++e) {
    int sum = 0;
    for (int w = 0; w < 3; ++w) sum += induced_direction(p, orientation, e, w);
    if (sum == 3 || sum == -3) return false;
  }
  return true;
}

std::vector<Branching> enumerate_branchings(const Polyhedron& p, int region_bound) {
  const int n = p.region_count();
  if (n > region_bound) {
    std::ostringstream os;
    os << n << " regions exceed the enumeration bound " << region_bound;
    throw ShadowError(ErrorCode::TooManyRegions, os.str());
  }
  // Each edge is checked as soon as its last region is assigned.
  std::vector<std::vector<int>> ready(n);
  for (int e = 0; e < p.edge_count(); ++e) {
    int last = 0;
    for (int w = 0; w < 3; ++w) last = std::max(last, p.region_of(e, w));
    ready[last].push_back(e);
  }
  std::vector<Branching> out;
  std::vector<int> o(n, 0);
  auto edge_ok = [&](int e) {
    int sum = 0;
    for (int w = 0; w < 3; ++w) sum += o[p.region_of(e, w)] * p.stored_dir(e, w);
    return sum != 3 && sum != -3;
  };
  auto rec = [&](auto&& self, int r) -> void {
    if (r == n) {
      out.push_back(Branching{o});
      return;
    }
    for (int sign : {-1, 1}) {
      o[r] = sign;
      bool ok = true;
      for (int e : ready[r])
        if (!edge_ok(e)) {
          ok = false;
          break;
        }
      if (ok) self(self, r + 1);
    }
    o[r] = 0;
  };
  rec(rec, 0);
  return out;
}

PreferredWing preferred_wing(const Polyhedron& p, const std::vector<int>& orientation, int edge) {
  int d[3];
  for (int w = 0; w < 3; ++w) d[w] = induced_direction(p, orientation, edge, w);
  for (int w = 0; w < 3; ++w) {
    if (d[w] != d[(w + 1) % 3] && d[w] != d[(w + 2) % 3]) return {w, p.region_of(edge, w)};
  }
  std::ostringstream os;
  os << "edge " << edge << " receives three equal directions";
  throw ShadowError(ErrorCode::InvalidArgument, os.str());
}

PreferredWing preferred_wing(const BranchedShadow& s, int edge) {
  return preferred_wing(s.poly, s.branching.orientation, edge);
}

}  // namespace shadows
