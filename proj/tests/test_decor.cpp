#include <doctest.h>

#include "shadows/decor.hpp"
#include "shadows/fixtures.hpp"

using namespace shadows;

TEST_CASE("enumerated branchings are branchings and closed under reversal") {
  for (const Polyhedron& p : enumerate_polyhedra(2)) {
    const auto all = enumerate_branchings(p);
    for (std::size_t k = 0; k < all.size(); ++k) {
      CHECK(is_branching(p, all[k].orientation));
      if (k > 0) CHECK(all[k - 1].orientation < all[k].orientation);
      bool found = false;
      for (const Branching& b : all) found = found || b == all[k].flipped();
      CHECK(found);
    }
  }
}

TEST_CASE("branching counts of the named fixtures") {
  CHECK(enumerate_branchings(Polyhedron(fixture("abalone").doc.poly)).size() == 8);
  CHECK(enumerate_branchings(Polyhedron(fixture("bing").doc.poly)).size() == 2);
}

TEST_CASE("the preferred wing induces the minority direction") {
  for (const Polyhedron& p : enumerate_polyhedra(1))
    for (const Branching& b : enumerate_branchings(p))
      for (int e = 0; e < p.edge_count(); ++e) {
        const PreferredWing pw = preferred_wing(p, b.orientation, e);
        int same = 0;
        for (int w = 0; w < 3; ++w)
          same += induced_direction(p, b.orientation, e, w) == induced_direction(p, b.orientation, e, pw.wing);
        CHECK(same == 1);
        CHECK(pw.region == p.region_of(e, pw.wing));
      }
}

TEST_CASE("minimal gleams satisfy integrality, shifted ones do not") {
  for (const Polyhedron& p : enumerate_polyhedra(2)) {
    Gleam g = minimal_gleam(p);
    CHECK(gleam_integrality_holds(p, g));
    g.doubled[0] += 1;
    CHECK_FALSE(gleam_integrality_holds(p, g));
    g.doubled[0] += 1;
    CHECK(gleam_integrality_holds(p, g));
  }
}

TEST_CASE("a non-branching is rejected by the constructor") {
  const Polyhedron p(fixture("bing").doc.poly);
  std::vector<int> o(p.region_count(), 1);
  bool some_bad = false;
  for (int mask = 0; mask < (1 << p.region_count()); ++mask) {
    for (int r = 0; r < p.region_count(); ++r) o[r] = (mask >> r) & 1 ? 1 : -1;
    if (!is_branching(p, o)) {
      some_bad = true;
      CHECK_THROWS_AS(BranchedShadow(p, minimal_gleam(p), Branching{o}), ShadowError);
    }
  }
  CHECK(some_bad);
}
